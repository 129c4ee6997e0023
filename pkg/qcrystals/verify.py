### verify.py
##
## Copyright (c) 2020 qcrystals developers
##
## Permission is hereby granted, free of charge, to any person obtaining a copy 
## of this software and associated documentation files (the "Software"), to deal 
## in the Software without restriction, including without limitation the rights 
## to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies 
## of the Software, and to permit persons to whom the Software is furnished to do so, 
## subject to the following conditions:
##
## The above copyright notice and this permission notice shall be included in all copies or substantial portions of the Software.
##
## THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, 
## INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR 
## PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE 
## FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, 
## ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
##
### Commentary:
##
## the self-verification suite.
##
## each check sweeps a finite range exhaustively (plus a seeded random
## sample where noted) and returns its range and either None or the
## first counterexample found. checks run shared-nothing on a small
## worker pool fed from a queue; the report is assembled in check order.
##
## levels:
## quick - n=3 with words of length <= 4
## full  - adds n=4 and words of length <= 6
##
### Code:
import itertools
import threading
import time

try:
    import Queue as queue
except: import queue as queue

import numpy as np

from qcrystals import core
from qcrystals import crystal
from qcrystals import tableaux
from qcrystals import insertion
from qcrystals import lr
from qcrystals import utils

_verify_levels = {
    'quick': {
        'closure': [(3, 4)],
        'lowest': [(3, 4)],
        'ssdt': [(3, 4)],
        'insert': [(3, 4)],
        'rsk': [(3, 4)],
        'rsk_sample': (3, 8, 25),
        'commute': [(3, 4)],
        'knuth': [4],
        'pairs': [((2,), (3, 1), 3)],
        'lr': [(3, 6)],
        'lr_sample': None,
        'power': [(2, 4), (3, 4)],
    },
    'full': {
        'closure': [(3, 5), (4, 4)],
        'lowest': [(3, 6), (4, 5)],
        'ssdt': [(3, 5), (4, 4)],
        'insert': [(3, 5)],
        'rsk': [(3, 6), (4, 5)],
        'rsk_sample': (4, 10, 100),
        'commute': [(3, 5)],
        'knuth': [3, 4],
        'pairs': [((2,), (3, 1), 3), ((2, 1), (3, 1), 3)],
        'lr': [(3, 8)],
        'lr_sample': (4, 6, 6),
        'power': [(2, 6), (3, 6), (4, 6)],
    },
}

verify_level_names = lambda: list(_verify_levels.keys())

_w = core.word_to_str
_t = core.ssdt_to_str
_p = core.partition_to_str
_words = lambda n, N: itertools.product(range(1, n + 1), repeat = N)
_range_str = lambda pairs, a, b: '; '.join('{}={}, {}<={}'.format(a, x, b, y) for x, y in pairs)

def _shapes(n, max_size, min_size = 1):
    return([lam for s in range(min_size, max_size + 1) for lam in core.strict_partitions(s, n)])

## ==============================================
## crystal checks
## ==============================================
def _check_closure(cfg, rng):
    '''B(lambda) is closed under every operator, has a unique highest
    and lowest weight vector (T^lambda and L^lambda) and is connected'''
    
    for n, size in cfg['closure']:
        labels = crystal.crystal_labels(n, bars = True)
        for lam in _shapes(n, size):
            B = tableaux.enumerate_ssdt(lam, n)
            Bset = set(B)
            for T in B:
                for x in labels:
                    for op, name in ((tableaux.apply_f_ssdt, 'f'), (tableaux.apply_e_ssdt, 'e')):
                        S = op(T, x)
                        if S is not None and S not in Bset:
                            return('n={} lambda=({}): {}_{} {} = {} leaves B(lambda)'.format(n, _p(lam), name, crystal.label_str(x), _t(T), _t(S)))
            hw = [T for T in B if crystal.is_highest(tableaux.reading_word(T), n)]
            if hw != [tableaux.highest_tableau(lam, n)]:
                return('n={} lambda=({}): highest weight vectors {}'.format(n, _p(lam), ' '.join(_t(T) for T in hw)))
            lw = [T for T in B if crystal.is_lowest(tableaux.reading_word(T), n)]
            if lw != [tableaux.lowest_tableau(lam, n)]:
                return('n={} lambda=({}): lowest weight vectors {}'.format(n, _p(lam), ' '.join(_t(T) for T in lw)))
            comp = crystal.component(tableaux.reading_word(tableaux.highest_tableau(lam, n)), n)
            if set(comp['vertices']) != set(tableaux.reading_word(T) for T in B):
                return('n={} lambda=({}): component of T^lambda has {} vertices, B(lambda) has {}'.format(n, _p(lam), len(comp['vertices']), len(B)))

def _check_lowest(cfg, rng):
    '''the strict reverse lattice test agrees with S_w0 of a highest weight vector'''
    
    for n, N in cfg['lowest']:
        for k in range(1, N + 1):
            found = []
            for w in _words(n, k):
                fast = crystal.is_lowest(w, n, fast = True)
                if fast != crystal.is_lowest(w, n, fast = False):
                    return('n={} w={}: lattice test says {}'.format(n, _w(w, n), fast))
                if fast: found.append(w)
            if found != crystal.lowest_weight_vectors(n, k):
                return('n={} N={}: lowest weight vectors disagree with S_w0 of the highest'.format(n, k))

def _check_ssdt(cfg, rng):
    for n, size in cfg['ssdt']:
        for a in range(2, size + 1):
            for b in range(1, a):
                for u in tableaux.hook_words(a, n):
                    for v in tableaux.hook_words(b, n):
                        c = tableaux.is_ssdt((u, v), method = 'criterion')
                        if c != tableaux.is_ssdt((u, v), method = 'dp'):
                            return('n={} rows {}/{}: criterion says {}'.format(n, _w(u, n), _w(v, n), c))

## ==============================================
## insertion checks
## ==============================================
def _check_insert(cfg, rng):
    '''T <- x is a tableau with exactly one new cell'''
    
    for n, size in cfg['insert']:
        for lam in [()] + _shapes(n, size):
            for T in tableaux.enumerate_ssdt(lam, n):
                for x in range(1, n + 1):
                    S, (r, c) = insertion.insert_letter(T, x, check = False)
                    if not tableaux.is_ssdt(S):
                        return('({}) <- {} = {} is not a tableau'.format(_t(T), x, _t(S)))
                    old = tableaux.ssdt_shape(T) + (0,)
                    new = tableaux.ssdt_shape(S)
                    grown = [i for i in range(len(new)) if new[i] != old[i]]
                    if grown != [r] or new[r] != old[r] + 1 or c != r + new[r] - 1:
                        return('({}) <- {} = {} reports cell ({}, {})'.format(_t(T), x, _t(S), r, c))

def _check_rsk(cfg, rng):
    '''rsk is a bijection between words and matched pairs (P, Q)'''
    
    for n, N in cfg['rsk']:
        for k in range(1, N + 1):
            seen = set()
            for w in _words(n, k):
                P, Q = insertion.rsk(w)
                if insertion.inverse_rsk(P, Q) != w:
                    return('n={} w={}: inverse_rsk(rsk(w)) = {}'.format(n, _w(w, n), _w(insertion.inverse_rsk(P, Q), n)))
                seen.add(Q)
            for Q in seen:
                for T in tableaux.enumerate_ssdt(tuple(len(r) for r in Q), n):
                    if insertion.rsk(insertion.inverse_rsk(T, Q)) != (T, Q):
                        return('n={} P={} Q={}: rsk(inverse_rsk(P, Q)) differs'.format(n, _t(T), core.standard_to_str(Q)))
    if cfg['rsk_sample'] is not None:
        n, N, count = cfg['rsk_sample']
        for row in rng.integers(1, n + 1, size = (count, N)):
            w = tuple(int(x) for x in row)
            P, Q = insertion.rsk(w)
            if insertion.inverse_rsk(P, Q) != w:
                return('n={} w={}: inverse_rsk(rsk(w)) differs'.format(n, _w(w, n)))

def _check_commute(cfg, rng):
    '''P(f u) = f P(u) and Q(f u) = Q(u) as partial maps, likewise for e'''
    
    for n, N in cfg['commute']:
        labels = crystal.crystal_labels(n, bars = False)
        for k in range(1, N + 1):
            for w in _words(n, k):
                P, Q = insertion.rsk(w)
                for x in labels:
                    for op, top, name in ((crystal.apply_f, tableaux.apply_f_ssdt, 'f'), (crystal.apply_e, tableaux.apply_e_ssdt, 'e')):
                        v = op(w, x)
                        S = top(P, x)
                        if v is None and S is None: continue
                        if v is None or S is None or insertion.rsk(v) != (S, Q):
                            return('n={} w={} {}_{}: P(w)={}'.format(n, _w(w, n), name, crystal.label_str(x), _t(P)))

def _check_knuth(cfg, rng):
    '''the Knuth cases partition B_1, psi is a bijection onto B_2 and
    commutes with every operator'''
    
    for n in cfg['knuth']:
        labels = crystal.crystal_labels(n, bars = True)
        B1 = [w for w in _words(n, 4) if insertion.knuth_domain_p(w)]
        B2 = [w for w in _words(n, 4) if insertion.knuth_range_p(w)]
        images = set()
        for w in B1:
            cases = insertion.knuth_cases(w)
            if len(cases) != 1:
                return('n={} w={}: satisfies knuth cases {}'.format(n, _w(w, n), cases))
            v = insertion.knuth_psi(w)
            if not insertion.knuth_range_p(v):
                return('n={} w={}: psi(w)={} lies outside B_2'.format(n, _w(w, n), _w(v, n)))
            images.add(v)
        if len(images) != len(B1) or len(B1) != len(B2):
            return('n={}: psi is not a bijection B_1 -> B_2'.format(n))
        for w in B1:
            for x in labels:
                for op, name in ((crystal.apply_f, 'f'), (crystal.apply_e, 'e')):
                    v = op(w, x)
                    a = None if v is None else insertion.knuth_psi(v)
                    b = op(insertion.knuth_psi(w), x)
                    if a != b:
                        return('n={} w={} {}_{}: psi({}_{} w)={} but {}_{} psi(w)={}'.format(
                            n, _w(w, n), name, crystal.label_str(x), name, crystal.label_str(x),
                            None if a is None else _w(a, n), name, crystal.label_str(x), None if b is None else _w(b, n)))

def _check_pairs(cfg, rng):
    '''T -> T' equals T <- T' and its recording tableau is constant on crystal orbits'''
    
    for lam, mu, n in cfg['pairs']:
        labels = crystal.crystal_labels(n, bars = False)
        right = tableaux.enumerate_ssdt(mu, n)
        for T in tableaux.enumerate_ssdt(lam, n):
            for S in right:
                prod, Q = insertion.insert_tableau_right(T, S, check = False)
                if prod != insertion.insert_tableau_left(T, S, check = False):
                    return('{} -> {} = {} differs from {} <- {}'.format(_t(T), _t(S), _t(prod), _t(T), _t(S)))
                if not core.standard_shifted_p(Q) or core.standard_shape(Q) != (tableaux.ssdt_shape(prod), mu):
                    return('{} -> {}: bad recording tableau {}'.format(_t(T), _t(S), core.standard_to_str(Q)))
                lt = len(tableaux.reading_word(T))
                for x in labels:
                    v = crystal.apply_f(tableaux.reading_word(T) + tableaux.reading_word(S), x)
                    if v is None: continue
                    fT = tableaux.ssdt_from_reading_word(v[:lt], lam)
                    fS = tableaux.ssdt_from_reading_word(v[lt:], mu)
                    if insertion.insert_tableau_right(fT, fS, check = False)[1] != Q:
                        return('{} -> {}: recording changes under f_{}'.format(_t(T), _t(S), crystal.label_str(x)))

## ==============================================
## decomposition checks
## ==============================================
def _lr_pairs(n, size):
    shapes = [()] + _shapes(n, size)
    return([(lam, mu) for lam in shapes for mu in shapes if core.partition_size(lam) + core.partition_size(mu) <= size])

def _lr_pairs_for(cfg, rng):
    pairs = [(lam, mu, n) for n, size in cfg['lr'] for lam, mu in _lr_pairs(n, size)]
    if cfg['lr_sample'] is not None:
        n, size, count = cfg['lr_sample']
        pool = _lr_pairs(n, size)
        for i in rng.choice(len(pool), size = min(count, len(pool)), replace = False):
            pairs.append(pool[int(i)] + (n,))
    return(pairs)

def _check_lr_agree(cfg, rng):
    '''all four tensor decompositions agree and conserve |B(lambda)| |B(mu)|'''
    
    sizes = {}
    size_of = lambda shape, n: sizes.setdefault((shape, n), lr.crystal_size(shape, n))
    for lam, mu, n in _lr_pairs_for(cfg, rng):
        decs = {m: lr.decompose_tensor(lam, mu, n, method = m) for m in lr.lr_method_names()}
        base = decs['lattice']
        for m, dec in decs.items():
            if dec != base:
                return('n={} lambda=({}) mu=({}): {} gives {{{}}}, lattice gives {{{}}}'.format(
                    n, _p(lam), _p(mu), m, lr.decomposition_to_str(dec).replace('\n', ', '), lr.decomposition_to_str(base).replace('\n', ', ')))
        total = sum(mult * size_of(nu, n) for nu, mult in base.items())
        if total != size_of(lam, n) * size_of(mu, n):
            return('n={} lambda=({}) mu=({}): sum f |B(nu)| = {} != {}'.format(n, _p(lam), _p(mu), total, size_of(lam, n) * size_of(mu, n)))
        for nu, mult in base.items():
            if len(lr.lr_set(lam, mu, nu, n)) != mult:
                return('n={} lambda=({}) mu=({}) nu=({}): lr_set size differs from {}'.format(n, _p(lam), _p(mu), _p(nu), mult))

def _check_lowest_pairs(cfg, rng):
    '''each LR recording tableau Q rebuilds a lowest pair T (x) L^mu with
    T -> L^mu = (L^nu, Q); chain validity matches the lowest weight test'''
    
    for lam, mu, n in _lr_pairs_for(cfg, rng):
        L = tableaux.lowest_tableau(mu, n)
        for T in tableaux.enumerate_ssdt(lam, n):
            u = tableaux.reading_word(T)
            chain = lr.chain_from_word(u, mu, n)
            if (chain is not None) != crystal.is_lowest(u + tableaux.reading_word(L), n):
                return('n={} T={} mu=({}): chain and lowest weight test disagree'.format(n, _t(T), _p(mu)))
        for nu in lr.decompose_tensor(lam, mu, n):
            for Q in lr.lr_tilde_tableaux(lam, mu, nu, n):
                T, S = lr.lowest_pair(Q, lam, mu, n)
                if insertion.insert_tableau_right(T, S, check = False) != (tableaux.lowest_tableau(nu, n), Q):
                    return('n={} Q={}: {} -> {} is not (L^({}), Q)'.format(n, core.standard_to_str(Q), _t(T), _t(S), _p(nu)))

def _check_power(cfg, rng):
    '''B^N decomposes the same way by tableaux counts, lowest weight
    vectors and recording tableaux, with sum f^lambda |B(lambda)| = n^N'''
    
    for n, N in cfg['power']:
        for k in range(1, N + 1):
            decs = {m: lr.decompose_power(n, k, method = m) for m in lr.power_method_names()}
            base = decs['tableaux']
            for m, dec in decs.items():
                if dec != base:
                    return('n={} N={}: {} disagrees with the tableaux count'.format(n, k, m))
            if lr.decomposition_size(base, n) != n ** k:
                return('n={} N={}: sum f |B(lambda)| = {} != {}'.format(n, k, lr.decomposition_size(base, n), n ** k))

_verify_checks = {
    'crystal-closure': [lambda c, r: _check_closure(c, r), lambda c: _range_str(c['closure'], 'n', '|lambda|')],
    'lowest-criterion': [lambda c, r: _check_lowest(c, r), lambda c: _range_str(c['lowest'], 'n', 'N')],
    'ssdt-criterion': [lambda c, r: _check_ssdt(c, r), lambda c: _range_str(c['ssdt'], 'n', 'row length')],
    'insert-letter': [lambda c, r: _check_insert(c, r), lambda c: _range_str(c['insert'], 'n', '|lambda|')],
    'rsk-bijection': [lambda c, r: _check_rsk(c, r), lambda c: _range_str(c['rsk'], 'n', 'N') + '; {} random words n={}, N={}'.format(c['rsk_sample'][2], c['rsk_sample'][0], c['rsk_sample'][1])],
    'rsk-commutation': [lambda c, r: _check_commute(c, r), lambda c: _range_str(c['commute'], 'n', 'N')],
    'queer-knuth': [lambda c, r: _check_knuth(c, r), lambda c: '; '.join('n={}, N=4'.format(n) for n in c['knuth'])],
    'pair-insertion': [lambda c, r: _check_pairs(c, r), lambda c: '; '.join('B({}) x B({}), n={}'.format(_p(a), _p(b), n) for a, b, n in c['pairs'])],
    'lr-agreement': [lambda c, r: _check_lr_agree(c, r), lambda c: _range_str(c['lr'], 'n', '|lambda|+|mu|') + ('' if c['lr_sample'] is None else '; {} random pairs n={}'.format(c['lr_sample'][2], c['lr_sample'][0]))],
    'lowest-pairs': [lambda c, r: _check_lowest_pairs(c, r), lambda c: _range_str(c['lr'], 'n', '|lambda|+|mu|')],
    'power-decomposition': [lambda c, r: _check_power(c, r), lambda c: _range_str(c['power'], 'n', 'N')],
}

verify_check_names = lambda: list(_verify_checks.keys())

## ==============================================
## the worker pool
## ==============================================
def _run_check(name, level, seed, idx):
    cfg = _verify_levels[level]
    rng = np.random.default_rng([seed, idx])
    check = _verify_checks[name]
    try:
        ce = check[0](cfg, rng)
    except Exception as e:
        ce = 'raised {}: {}'.format(type(e).__name__, e)
    return({'name': name, 'range': check[1](cfg), 'status': 'pass' if ce is None else 'fail', 'counterexample': ce})

def _verify_queue(q):
    '''run queued checks, storing each result under its name'''

    while True:
        work = q.get()
        if not work[-1]():
            name, level, seed, idx, results, stop = work
            results[name] = _run_check(name, level, seed, idx)
        q.task_done()

class verify_from_queue(threading.Thread):
    
    def __init__(self, names, level = 'quick', seed = 0, callback = lambda: False):
        threading.Thread.__init__(self)
        self.verify_q = queue.Queue()
        self.names = names
        self.level = level
        self.seed = seed
        self.results = {}
        self.stop = callback

    def run(self):
        for _ in range(3):
            t = threading.Thread(target = _verify_queue, args = (self.verify_q,))
            t.daemon = True
            t.start()

        for name, idx in self.names:
            self.verify_q.put([name, self.level, self.seed, idx, self.results, self.stop])

        self.verify_q.join()

def verify_run(level = 'quick', seed = 0, names = None, verbose = False):
    '''run the named checks (default all) at `level`.

    returns a report dict with `level`, `seed`, `checks` in check order
    and an overall `status` of `pass` or `fail`.'''
    
    if level not in _verify_levels:
        raise ValueError('unknown verify level `{}`, use one of {}'.format(level, ', '.join(verify_level_names())))
    all_names = verify_check_names()
    names = all_names if names is None else list(names)
    for name in names:
        if name not in _verify_checks:
            raise ValueError('unknown check `{}`, use one of {}'.format(name, ', '.join(all_names)))
    ## idx is the position in the full list so a check keeps its stream when run alone
    vq = verify_from_queue([(n, all_names.index(n)) for n in all_names if n in names], level = level, seed = seed)
    if verbose: pb = utils._progress('running {} {} check(s) with seed {}...'.format(len(names), level, seed))
    vq.start()
    while True:
        time.sleep(.2)
        if verbose: pb.update()
        if not vq.is_alive(): break
    checks = [vq.results[n] for n in all_names if n in names]
    status = 'pass' if all(c['status'] == 'pass' for c in checks) else 'fail'
    if verbose:
        pb.opm = 'ran {} {} check(s), {} failed.'.format(len(checks), level, sum(1 for c in checks if c['status'] != 'pass'))
        pb.end(0 if status == 'pass' else -1)
    return({'level': level, 'seed': seed, 'checks': checks, 'status': status})

def report_to_str(report):
    out = ['verify level={} seed={}'.format(report['level'], report['seed'])]
    for c in report['checks']:
        out.append('{:6} {:20} {}'.format(c['status'], c['name'], c['range']))
        if c['counterexample'] is not None: out.append('       counterexample: {}'.format(c['counterexample']))
    out.append('status: {}'.format(report['status']))
    return('\n'.join(out) + '\n')

### End
