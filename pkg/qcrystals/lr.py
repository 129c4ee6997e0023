### lr.py
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
## shifted Littlewood-Richardson coefficients f^nu_{lambda,mu}, the
## multiplicity of B(nu) in B(lambda) (x) B(mu), and the decomposition
## of B^N.
##
## decompose_tensor computes the same decomposition four ways:
##
## lattice    - add a cell at row n-u_k+1 to mu for each letter of
##              u in B(lambda), right to left; keep u when every step
##              stays strict
## insertion  - keep T in B(lambda) when T <- L^mu is a lowest tableau
## tableaux   - count the recording tableaux of shape nu/mu whose row
##              word is a tableau of shape lambda
## components - scan B(lambda) (x) B(mu) for lowest weight vectors
##
## a decomposition is a dict {nu: multiplicity}.
##
### Code:
import itertools

from qcrystals import core
from qcrystals import crystal
from qcrystals import tableaux
from qcrystals import insertion
from qcrystals import utils

## ==============================================
## add-a-cell chains
## ==============================================
def chain_from_word(u, mu, n):
    '''mu <- (n-u_N+1) <- ... <- (n-u_1+1)

    returns a dict with the `base` partition, the added `rows` (1-based,
    in the order added) and the final padded `shape`, or None when some
    step leaves the strict partitions.'''
    
    shape = list(core.pad_partition(mu, n))
    rows = []
    for x in reversed(tuple(u)):
        j = n - x + 1
        shape[j - 1] += 1
        if not core.lambda_plus_p(shape): return(None)
        rows.append(j)
    return({'base': tuple(mu), 'rows': tuple(rows), 'shape': tuple(shape)})

def _incompatible_p(lam, mu, n):
    return(len(lam) > n or len(mu) > n)

def lr_set(lam, mu, nu, n):
    '''the reading words u of B(lambda) with wt(u) = w_0(nu - mu) whose
    chain from mu stays strict'''
    
    lam = core.partition_check(lam, 'lambda')
    mu = core.partition_check(mu, 'mu')
    nu = core.partition_check(nu, 'nu')
    if _incompatible_p(lam, mu, n) or len(nu) > n: return(set())
    if core.partition_size(nu) != core.partition_size(lam) + core.partition_size(mu): return(set())
    want = tuple(reversed([a - b for a, b in zip(core.pad_partition(nu, n), core.pad_partition(mu, n))]))
    out = set()
    for T in tableaux.enumerate_ssdt(lam, n):
        u = tableaux.reading_word(T)
        if core.weight_of(u, n) != want: continue
        c = chain_from_word(u, mu, n)
        if c is not None and core.strip_partition(c['shape']) == nu: out.add(u)
    return(out)

## ==============================================
## the four decompositions
## ==============================================
def _add(dec, nu, k = 1):
    nu = core.strip_partition(nu)
    dec[nu] = dec.get(nu, 0) + k

def _decompose_lattice(lam, mu, n):
    dec = {}
    for T in tableaux.enumerate_ssdt(lam, n):
        c = chain_from_word(tableaux.reading_word(T), mu, n)
        if c is not None: _add(dec, c['shape'])
    return(dec)

def _decompose_insertion(lam, mu, n):
    dec = {}
    L = tableaux.lowest_tableau(mu, n)
    for T in tableaux.enumerate_ssdt(lam, n):
        S = insertion.insert_tableau_left(T, L, check = False)
        sh = tableaux.ssdt_shape(S)
        if len(sh) <= n and S == tableaux.lowest_tableau(sh, n): _add(dec, sh)
    return(dec)

def _decompose_tableaux(lam, mu, n):
    dec = {}
    size = core.partition_size(lam) + core.partition_size(mu)
    for nu in core.strict_partitions(size, n):
        if not core.shape_contains_p(nu, mu): continue
        k = len(lr_tilde_tableaux(lam, mu, nu, n))
        if k > 0: _add(dec, nu, k)
    return(dec)

def _decompose_components(lam, mu, n):
    dec = {}
    right = [tableaux.reading_word(T) for T in tableaux.enumerate_ssdt(mu, n)]
    for T in tableaux.enumerate_ssdt(lam, n):
        u = tableaux.reading_word(T)
        for v in right:
            if crystal.is_lowest(u + v, n):
                _add(dec, reversed(core.weight_of(u + v, n)))
    return(dec)

_lr_methods = {
    'lattice': [lambda args: _decompose_lattice(**args), '''add-a-cell chains over B(lambda)'''],
    'insertion': [lambda args: _decompose_insertion(**args), '''T <- L^mu lowest over B(lambda)'''],
    'tableaux': [lambda args: _decompose_tableaux(**args), '''shifted LR recording tableaux'''],
    'components': [lambda args: _decompose_components(**args), '''lowest weight vectors of B(lambda) (x) B(mu)'''],
}

lr_method_names = lambda: list(_lr_methods.keys())

def decompose_tensor(lam, mu, n, method = 'lattice', size_limit = 10, verbose = False):
    '''B(lambda) (x) B(mu) as {nu: f^nu_{lambda,mu}}.

    the `components` scan refuses inputs with |lambda| + |mu| above
    `size_limit`.'''
    
    lam = core.partition_check(lam, 'lambda')
    mu = core.partition_check(mu, 'mu')
    if method not in _lr_methods:
        raise ValueError('unknown method `{}`, use one of {}'.format(method, ', '.join(lr_method_names())))
    if method == 'components' and core.partition_size(lam) + core.partition_size(mu) > size_limit:
        raise ValueError('|lambda| + |mu| = {} exceeds the components size limit {}'.format(core.partition_size(lam) + core.partition_size(mu), size_limit))
    if _incompatible_p(lam, mu, n): return({})
    if verbose:
        utils.echo_msg('decomposing B({}) x B({}) for n={} by {}'.format(core.partition_to_str(lam), core.partition_to_str(mu), n, method))
    return(_lr_methods[method][0]({'lam': lam, 'mu': mu, 'n': n}))

def lr_tilde_tableaux(lam, mu, nu, n):
    '''the standard shifted tableaux Q of shape nu/mu whose word
    (n-r_N+1) ... (n-r_1+1), r_k the row of k, reads a tableau of shape
    lambda'''
    
    lam = core.partition_check(lam, 'lambda')
    mu = core.partition_check(mu, 'mu')
    nu = core.partition_check(nu, 'nu')
    if not core.shape_contains_p(nu, mu):
        raise ValueError('mu `{}` is not contained in nu `{}`'.format(core.partition_to_str(mu), core.partition_to_str(nu)))
    N = core.partition_size(lam)
    if core.partition_size(nu) - core.partition_size(mu) != N or len(lam) > n or len(nu) > n: return([])
    out = []
    for Q in core.enumerate_standard_shifted(nu, mu):
        where = core.standard_rows_of(Q)
        w = tuple(n - where[k] for k in range(N, 0, -1))
        if tableaux.is_ssdt(tableaux.ssdt_from_reading_word(w, lam)): out.append(Q)
    return(out)

def lr_coefficient(lam, mu, nu, n, method = 'lattice'):
    '''f^nu_{lambda,mu}; 0 when the shapes cannot fit'''
    
    lam = core.partition_check(lam, 'lambda')
    mu = core.partition_check(mu, 'mu')
    nu = core.partition_check(nu, 'nu')
    if not core.shape_contains_p(nu, mu) or core.partition_size(nu) != core.partition_size(lam) + core.partition_size(mu): return(0)
    return(decompose_tensor(lam, mu, n, method = method).get(nu, 0))

## ==============================================
## lowest weight pairs
## ==============================================
def lowest_pair(Q, lam, mu, n):
    '''the lowest weight vector T (x) L^mu of B(lambda) (x) B(mu) whose
    pair insertion records Q'''
    
    Q = tuple(tuple(r) for r in Q)
    where = core.standard_rows_of(Q)
    N = len(where)
    w = tuple(n - where[k] for k in range(N, 0, -1))
    return(tableaux.ssdt_from_reading_word(w, lam, check = True), tableaux.lowest_tableau(mu, n))

def tensor_lowest_vectors(lam, mu, n):
    '''all pairs (T, T') in B(lambda) x B(mu) with readw(T)readw(T') lowest'''
    
    right = tableaux.enumerate_ssdt(mu, n)
    return([(T, S) for T in tableaux.enumerate_ssdt(lam, n) for S in right
            if crystal.is_lowest(tableaux.reading_word(T) + tableaux.reading_word(S), n)])

## ==============================================
## B^N
## ==============================================
def _power_tableaux(n, N):
    return({lam: core.standard_shifted_count(lam) for lam in core.strict_partitions(N, n)})

def _power_components(n, N):
    dec = {}
    for w in itertools.product(range(1, n + 1), repeat = N):
        if crystal.is_lowest(w, n): _add(dec, reversed(core.weight_of(w, n)))
    return(dec)

def _power_rsk(n, N):
    seen = set()
    for w in itertools.product(range(1, n + 1), repeat = N):
        seen.add(insertion.rsk(w)[1])
    dec = {}
    for Q in seen: _add(dec, [len(r) for r in Q])
    return(dec)

_power_methods = {
    'tableaux': [lambda args: _power_tableaux(**args), '''standard shifted tableaux counts'''],
    'components': [lambda args: _power_components(**args), '''lowest weight vectors of B^N'''],
    'rsk': [lambda args: _power_rsk(**args), '''distinct recording tableaux'''],
}

power_method_names = lambda: list(_power_methods.keys())

def decompose_power(n, N, method = 'tableaux'):
    '''B^N as {lambda: f^lambda}'''
    
    if N < 1: raise ValueError('N must be positive, got {}'.format(N))
    if method not in _power_methods:
        raise ValueError('unknown method `{}`, use one of {}'.format(method, ', '.join(power_method_names())))
    return(_power_methods[method][0]({'n': n, 'N': N}))

## ==============================================
## sizes and output
## ==============================================
def crystal_size(shape, n):
    '''|B(shape)|'''

    return(len(tableaux.enumerate_ssdt(shape, n)))

def decomposition_size(dec, n):
    '''sum of multiplicity * |B(nu)|'''
    
    return(sum(m * crystal_size(nu, n) for nu, m in dec.items()))

def decomposition_json(dec):
    return([{'nu': [int(x) for x in nu], 'multiplicity': int(m)} for nu, m in sorted(dec.items(), reverse = True)])

def decomposition_to_str(dec):
    return('\n'.join('({}) {}'.format(core.partition_to_str(nu), m) for nu, m in sorted(dec.items(), reverse = True)))

### End
