### crystal.py
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
## the q(n)-crystal structure on words.
##
## operator labels are ints: i > 0 is the even operator i (1 <= i < n),
## -1 is the odd operator 1bar and -i (i >= 2) is the conjugated odd
## operator ibar. every operator returns a new word or None.
##
## the even operators follow the tensor product rule with the leftmost
## letter as the first tensor factor: scanning left to right, a letter i
## cancels against a later letter i+1. f acts on the leftmost uncancelled
## i, e on the rightmost uncancelled i+1.
##
## 1bar acts on the rightmost letter in {1, 2} of the word; ibar is
## S_{w_i^-1} 1bar S_{w_i} with w_i = s_2...s_i s_1...s_{i-1}.
##
### Code:
import numpy as np

from qcrystals import core

## ==============================================
## operator labels
## ==============================================
def label_str(x):
    '''render an operator label: `2` or `1bar`'''
    
    return('{}bar'.format(-x) if x < 0 else str(x))

def label_from_str(s):
    '''parse `2`, `1bar` or `-1` into an operator label'''

    s = str(s).strip().lower()
    try:
        if s.endswith('bar'): x = -int(s[:-3])
        else: x = int(s)
    except ValueError: raise ValueError('invalid operator label `{}`, use i or ibar'.format(s))
    if x == 0 or (s.endswith('bar') and x > 0):
        raise ValueError('invalid operator label `{}`, use i or ibar'.format(s))
    return(x)

label_valid_p = lambda x, n: x != 0 and 1 <= abs(x) <= n - 1

def crystal_labels(n, bars = True):
    '''the operator labels for rank `n`: even 1..n-1, then 1bar,
    then (with `bars`) 2bar..(n-1)bar'''

    labels = list(range(1, n)) + [-1]
    if bars: labels += [-i for i in range(2, n)]
    return(labels)

## ==============================================
## even operators
## ==============================================
def _even_signature(w, i):
    '''cancel each i against a later i+1

    returns (positions of uncancelled i+1, positions of uncancelled i)'''

    opened = []
    stack = []
    for p, x in enumerate(w):
        if x == i: stack.append(p)
        elif x == i + 1:
            if stack: stack.pop()
            else: opened.append(p)
    return(opened, stack)

def _replace(w, p, x):
    return(w[:p] + (x,) + w[p + 1:])

def _f_even(w, i):
    opened, stack = _even_signature(w, i)
    if len(stack) == 0: return(None)
    return(_replace(w, stack[0], i + 1))

def _e_even(w, i):
    opened, stack = _even_signature(w, i)
    if len(opened) == 0: return(None)
    return(_replace(w, opened[-1], i))

## ==============================================
## the odd operator 1bar
## ==============================================
def _last_low(w):
    for p in range(len(w) - 1, -1, -1):
        if w[p] <= 2: return(p)
    return(None)

def _f_odd(w):
    p = _last_low(w)
    if p is None or w[p] != 1: return(None)
    return(_replace(w, p, 2))

def _e_odd(w):
    p = _last_low(w)
    if p is None or w[p] != 2: return(None)
    return(_replace(w, p, 1))

## ==============================================
## public operators
## ==============================================
def _label_check(x, n):
    if x == 0 or (n is not None and not label_valid_p(x, n)):
        raise ValueError('invalid operator label `{}`{}'.format(label_str(x), '' if n is None else ' for n={}'.format(n)))

def apply_f(w, x, n = None):
    '''apply the lowering operator labelled `x` to word `w`, with
    `x` checked against the rank `n` if given

    returns the new word or None'''
    
    _label_check(x, n)
    w = tuple(w)
    if x > 0: return(_f_even(w, x))
    elif x == -1: return(_f_odd(w))
    else: return(apply_f_bar(w, -x, n))

def apply_e(w, x, n = None):
    '''apply the raising operator labelled `x` to word `w`

    returns the new word or None'''
    
    _label_check(x, n)
    w = tuple(w)
    if x > 0: return(_e_even(w, x))
    elif x == -1: return(_e_odd(w))
    else: return(apply_e_bar(w, -x, n))

def apply_f_times(w, x, k = 1, n = None):
    '''apply f_x `k` times, None as soon as it is undefined'''
    
    for _ in range(k):
        if w is None: break
        w = apply_f(w, x, n)
    return(w)

def apply_e_times(w, x, k = 1, n = None):
    for _ in range(k):
        if w is None: break
        w = apply_e(w, x, n)
    return(w)

def eps(w, i):
    '''number of times e_i applies to `w`; None for odd labels'''
    
    if i <= 0: return(None)
    return(len(_even_signature(tuple(w), i)[0]))

def phi(w, i):
    '''number of times f_i applies to `w`; None for odd labels'''
    
    if i <= 0: return(None)
    return(len(_even_signature(tuple(w), i)[1]))

## ==============================================
## Weyl group action
## ==============================================
def weyl_s(w, i, n = None):
    '''S_i: f_i^k when k = <h_i, wt w> >= 0, else e_i^-k'''
    
    if i < 1 or (n is not None and i > n - 1):
        raise ValueError('invalid generator s_{}{}'.format(i, '' if n is None else ' for n={}'.format(n)))
    w = tuple(w)
    k = w.count(i) - w.count(i + 1)
    if k >= 0: return(apply_f_times(w, i, k))
    else: return(apply_e_times(w, i, -k))

def weyl_w(w, gens, n = None):
    '''S_{s_a1 ... s_ak} w, the rightmost generator acts first

    gens is any sequence of generator indices, checked against `n` if given'''
    
    gens = tuple(gens)
    for g in gens:
        if g < 1 or (n is not None and g > n - 1):
            raise ValueError('invalid generator s_{}{}'.format(g, '' if n is None else ' for n={}'.format(n)))
    w = tuple(w)
    for g in reversed(gens): w = weyl_s(w, g)
    return(w)

def longest_word(n):
    '''the reduced word (s_1)(s_2 s_1)(s_3 s_2 s_1)... of w_0'''
    
    return(tuple(j for k in range(1, n) for j in range(k, 0, -1)))

def wi_word(i):
    '''the reduced word s_2 ... s_i s_1 ... s_{i-1} of w_i'''
    
    return(tuple(range(2, i + 1)) + tuple(range(1, i)))

def reflect_weight(wt, i):
    '''s_i on a weight vector: swap coordinates i and i+1'''
    
    wt = list(wt)
    wt[i - 1], wt[i] = wt[i], wt[i - 1]
    return(tuple(wt))

## ==============================================
## the conjugated odd operators
## ==============================================
def _bar_check(i, n):
    if i < 2 or (n is not None and i > n - 1):
        raise ValueError('invalid odd operator index {}bar, must lie in 2..{}'.format(i, 'n-1' if n is None else n - 1))

def apply_f_bar(w, i, n = None):
    '''f_ibar = S_{w_i^-1} f_1bar S_{w_i}'''
    
    _bar_check(i, n)
    g = wi_word(i)
    v = _f_odd(weyl_w(w, g))
    if v is None: return(None)
    return(weyl_w(v, tuple(reversed(g))))

def apply_e_bar(w, i, n = None):
    '''e_ibar = S_{w_i^-1} e_1bar S_{w_i}'''
    
    _bar_check(i, n)
    g = wi_word(i)
    v = _e_odd(weyl_w(w, g))
    if v is None: return(None)
    return(weyl_w(v, tuple(reversed(g))))

## ==============================================
## extremal vectors
## ==============================================
def is_highest(w, n, a = None, even = False):
    '''returns True if `w` is a q(a)-highest weight vector, e_i w and
    e_ibar w vanishing for 1 <= i < a (a defaults to n); with `even`
    only the e_i are checked (a gl(a)-highest weight vector).'''
    
    a = n if a is None else a
    if not 1 <= a <= n: raise ValueError('invalid rank {} for n={}'.format(a, n))
    for i in range(1, a):
        if apply_e(w, i) is not None: return(False)
        if not even and apply_e(w, -i) is not None: return(False)
    return(True)

def is_strict_reverse_lattice(w, n):
    '''in every suffix of `w`, each letter i (2 <= i <= n) occurs
    strictly more often than i-1 whenever i-1 occurs'''
    
    counts = np.zeros(n + 1, dtype = int)
    for x in reversed(tuple(w)):
        if not 1 <= x <= n: return(False)
        counts[x] += 1
        low = counts[1:n]
        high = counts[2:n + 1]
        if ((low > 0) & (high <= low)).any(): return(False)
    return(True)

def is_lowest(w, n, fast = True):
    '''returns True if S_{w_0} w is highest; the fast path is the strict
    reverse lattice criterion'''
    
    if fast: return(is_strict_reverse_lattice(w, n))
    return(is_highest(weyl_w(w, longest_word(n)), n))

def highest_weight_vectors(n, N):
    '''the highest weight vectors of B^N, built one letter at a time:
    1 (x) f_1 ... f_{j-1} b for a highest b of length N-1 whenever
    wt(b) + e_j stays a strict partition.'''
    
    if N < 1: raise ValueError('word length must be positive, got {}'.format(N))
    hw = [(1,)]
    for _ in range(N - 1):
        nxt = set()
        for b in hw:
            wt = core.weight_of(b, n)
            for j in range(1, n + 1):
                nw = list(wt)
                nw[j - 1] += 1
                if not core.lambda_plus_p(nw): continue
                v = b
                for i in range(j - 1, 0, -1):
                    v = apply_f(v, i)
                    if v is None: break
                if v is not None: nxt.add((1,) + v)
        hw = sorted(nxt)
    return(hw)

def lowest_weight_vectors(n, N):
    '''S_{w_0} images of the highest weight vectors of B^N'''
    
    w0 = longest_word(n)
    return(sorted(weyl_w(b, w0) for b in highest_weight_vectors(n, N)))

## ==============================================
## connected components
## ==============================================
_edge_key = lambda e: (e[0], e[1] < 0, abs(e[1]), e[2])

def component(w, n, bars = False):
    '''the connected component of `w` under the even operators and 1bar
    (and the ibar operators with `bars`).

    returns a dict with `rank`, sorted `vertices` and sorted `edges`
    (source, label, target), one edge per defined f.'''
    
    w = core.word_check(w, n)
    labels = crystal_labels(n, bars = bars)
    seen = set([w])
    todo = [w]
    edges = set()
    while todo:
        u = todo.pop()
        for x in labels:
            v = apply_f(u, x)
            if v is not None:
                edges.add((u, x, v))
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
            v = apply_e(u, x)
            if v is not None:
                edges.add((v, x, u))
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return({'rank': n, 'vertices': sorted(seen), 'edges': sorted(edges, key = _edge_key)})

def graph_dot(graph, name = 'crystal'):
    '''render a crystal graph as DOT: solid even edges, dashed odd edges'''
    
    n = graph['rank']
    out = ['digraph {} {{'.format(name), '    node [shape=box];']
    for v in graph['vertices']:
        out.append('    "{0}" [label="{0}"];'.format(core.word_to_str(v, n)))
    for u, x, v in graph['edges']:
        style = ', style=dashed' if x < 0 else ''
        out.append('    "{}" -> "{}" [label="{}"{}];'.format(core.word_to_str(u, n), core.word_to_str(v, n), label_str(x), style))
    out.append('}')
    return('\n'.join(out) + '\n')

def graph_json(graph):
    n = graph['rank']
    return({
        'rank': n,
        'vertices': [core.word_to_str(v, n) for v in graph['vertices']],
        'edges': [{'source': core.word_to_str(u, n), 'label': label_str(x), 'target': core.word_to_str(v, n)} for u, x, v in graph['edges']],
    })

### End
