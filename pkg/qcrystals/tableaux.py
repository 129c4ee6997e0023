### tableaux.py
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
## hook words and semistandard decomposition tableaux (ssdt).
##
## a hook word is weakly decreasing up to its minimum pivot and strictly
## increasing after it: u_1 >= ... >= u_k < u_{k+1} < ... < u_N.
## a tableau is a tuple of rows (top first) of strictly decreasing length;
## every row is a hook word and each row is a longest hook subword of the
## row below it followed by itself. only adjacent rows are compared.
##
## the reading word reads the rows bottom to top, each left to right.
##
### Code:
import itertools

import numpy as np

from qcrystals import core
from qcrystals import crystal

## ==============================================
## hook words
## ==============================================
def hook_split(w):
    '''the pivot of hook word `w`: the 1-based length k of its weakly
    decreasing part. the decreasing part is maximal, so k is unique.

    returns k or None if `w` is not a hook word'''
    
    w = tuple(w)
    if len(w) == 0: raise ValueError('the empty word has no hook split')
    k = 1
    while k < len(w) and w[k] <= w[k - 1]: k += 1
    if any(w[j] >= w[j + 1] for j in range(k, len(w) - 1)): return(None)
    return(k)

def hook_word_p(w):
    '''returns True if `w` is a hook word (the empty word counts)'''
    
    return(len(w) == 0 or hook_split(w) is not None)

def hook_words(length, n):
    '''all hook words of `length` over 1..n in lexicographic order'''
    
    out = []
    for k in range(1, length + 1):
        for dec in itertools.combinations_with_replacement(range(n, 0, -1), k):
            for inc in itertools.combinations(range(dec[-1] + 1, n + 1), length - k):
                out.append(dec + inc)
    return(sorted(out))

def max_hook_subword_len(w):
    '''length of a longest hook subsequence of `w`.

    one pass over the letters keeps, per final letter x,
    dec[x] - the longest weakly decreasing subsequence ending in x
    inc[x] - the longest hook subsequence with a nonempty increasing
             part ending in x'''
    
    w = tuple(w)
    if len(w) == 0: return(0)
    m = max(w) + 1
    dec = np.zeros(m, dtype = int)
    inc = np.zeros(m, dtype = int)
    for x in w:
        new_dec = 1 + dec[x:].max()
        prev = max(dec[:x].max(initial = 0), inc[:x].max(initial = 0))
        new_inc = prev + 1 if prev > 0 else 0
        dec[x] = max(dec[x], new_dec)
        inc[x] = max(inc[x], new_inc)
    return(int(max(dec.max(), inc.max())))

## ==============================================
## the ssdt condition on a pair of adjacent rows
## upper is row i, lower is row i+1 (the shorter one)
## ==============================================
def _pair_ok_dp(upper, lower):
    return(max_hook_subword_len(tuple(lower) + tuple(upper)) == len(upper))

def _pair_ok_criterion(upper, lower):
    u, v = upper, lower
    lv = len(v)
    if any(u[0] <= v[i] for i in range(lv)): return(False)
    for i in range(lv):
        for j in range(i + 1, lv):
            if v[i] >= v[j] >= u[i + 1]: return(False)
    for i in range(lv):
        for j in range(i, lv):
            if v[j] < u[i] < u[j + 1]: return(False)
    return(True)

_ssdt_methods = {
    'criterion': _pair_ok_criterion,
    'dp': _pair_ok_dp,
}

def ssdt_shape(rows):
    return(tuple(len(r) for r in rows))

def is_ssdt(rows, method = 'criterion'):
    '''returns True if `rows` (top first) is a semistandard decomposition
    tableau. `method` is `criterion` (forbidden letter patterns between
    adjacent rows) or `dp` (longest hook subword of each row pair).

    raises ValueError if the row lengths do not strictly decrease'''
    
    rows = tuple(tuple(r) for r in rows)
    if not core.strict_partition_p(ssdt_shape(rows)):
        raise ValueError('row lengths `{}` must be strictly decreasing and positive'.format(','.join(str(len(r)) for r in rows)))
    if method not in _ssdt_methods.keys():
        raise ValueError('invalid ssdt method `{}`, use one of {}'.format(method, ', '.join(_ssdt_methods.keys())))
    pair_ok = _ssdt_methods[method]
    if not all(hook_word_p(r) for r in rows): return(False)
    return(all(pair_ok(rows[i], rows[i + 1]) for i in range(len(rows) - 1)))

## ==============================================
## reading words
## ==============================================
def reading_word(rows):
    '''readw(T): rows bottom to top, each left to right'''
    
    return(tuple(x for r in reversed(rows) for x in r))

def ssdt_from_reading_word(w, shape, check = False):
    '''split reading word `w` into rows of `shape`, bottom row first.

    returns the rows top first; with `check` raise ValueError unless
    the result is a tableau'''
    
    w = tuple(w)
    shape = tuple(shape)
    if len(w) != sum(shape):
        raise ValueError('word of length {} does not fill shape `{}`'.format(len(w), core.partition_to_str(shape)))
    rows = []
    pos = 0
    for p in reversed(shape):
        rows.insert(0, w[pos:pos + p])
        pos += p
    rows = tuple(rows)
    if check and not is_ssdt(rows):
        raise ValueError('`{}` is not the reading word of a tableau of shape `{}`'.format(core.word_to_str(w), core.partition_to_str(shape)))
    return(rows)

## ==============================================
## B(lambda)
## ==============================================
def enumerate_ssdt(shape, n):
    '''all tableaux of `shape` over 1..n, in lexicographic order of
    their reading words. rows are filled bottom up, each new row tested
    against the row below it.'''
    
    shape = core.partition_check(shape, 'shape')
    if len(shape) == 0: return([()])
    if len(shape) > n: return([])
    words = {p: hook_words(p, n) for p in set(shape)}
    acc = []
    results = []

    def _fill(i):
        if i < 0:
            results.append(tuple(reversed(acc)))
            return
        for v in words[shape[i]]:
            if len(acc) > 0 and not _pair_ok_criterion(v, acc[-1]): continue
            acc.append(v)
            _fill(i - 1)
            acc.pop()

    _fill(len(shape) - 1)
    return(results)

def highest_tableau(shape, n = None):
    '''T^lambda: row k holds m-k+1 repeated lambda_m - lambda_{m+1}
    times for m = r down to k'''
    
    shape = core.partition_check(shape, 'shape')
    r = len(shape)
    if n is not None and r > n:
        raise ValueError('shape `{}` has more than n={} rows'.format(core.partition_to_str(shape), n))
    parts = shape + (0,)
    rows = []
    for k in range(1, r + 1):
        row = []
        for m in range(r, k - 1, -1):
            row.extend([m - k + 1] * (parts[m - 1] - parts[m]))
        rows.append(tuple(row))
    return(tuple(rows))

def lowest_tableau(shape, n):
    '''L^lambda: row k is (n-k+1) repeated lambda_k times'''
    
    shape = core.partition_check(shape, 'shape')
    if len(shape) > n:
        raise ValueError('shape `{}` has more than n={} rows'.format(core.partition_to_str(shape), n))
    return(tuple(tuple([n - k] * p) for k, p in enumerate(shape)))

## ==============================================
## operators on tableaux through the reading word
## ==============================================
def apply_f_ssdt(rows, x):
    '''f_x on a tableau; None when undefined'''
    
    v = crystal.apply_f(reading_word(rows), x)
    if v is None: return(None)
    return(ssdt_from_reading_word(v, ssdt_shape(rows)))

def apply_e_ssdt(rows, x):
    '''e_x on a tableau; None when undefined'''
    
    v = crystal.apply_e(reading_word(rows), x)
    if v is None: return(None)
    return(ssdt_from_reading_word(v, ssdt_shape(rows)))

### End
