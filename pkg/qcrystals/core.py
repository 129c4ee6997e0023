### core.py
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
## foundational data for the q(n) crystal code.
##
## everything here is plain, immutable python data:
##
## word       - tuple of ints, letters in 1..n, read left to right
##              (the leftmost letter is the leftmost tensor factor).
## weight     - tuple of n ints, coords[i] is the multiplicity of letter i+1
## partition  - tuple of strictly decreasing positive ints, () is empty
## ssdt       - tuple of rows (each a word), top row first
## standard   - standard shifted tableau, tuple of rows of ints where
##              the cells of a skew inner shape hold None
##
## cells of a shifted diagram are (row, column), 0-based, with row i
## starting at column i.
##
## text formats:
## word       - `2321` when n <= 9, else `12,3,11`
## ssdt       - rows top to bottom joined by `/`: `66325/421/3`
## standard   - rows joined by `/`, cells by `,`, inner cells `.`:
##              `.,.,.,1/.,2,3/4`
##
### Code:
import numpy as np

## ==============================================
## words
## ==============================================
def word_check(w, n):
    '''raise ValueError if `w` is not a word over 1..n

    returns `w` as a tuple'''

    w = tuple(w)
    for pos, x in enumerate(w):
        if not isinstance(x, (int, np.integer)) or not 1 <= x <= n:
            raise ValueError('invalid letter `{}` at position {}, letters must lie in 1..{}'.format(x, pos + 1, n))
    return(tuple(int(x) for x in w))

def word_from_str(s, n = None):
    '''parse word text, either a digit string (`2321`)
    or comma separated integers (`12,3,11`).

    returns the word as a tuple of ints'''
    
    s = str(s).strip()
    if s == '': return(())
    fields = s.split(',') if ',' in s else list(s)
    w = []
    for pos, field in enumerate(fields):
        field = field.strip()
        if not field.isdigit() or int(field) < 1:
            raise ValueError('invalid letter `{}` at position {} of `{}`, letters must be positive integers'.format(field, pos + 1, s))
        w.append(int(field))
    if n is not None: word_check(w, n)
    return(tuple(w))

def word_to_str(w, n = None):
    '''render word `w`; digits when the rank (or the largest letter) is at most 9'''

    top = n if n is not None else max(w, default = 0)
    if top <= 9: return(''.join(str(x) for x in w))
    else: return(','.join(str(x) for x in w))

def weight_of(w, n):
    '''the weight of word `w`: coords[i] counts the letter i+1

    returns a tuple of length n'''

    w = word_check(w, n)
    if len(w) == 0: return(tuple([0] * n))
    counts = np.bincount(np.asarray(w, dtype = int), minlength = n + 1)
    return(tuple(int(x) for x in counts[1:n + 1]))

## ==============================================
## strict partitions and weights
## ==============================================
def strict_partition_p(parts):
    '''returns True if `parts` is strictly decreasing and positive'''

    parts = tuple(parts)
    if any(p <= 0 for p in parts): return(False)
    return(all(parts[i] > parts[i + 1] for i in range(len(parts) - 1)))

def partition_check(parts, name = 'partition'):
    '''raise ValueError unless `parts` is a strict partition

    returns the parts as a tuple of ints'''

    parts = strip_partition(parts)
    if not strict_partition_p(parts):
        raise ValueError('invalid {} `{}`, parts must be strictly decreasing positive integers'.format(name, ','.join(str(x) for x in parts)))
    return(parts)

def partition_from_str(s, name = 'partition'):
    '''parse `6,4,2,1` into a strict partition; `` and `0` are empty'''

    from qcrystals.utils import str2ints
    return(partition_check(str2ints(s), name = name))

partition_to_str = lambda p: ','.join(str(x) for x in p) if len(p) > 0 else '0'
partition_size = lambda p: int(sum(p))

def pad_partition(parts, n):
    '''pad `parts` with zeros to length `n`'''

    parts = tuple(parts)
    if len(parts) > n:
        raise ValueError('partition `{}` has more than {} parts'.format(partition_to_str(parts), n))
    return(parts + (0,) * (n - len(parts)))

def strip_partition(v):
    '''drop the trailing zeros of `v`'''

    v = [int(x) for x in v]
    while len(v) > 0 and v[-1] == 0: v.pop()
    return(tuple(v))

def lowest_weight(parts, n):
    '''w_0 applied to the strict partition `parts`: the padded
    vector with its coordinates reversed'''

    return(tuple(reversed(pad_partition(parts, n))))

def lambda_plus_p(v):
    '''returns True if the weight `v` is strictly dominant, i.e. its
    nonzero coordinates come first and strictly decrease'''

    a = np.asarray(v, dtype = int)
    if (a < 0).any(): return(False)
    nz = a[a > 0]
    if not (a[:len(nz)] > 0).all(): return(False)
    return(bool((np.diff(nz) < 0).all()))

def strict_partitions(size, max_len = None):
    '''all strict partitions of `size`, largest first part first,
    optionally with at most `max_len` parts'''

    def _parts(rem, cap):
        if rem == 0:
            yield(())
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in _parts(rem - p, p - 1):
                yield((p,) + rest)
                
    return([p for p in _parts(size, size) if max_len is None or len(p) <= max_len])

def shape_contains_p(outer, inner):
    '''returns True if the shifted diagram of `inner` lies inside `outer`'''

    outer = strip_partition(outer)
    inner = strip_partition(inner)
    if len(inner) > len(outer): return(False)
    return(all(inner[i] <= outer[i] for i in range(len(inner))))

def shifted_cells(outer, inner = ()):
    '''the cells of the skew shifted diagram outer/inner as (row, column)'''

    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return([(i, i + j) for i in range(len(outer)) for j in range(inner[i], outer[i])])

## ==============================================
## standard shifted tableaux
## ==============================================
def standard_shape(rows):
    '''returns (outer, inner) of the standard tableau `rows`'''

    outer = tuple(len(r) for r in rows)
    inner = strip_partition([sum(1 for x in r if x is None) for r in rows])
    return(outer, inner)

def standard_shifted_p(rows):
    '''returns True if `rows` is a standard shifted tableau of its
    (possibly skew) shape: rows and columns strictly increase and
    the entries are exactly 1..N.'''

    rows = tuple(tuple(r) for r in rows)
    outer, inner = standard_shape(rows)
    if not strict_partition_p(strip_partition(outer)) or len(strip_partition(outer)) != len(outer): return(False)
    if not strict_partition_p(inner) or not shape_contains_p(outer, inner): return(False)
    for i, r in enumerate(rows):
        k = sum(1 for x in r if x is None)
        if any(x is not None for x in r[:k]) or any(x is None for x in r[k:]): return(False)
    entries = sorted(x for r in rows for x in r if x is not None)
    if entries != list(range(1, len(entries) + 1)): return(False)
    for r in rows:
        vals = [x for x in r if x is not None]
        if any(vals[j] >= vals[j + 1] for j in range(len(vals) - 1)): return(False)
    ## row i index k+1 sits above row i+1 index k
    for i in range(len(rows) - 1):
        for k, below in enumerate(rows[i + 1]):
            above = rows[i][k + 1]
            if above is not None and below is None: return(False)
            if above is not None and below is not None and above >= below: return(False)
    return(True)

def _addable_rows(kappa, outer):
    return([i for i in range(len(outer)) if kappa[i] < outer[i] and (i == 0 or kappa[i - 1] >= kappa[i] + 2)])

def _skew_check(outer, inner):
    outer = partition_check(outer, 'outer shape')
    inner = partition_check(inner, 'inner shape')
    if not shape_contains_p(outer, inner):
        raise ValueError('inner shape `{}` is not contained in `{}`'.format(partition_to_str(inner), partition_to_str(outer)))
    return(outer, inner + (0,) * (len(outer) - len(inner)))

def enumerate_standard_shifted(outer, inner = ()):
    '''all standard shifted tableaux of shape outer/inner.

    cells are added one at a time so that each intermediate shape is
    a strict partition; the order of the returned list is the
    depth-first order of that growth (rows tried top first).

    returns a list of tableaux (tuples of row tuples)'''
    
    outer, inner = _skew_check(outer, inner)
    total = sum(outer) - sum(inner)
    fill = [[None] * p for p in outer]
    kappa = list(inner)
    results = []

    def _grow(k):
        if k > total:
            results.append(tuple(tuple(r) for r in fill))
            return
        for i in _addable_rows(kappa, outer):
            fill[i][kappa[i]] = k
            kappa[i] += 1
            _grow(k + 1)
            kappa[i] -= 1
            fill[i][kappa[i]] = None

    _grow(1)
    return(results)

def standard_shifted_count(outer, inner = ()):
    '''count the standard shifted tableaux of shape outer/inner
    (f^outer for a straight shape) by summing over growth chains'''
    
    outer, inner = _skew_check(outer, inner)
    counts = {tuple(inner): 1}
    for _ in range(sum(outer) - sum(inner)):
        grown = {}
        for kappa, c in counts.items():
            for i in _addable_rows(kappa, outer):
                nk = list(kappa)
                nk[i] += 1
                grown[tuple(nk)] = grown.get(tuple(nk), 0) + c
        counts = grown
    return(counts.get(tuple(outer), 0))

def standard_rows_of(rows):
    '''returns a dict mapping each entry of a standard tableau to its row (0-based)'''

    return({x: i for i, r in enumerate(rows) for x in r if x is not None})

def standard_from_str(s):
    '''parse `.,.,.,1/.,2,3/4` (or `124/3` when every entry is one character)'''

    s = str(s).strip()
    if s == '': return(())
    rows = []
    for i, rs in enumerate(s.split('/')):
        fields = rs.split(',') if ',' in rs else list(rs)
        row = []
        for j, field in enumerate(fields):
            field = field.strip()
            if field == '.': row.append(None)
            elif field.isdigit(): row.append(int(field))
            else: raise ValueError('invalid cell `{}` at row {} column {} of `{}`'.format(field, i + 1, j + 1, s))
        rows.append(tuple(row))
    rows = tuple(rows)
    if not standard_shifted_p(rows):
        raise ValueError('`{}` is not a standard shifted tableau'.format(s))
    return(rows)

standard_to_str = lambda rows: '/'.join(','.join('.' if x is None else str(x) for x in r) for r in rows)

## ==============================================
## semistandard decomposition tableaux text
## ==============================================
def ssdt_from_str(s, n = None, check = True):
    '''parse `66325/421/3` into rows; with `check` the rows must
    form a semistandard decomposition tableau. `` and `0` are empty'''

    s = str(s).strip()
    if s == '' or s == '0': return(())
    rows = tuple(word_from_str(r, n) for r in s.split('/'))
    if any(len(r) == 0 for r in rows):
        raise ValueError('empty row in tableau `{}`'.format(s))
    if check:
        from qcrystals import tableaux
        if not tableaux.is_ssdt(rows):
            raise ValueError('`{}` is not a semistandard decomposition tableau'.format(s))
    return(rows)

def ssdt_to_str(rows, n = None):
    '''render tableau rows joined by `/`'''

    if n is None: n = max([max(r) for r in rows], default = 0)
    return('/'.join(word_to_str(r, n) for r in rows))

def tableau_grid(rows):
    '''multi-line shifted picture of a tableau (ssdt or standard)'''

    cells = [['.' if x is None else str(x) for x in r] for r in rows]
    wd = max([len(c) for r in cells for c in r], default = 1)
    return('\n'.join(' ' * ((wd + 1) * i) + ' '.join('{:>{}}'.format(c, wd) for c in r) for i, r in enumerate(cells)))

## ==============================================
## json emitters
## ==============================================
word_json = lambda w, n: {'letters': [int(x) for x in w], 'rank': n}
ssdt_json = lambda rows: {'parts': [len(r) for r in rows], 'entries': [[int(x) for x in r] for r in rows]}

def standard_json(rows):
    outer, inner = standard_shape(rows)
    return({'outer': list(outer), 'inner': list(inner), 'entries': [[x for x in r] for r in rows]})

### End
