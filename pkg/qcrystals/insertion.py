### insertion.py
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
## the shifted insertion scheme for semistandard decomposition tableaux.
##
## T <- x   bump row by row: if row.x is a hook word append x, otherwise
##          x replaces the leftmost letter >= x of the increasing part,
##          that letter replaces the leftmost smaller letter of the
##          decreasing part, and the displaced letter moves down a row.
## T <- T'  insert the reading word of T' letter by letter.
## T -> T'  u_1 <- (u_2 <- ... (u_N <- T')), recording where each step
##          grows the shape.
## rsk      u -> (P(u), Q(u)) and back.
##
## cells are (row, column), 0-based, absolute shifted columns.
##
### Code:
from qcrystals import core
from qcrystals import tableaux

## ==============================================
## letter insertion
## ==============================================
def _bump_row(v, x):
    '''insert `x` into the row `v`

    returns (new row, bumped letter or None)'''

    if tableaux.hook_word_p(v + (x,)): return(v + (x,), None)
    k = tableaux.hook_split(v)
    j = min(p for p in range(k, len(v)) if v[p] >= x)
    uj = v[j]
    i = min(p for p in range(k) if v[p] < uj)
    ui = v[i]
    v = list(v)
    v[j] = x
    v[i] = uj
    return(tuple(v), ui)

def _insert(rows, x):
    rows = list(rows)
    r = 0
    while r < len(rows):
        new, bumped = _bump_row(rows[r], x)
        rows[r] = new
        if bumped is None: return(tuple(rows), (r, r + len(new) - 1))
        x = bumped
        r += 1
    rows.append((x,))
    return(tuple(rows), (r, r))

def _check_tableau(rows, what = 'tableau'):
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if not tableaux.is_ssdt(rows):
        raise ValueError('invalid {} `{}`, not a semistandard decomposition tableau'.format(what, core.ssdt_to_str(rows)))
    return(rows)

def insert_letter(rows, x, check = True):
    '''T <- x; the empty tableau gives the one cell tableau (x).

    returns (tableau, cell) where cell is the (row, column) created'''
    
    if check: rows = _check_tableau(rows)
    if x < 1: raise ValueError('invalid letter `{}`'.format(x))
    return(_insert(rows, int(x)))

def insert_word(rows, w, check = True):
    '''(...(T <- w_1) <- ...) <- w_N

    returns (tableau, list of created cells, one per letter)'''
    
    if check: rows = _check_tableau(rows)
    cells = []
    for x in w:
        rows, c = _insert(rows, x)
        cells.append(c)
    return(rows, cells)

def insert_tableau_left(rows, other, check = True):
    '''T <- T': insert the reading word of T' into T'''
    
    if check: other = _check_tableau(other, 'right tableau')
    return(insert_word(rows, tableaux.reading_word(other), check = check)[0])

def insert_tableau_right(rows, other, check = True):
    '''T -> T' = u_1 <- (u_2 <- ... (u_N <- T')) for readw(T) = u_1...u_N,
    together with its recording tableau of shape sh(T -> T') / sh(T').

    returns (tableau, recording tableau)'''
    
    if check:
        rows = _check_tableau(rows)
        other = _check_tableau(other, 'right tableau')
    u = tableaux.reading_word(rows)
    mu = tableaux.ssdt_shape(other)
    rec = [[None] * p for p in mu]
    cur = tuple(other)
    for k in range(1, len(u) + 1):
        x = u[len(u) - k]
        new = insert_word(((x,),), tableaux.reading_word(cur), check = False)[0]
        old_sh = tableaux.ssdt_shape(cur)
        new_sh = tableaux.ssdt_shape(new)
        grown = [r for r in range(len(new_sh)) if new_sh[r] != (old_sh[r] if r < len(old_sh) else 0)]
        if len(grown) != 1 or new_sh[grown[0]] != (old_sh[grown[0]] if grown[0] < len(old_sh) else 0) + 1:
            raise ValueError('insertion of {} changed more than one cell of `{}`'.format(x, core.ssdt_to_str(cur)))
        if grown[0] == len(rec): rec.append([])
        rec[grown[0]].append(k)
        cur = new
    return(cur, tuple(tuple(r) for r in rec))

## ==============================================
## the queer Knuth relation on B_1 = {abcd ; b < c >= d}
## each case maps into B_2 = {abcd ; a < b >= c}
## ==============================================
_knuth_relation = [
    ['acbd', lambda a, b, c, d: d <= b <= a < c],
    ['acbd', lambda a, b, c, d: b < d <= a < c],
    ['acbd', lambda a, b, c, d: b <= a < d <= c],
    ['acbd', lambda a, b, c, d: a < b < d <= c],
    ['bacd', lambda a, b, c, d: b < d <= c <= a],
    ['bacd', lambda a, b, c, d: d <= b < c <= a],
    ['abdc', lambda a, b, c, d: a < d <= b < c],
    ['abdc', lambda a, b, c, d: d <= a < b < c],
]

knuth_domain_p = lambda w: len(w) == 4 and w[1] < w[2] >= w[3]
knuth_range_p = lambda w: len(w) == 4 and w[0] < w[1] >= w[2]

def knuth_cases(w):
    '''the indices of the relation cases satisfied by `w`'''

    return([i for i, case in enumerate(_knuth_relation) if case[1](*w)])

def knuth_psi(w):
    '''the crystal isomorphism psi from B_1 to B_2 on a four letter word'''
    
    w = tuple(w)
    if not knuth_domain_p(w):
        raise ValueError('`{}` is not a four letter word abcd with b < c >= d'.format(core.word_to_str(w)))
    cases = knuth_cases(w)
    if len(cases) == 0:
        raise ValueError('no queer Knuth case applies to `{}`'.format(core.word_to_str(w)))
    pattern = _knuth_relation[cases[0]][0]
    pos = {'a': 0, 'b': 1, 'c': 2, 'd': 3}
    return(tuple(w[pos[ch]] for ch in pattern))

## ==============================================
## rsk
## ==============================================
def rsk(u):
    '''u -> (P(u), Q(u)): P folds the letters left to right, Q records
    the cell created by each letter'''
    
    P = ()
    Q = []
    for k, x in enumerate(u, 1):
        P, (r, c) = _insert(P, int(x))
        if r == len(Q): Q.append([])
        Q[r].append(k)
    return(P, tuple(tuple(r) for r in Q))

def _unbump_row(v, x):
    k = tableaux.hook_split(v)
    big = [p for p in range(k - 1) if v[p] > x]
    if len(big) == 0:
        raise ValueError('cannot reverse bump {} out of row `{}`'.format(x, core.word_to_str(v)))
    i = big[-1]
    yi = v[i]
    small = [p for p in range(k - 1, len(v)) if v[p] <= yi]
    if len(small) == 0:
        raise ValueError('cannot reverse bump {} out of row `{}`'.format(yi, core.word_to_str(v)))
    j = small[-1]
    yj = v[j]
    v = list(v)
    v[i] = x
    v[j] = yi
    return(tuple(v), yj)

def inverse_rsk(P, Q):
    '''the word u with (P(u), Q(u)) = (P, Q).

    entries N, N-1, ... of Q locate the cell to empty; its letter is
    bumped back up row by row until a letter leaves the first row.'''
    
    P = _check_tableau(P, 'insertion tableau')
    Q = tuple(tuple(r) for r in Q)
    if not core.standard_shifted_p(Q) or any(x is None for r in Q for x in r):
        raise ValueError('`{}` is not a standard shifted tableau of straight shape'.format(core.standard_to_str(Q)))
    if tableaux.ssdt_shape(P) != tableaux.ssdt_shape(Q):
        raise ValueError('shape mismatch between P `{}` and Q `{}`'.format(core.ssdt_to_str(P), core.standard_to_str(Q)))
    where = core.standard_rows_of(Q)
    rows = [list(r) for r in P]
    N = sum(len(r) for r in rows)
    u = [None] * N
    for k in range(N, 0, -1):
        r = where[k]
        x = rows[r].pop()
        if len(rows[r]) == 0: rows.pop(r)
        for row in range(r - 1, -1, -1):
            new, x = _unbump_row(tuple(rows[row]), x)
            rows[row] = list(new)
        u[k - 1] = x
    return(tuple(u))

def recording_fiber(Q, n):
    '''B_Q, the words whose recording tableau is Q; one per tableau of sh(Q)'''
    
    Q = tuple(tuple(r) for r in Q)
    shape = tuple(len(r) for r in Q)
    return(sorted(inverse_rsk(T, Q) for T in tableaux.enumerate_ssdt(shape, n)))

### End
