import itertools

import pytest
from hypothesis import given, strategies as st

from qcrystals import core
from qcrystals import crystal
from qcrystals import tableaux
from conftest import word_strategy, ssdt_strategy

def _brute_hook_len(w):
    for k in range(len(w), 0, -1):
        for idx in itertools.combinations(range(len(w)), k):
            if tableaux.hook_word_p(tuple(w[i] for i in idx)): return(k)
    return(0)

_small_shapes = [lam for s in range(1, 6) for lam in core.strict_partitions(s, 3)]

def test_hook_split():
    assert tableaux.hook_split((6, 6, 1, 3, 5)) == 3
    assert tableaux.hook_split((3, 2, 1, 3)) == 3
    assert tableaux.hook_split((1, 2, 3)) == 1
    assert tableaux.hook_split((2, 1, 3, 2)) is None
    assert tableaux.hook_split((3, 2, 2)) == 3
    with pytest.raises(ValueError):
        tableaux.hook_split(())

def test_hook_words():
    assert tableaux.hook_word_p(())
    assert len(tableaux.hook_words(2, 3)) == 9
    assert len(tableaux.hook_words(3, 3)) == 19
    assert len(tableaux.hook_words(4, 3)) == 33
    hw = tableaux.hook_words(4, 3)
    assert hw == sorted(hw)
    assert hw == [w for w in itertools.product(range(1, 4), repeat = 4) if tableaux.hook_word_p(w)]

@given(word_strategy(n = 4, max_len = 7))
def test_max_hook_subword_matches_brute_force(w):
    assert tableaux.max_hook_subword_len(w) == _brute_hook_len(w)

def test_is_ssdt():
    assert tableaux.is_ssdt(((6, 6, 3, 2, 5), (4, 2, 1), (3,)))
    assert tableaux.is_ssdt(((3, 3, 2, 3), (1, 1)))
    assert tableaux.is_ssdt(())
    assert not tableaux.is_ssdt(((1, 2), (2,)))
    assert not tableaux.is_ssdt(((2, 1, 3, 2),))
    with pytest.raises(ValueError, match = 'strictly decreasing'):
        tableaux.is_ssdt(((1,), (2,)))
    with pytest.raises(ValueError, match = 'method'):
        tableaux.is_ssdt(((1,),), method = 'bogus')

@st.composite
def _row_pair(draw):
    b = draw(st.integers(min_value = 1, max_value = 3))
    a = draw(st.integers(min_value = b + 1, max_value = 5))
    return(draw(st.sampled_from(tableaux.hook_words(a, 4))), draw(st.sampled_from(tableaux.hook_words(b, 4))))

@given(_row_pair())
def test_ssdt_criterion_matches_dp(rows):
    assert tableaux.is_ssdt(rows, method = 'criterion') == tableaux.is_ssdt(rows, method = 'dp')

def test_reading_word():
    T = ((6, 6, 3, 2, 5), (4, 2, 1), (3,))
    assert tableaux.reading_word(T) == (3, 4, 2, 1, 6, 6, 3, 2, 5)
    assert tableaux.ssdt_from_reading_word((3, 4, 2, 1, 6, 6, 3, 2, 5), (5, 3, 1)) == T
    with pytest.raises(ValueError):
        tableaux.ssdt_from_reading_word((1, 2), (3,))
    with pytest.raises(ValueError):
        tableaux.ssdt_from_reading_word((2, 1, 2), (2, 1), check = True)

def test_extremal_tableaux():
    assert tableaux.highest_tableau((6, 4, 2, 1), 4) == ((4, 3, 2, 2, 1, 1), (3, 2, 1, 1), (2, 1), (1,))
    assert tableaux.lowest_tableau((6, 4, 2, 1), 4) == ((4,) * 6, (3,) * 4, (2, 2), (1,))
    assert tableaux.lowest_tableau((3, 1), 3) == ((3, 3, 3), (2,))
    with pytest.raises(ValueError):
        tableaux.lowest_tableau((3, 2, 1), 2)

def test_crystal_sizes():
    assert len(tableaux.enumerate_ssdt((2,), 3)) == 9
    assert len(tableaux.enumerate_ssdt((3, 1), 3)) == 24
    assert len(tableaux.enumerate_ssdt((4,), 3)) == 33
    assert len(tableaux.enumerate_ssdt((1,), 5)) == 5
    assert tableaux.enumerate_ssdt((), 3) == [()]
    assert tableaux.enumerate_ssdt((3, 2, 1), 2) == []

def test_crystal_size_matches_fill_count():
    shape = (3, 1)
    fills = [rows for rows in itertools.product(tableaux.hook_words(3, 3), tableaux.hook_words(1, 3)) if tableaux.is_ssdt(rows)]
    assert sorted(fills) == sorted(tableaux.enumerate_ssdt(shape, 3))

@pytest.mark.parametrize('shape', _small_shapes)
def test_enumeration_is_sorted_by_reading_word(shape):
    words = [tableaux.reading_word(T) for T in tableaux.enumerate_ssdt(shape, 3)]
    assert words == sorted(words)
    assert all(tableaux.is_ssdt(T) for T in tableaux.enumerate_ssdt(shape, 3))

@pytest.mark.parametrize('shape', _small_shapes)
def test_unique_extremal_vectors(shape):
    B = tableaux.enumerate_ssdt(shape, 3)
    assert [T for T in B if crystal.is_highest(tableaux.reading_word(T), 3)] == [tableaux.highest_tableau(shape, 3)]
    assert [T for T in B if crystal.is_lowest(tableaux.reading_word(T), 3)] == [tableaux.lowest_tableau(shape, 3)]

@pytest.mark.parametrize('shape', [lam for s in range(1, 5) for lam in core.strict_partitions(s, 3)])
def test_crystal_is_connected(shape):
    B = tableaux.enumerate_ssdt(shape, 3)
    g = crystal.component(tableaux.reading_word(tableaux.highest_tableau(shape, 3)), 3)
    assert set(g['vertices']) == set(tableaux.reading_word(T) for T in B)

@given(ssdt_strategy(n = 3))
def test_operators_preserve_tableaux(T):
    for x in crystal.crystal_labels(3):
        for op in (tableaux.apply_f_ssdt, tableaux.apply_e_ssdt):
            S = op(T, x)
            if S is None: continue
            assert tableaux.ssdt_shape(S) == tableaux.ssdt_shape(T)
            assert tableaux.is_ssdt(S)
