import itertools

import pytest
from hypothesis import given

from qcrystals import core
from qcrystals import crystal
from qcrystals import lr
from qcrystals import tableaux
from conftest import word_strategy, all_words

def test_labels():
    assert crystal.crystal_labels(4) == [1, 2, 3, -1, -2, -3]
    assert crystal.crystal_labels(4, bars = False) == [1, 2, 3, -1]
    assert crystal.label_str(-2) == '2bar'
    assert crystal.label_from_str('1bar') == -1
    assert crystal.label_from_str('-3') == -3
    assert crystal.label_from_str('2') == 2
    with pytest.raises(ValueError):
        crystal.label_from_str('0')
    with pytest.raises(ValueError):
        crystal.label_from_str('xbar')

def test_even_operators():
    assert crystal.apply_f((1, 1), 1) == (2, 1)
    assert crystal.apply_f((2, 1), 1) == (2, 2)
    assert crystal.apply_f((2, 2), 1) is None
    assert crystal.apply_f((1, 2), 1) is None
    assert crystal.apply_e((2, 2), 1) == (2, 1)
    assert crystal.apply_e((1, 2), 1) is None
    assert crystal.apply_f_times((1, 1), 1, 2) == (2, 2)
    assert crystal.apply_f_times((1, 1), 1, 3) is None

def test_odd_operators():
    assert crystal.apply_f((1,), -1) == (2,)
    assert crystal.apply_f((2, 1), -1) == (2, 2)
    assert crystal.apply_f((1, 2), -1) is None
    assert crystal.apply_e((2, 2), -1) == (2, 1)
    assert crystal.apply_f((1, 3), -1) == (2, 3)
    assert crystal.apply_f((2,), -2) == (3,)
    assert crystal.apply_f((2, 3), -2) is None
    with pytest.raises(ValueError):
        crystal.apply_f_bar((1,), 1)

def test_string_lengths():
    assert crystal.eps((2, 2), 1) == 2
    assert crystal.phi((1, 1), 1) == 2
    assert crystal.phi((1, 2), 1) == 0
    assert crystal.eps((1,), -1) is None

@given(word_strategy(n = 4))
def test_f_e_inverse(w):
    for x in crystal.crystal_labels(4):
        v = crystal.apply_f(w, x)
        if v is not None: assert crystal.apply_e(v, x) == w
        v = crystal.apply_e(w, x)
        if v is not None: assert crystal.apply_f(v, x) == w

@given(word_strategy(n = 4))
def test_even_operators_move_weight(w):
    for i in range(1, 4):
        v = crystal.apply_f(w, i)
        if v is None: continue
        a = core.weight_of(w, 4)
        b = core.weight_of(v, 4)
        assert b[i - 1] == a[i - 1] - 1 and b[i] == a[i] + 1

@given(word_strategy(n = 4))
def test_weyl_action_reflects_weight(w):
    for i in range(1, 4):
        assert core.weight_of(crystal.weyl_s(w, i), 4) == crystal.reflect_weight(core.weight_of(w, 4), i)
        assert crystal.weyl_s(crystal.weyl_s(w, i), i) == w

def test_weyl_words():
    assert crystal.longest_word(4) == (1, 2, 1, 3, 2, 1)
    assert crystal.wi_word(3) == (2, 3, 1, 2)
    assert crystal.weyl_w((1,), crystal.longest_word(3)) == (3,)
    with pytest.raises(ValueError):
        crystal.weyl_w((1,), (3,), 3)
    with pytest.raises(ValueError):
        crystal.weyl_s((1,), 0)

def test_extremal_words():
    assert crystal.is_highest((1,), 3)
    assert not crystal.is_highest((2,), 3)
    assert crystal.is_highest((1, 2), 3, even = True)
    assert not crystal.is_highest((1, 2), 3)
    assert not crystal.is_highest((2, 1), 3, even = True)
    assert crystal.is_lowest((3, 3, 3, 3), 3)
    assert not crystal.is_lowest((3, 3, 2, 3), 3)
    with pytest.raises(ValueError):
        crystal.is_highest((1,), 3, a = 4)

def test_lowest_vectors_of_fourth_power():
    assert crystal.lowest_weight_vectors(3, 4) == [(2, 3, 3, 3), (3, 2, 3, 3), (3, 3, 3, 3)]
    assert [w for w in itertools.product(range(1, 4), repeat = 4) if crystal.is_lowest(w, 3)] == [(2, 3, 3, 3), (3, 2, 3, 3), (3, 3, 3, 3)]

@pytest.mark.parametrize('n,N', [(2, 4), (3, 3), (3, 4), (4, 3)])
def test_highest_vectors_match_brute_force(n, N):
    brute = [w for w in itertools.product(range(1, n + 1), repeat = N) if crystal.is_highest(w, n)]
    assert crystal.highest_weight_vectors(n, N) == brute
    assert len(brute) == sum(lr.decompose_power(n, N).values())

@pytest.mark.parametrize('w', all_words(3, 4))
def test_lowest_fast_path_agrees(w):
    assert crystal.is_lowest(w, 3, fast = True) == crystal.is_lowest(w, 3, fast = False)

def test_component_of_two_letters():
    g = crystal.component((1, 1), 3)
    assert len(g['vertices']) == 9
    assert set(g['vertices']) == set(itertools.product(range(1, 4), repeat = 2))
    assert {x for _, x, _ in g['edges']} == {1, 2, -1}

def test_component_of_one_letter():
    g = crystal.component((1,), 4)
    assert g['vertices'] == [(1,), (2,), (3,), (4,)]
    assert g['edges'] == [((1,), 1, (2,)), ((1,), -1, (2,)), ((2,), 2, (3,)), ((3,), 3, (4,))]
    dot = crystal.graph_dot(g)
    assert dot.count('->') == 4
    assert dot.count('style=dashed') == 1
    assert '"1" -> "2" [label="1bar", style=dashed];' in dot
    assert crystal.graph_dot(crystal.component((1,), 4)) == dot

def test_component_with_bars():
    g = crystal.component((1,), 3, bars = True)
    assert ((2,), -2, (3,)) in g['edges']
    assert crystal.graph_json(g)['edges'][0] == {'source': '1', 'label': '1', 'target': '2'}

def test_operators_check_rank():
    assert crystal.apply_f((3,), 3) == (4,)
    with pytest.raises(ValueError, match = 'n=3'):
        crystal.apply_f((3,), 3, 3)
    with pytest.raises(ValueError):
        crystal.apply_e((2,), -3, 3)
    with pytest.raises(ValueError):
        crystal.apply_f((1,), 0)
    with pytest.raises(ValueError):
        crystal.apply_f_times((1, 1), 4, 2, 4)
    with pytest.raises(ValueError):
        crystal.weyl_s((1,), 3, 3)
    assert crystal.apply_f((1, 1), 2, 3) is None
    assert crystal.weyl_s((1,), 2, 3) == (1,)

@pytest.mark.parametrize('w', all_words(4, 4))
def test_odd_operator_laws(w):
    fw = crystal.apply_f(w, -1)
    ew = crystal.apply_e(w, -1)
    if fw is not None:
        assert crystal.apply_f(fw, -1) is None
        a = core.weight_of(w, 4)
        b = core.weight_of(fw, 4)
        assert b == (a[0] - 1, a[1] + 1) + a[2:]
    if ew is not None:
        assert crystal.apply_e(ew, -1) is None
        for i in range(3, 4):
            assert crystal.eps(ew, i) == crystal.eps(w, i)
            assert crystal.phi(ew, i) == crystal.phi(w, i)
    for i in range(3, 4):
        a = crystal.apply_f(w, -1)
        a = None if a is None else crystal.apply_f(a, i)
        b = crystal.apply_f(w, i)
        b = None if b is None else crystal.apply_f(b, -1)
        assert a == b

@pytest.mark.parametrize('w', all_words(3, 4))
def test_operators_act_on_the_left_factor(w):
    for x in crystal.crystal_labels(3, bars = False):
        v = crystal.apply_f(w, x)
        if v is None: continue
        p = [k for k in range(len(w)) if v[k] != w[k]][0]
        for k in range(p + 1, len(w)):
            assert crystal.apply_f(w[:k], x) == v[:k]

def test_weyl_action_is_independent_of_reduced_word():
    for w in all_words(3, 4):
        assert crystal.weyl_w(w, (1, 2, 1), 3) == crystal.weyl_w(w, (2, 1, 2), 3)
    gens = [crystal.longest_word(4), (1, 2, 3, 1, 2, 1), (3, 2, 1, 3, 2, 3), (2, 1, 3, 2, 3, 1)]
    for w in all_words(4, 3):
        assert len({crystal.weyl_w(w, g, 4) for g in gens}) == 1

@pytest.mark.parametrize('shape,n', [((6, 4, 2, 1), 4), ((3, 1), 3)])
def test_longest_element_maps_highest_to_lowest(shape, n):
    top = tableaux.reading_word(tableaux.highest_tableau(shape, n))
    bottom = tableaux.reading_word(tableaux.lowest_tableau(shape, n))
    assert crystal.weyl_w(top, crystal.longest_word(n), n) == bottom
