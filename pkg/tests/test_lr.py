import pytest
from hypothesis import given, settings

from qcrystals import core
from qcrystals import crystal
from qcrystals import tableaux
from qcrystals import insertion
from qcrystals import lr
from conftest import strict_partition_strategy

_methods = ['lattice', 'insertion', 'tableaux', 'components']

def test_chain_from_word():
    c = lr.chain_from_word((1, 2), (3, 1), 3)
    assert c == {'base': (3, 1), 'rows': (2, 3), 'shape': (3, 2, 1)}
    assert lr.chain_from_word((2, 1), (3, 1), 3) is None
    assert lr.chain_from_word((), (3, 1), 3) == {'base': (3, 1), 'rows': (), 'shape': (3, 1, 0)}

def test_lr_set():
    assert lr.lr_set((2,), (3, 1), (3, 2, 1), 3) == {(1, 2)}
    assert lr.lr_set((2,), (3, 1), (4, 2), 3) == {(2, 3), (3, 2)}
    assert lr.lr_set((2,), (3, 1), (5, 1), 3) == {(3, 3)}
    assert lr.lr_set((2,), (3, 1), (6,), 3) == set()

@pytest.mark.parametrize('method', _methods)
def test_decompose_two_by_three_one(method):
    assert lr.decompose_tensor((2,), (3, 1), 3, method = method) == {(3, 2, 1): 1, (4, 2): 2, (5, 1): 1}

@pytest.mark.parametrize('method', _methods)
def test_decompose_three_one_squared(method):
    assert lr.decompose_tensor((3, 1), (3, 1), 3, method = method) == {(6, 2): 1, (5, 3): 2, (5, 2, 1): 2, (4, 3, 1): 2}

@pytest.mark.parametrize('method', _methods)
def test_decompose_empty_factor(method):
    assert lr.decompose_tensor((), (3, 1), 3, method = method) == {(3, 1): 1}

def test_decompose_errors():
    with pytest.raises(ValueError, match = 'size limit'):
        lr.decompose_tensor((5, 1), (4, 1), 3, method = 'components')
    with pytest.raises(ValueError, match = 'unknown method'):
        lr.decompose_tensor((2,), (1,), 3, method = 'bogus')
    assert lr.decompose_tensor((3, 2, 1), (1,), 2) == {}

def test_lr_tilde_tableaux():
    qs = lr.lr_tilde_tableaux((3, 1), (3, 1), (4, 3, 1), 3)
    assert len(core.enumerate_standard_shifted((4, 3, 1), (3, 1))) == 5
    assert sorted(core.standard_to_str(q) for q in qs) == ['.,.,.,1/.,2,3/4', '.,.,.,3/.,1,4/2']
    assert lr.lr_tilde_tableaux((2,), (3, 1), (5, 1), 3) == [((None, None, None, 1, 2), (None,))]
    assert lr.lr_tilde_tableaux((), (3, 1), (3, 1), 3) == [((None, None, None), (None,))]
    with pytest.raises(ValueError, match = 'not contained'):
        lr.lr_tilde_tableaux((2,), (3, 1), (4,), 3)

def test_lr_coefficient():
    assert lr.lr_coefficient((2,), (3, 1), (4, 2), 3) == 2
    assert lr.lr_coefficient((3, 1), (3, 1), (4, 3, 1), 3, method = 'tableaux') == 2
    assert lr.lr_coefficient((2,), (3, 1), (4, 1), 3) == 0
    assert lr.lr_coefficient((2,), (3, 1), (2, 1), 3) == 0

def test_lowest_pair_reconstruction():
    for nu in lr.decompose_tensor((3, 1), (3, 1), 3):
        for Q in lr.lr_tilde_tableaux((3, 1), (3, 1), nu, 3):
            T, L = lr.lowest_pair(Q, (3, 1), (3, 1), 3)
            assert L == tableaux.lowest_tableau((3, 1), 3)
            assert insertion.insert_tableau_right(T, L) == (tableaux.lowest_tableau(nu, 3), Q)

def test_tensor_lowest_vectors():
    pairs = lr.tensor_lowest_vectors((2,), (3, 1), 3)
    assert len(pairs) == 4
    assert all(S == tableaux.lowest_tableau((3, 1), 3) for _, S in pairs)
    assert sorted(tableaux.reading_word(T) for T, _ in pairs) == [(1, 2), (2, 3), (3, 2), (3, 3)]

def test_chain_matches_lowest_test():
    L = tableaux.lowest_tableau((3, 1), 3)
    for T in tableaux.enumerate_ssdt((3, 1), 3):
        u = tableaux.reading_word(T)
        assert (lr.chain_from_word(u, (3, 1), 3) is not None) == crystal.is_lowest(u + tableaux.reading_word(L), 3)

@settings(max_examples = 30, deadline = None)
@given(strict_partition_strategy(max_size = 4, max_len = 3), strict_partition_strategy(max_size = 4, max_len = 3))
def test_methods_agree_and_conserve(lam, mu):
    decs = [lr.decompose_tensor(lam, mu, 3, method = m) for m in _methods]
    assert all(d == decs[0] for d in decs)
    assert lr.decomposition_size(decs[0], 3) == lr.crystal_size(lam, 3) * lr.crystal_size(mu, 3)

@pytest.mark.parametrize('method', ['tableaux', 'components', 'rsk'])
def test_decompose_power(method):
    assert lr.decompose_power(3, 2, method = method) == {(2,): 1}
    assert lr.decompose_power(2, 4, method = method) == {(4,): 1, (3, 1): 2}
    assert lr.decompose_power(3, 4, method = method) == {(4,): 1, (3, 1): 2}
    assert lr.decompose_power(3, 3, method = method) == {(3,): 1, (2, 1): 1}

@pytest.mark.parametrize('n,N', [(2, 5), (3, 5), (4, 4)])
def test_power_conservation(n, N):
    assert lr.decomposition_size(lr.decompose_power(n, N), n) == n ** N

def test_decompose_power_errors():
    with pytest.raises(ValueError):
        lr.decompose_power(3, 0)
    with pytest.raises(ValueError, match = 'unknown method'):
        lr.decompose_power(3, 2, method = 'bogus')

def test_decomposition_output():
    dec = {(3, 2, 1): 1, (4, 2): 2, (5, 1): 1}
    assert lr.decomposition_json(dec) == [{'nu': [5, 1], 'multiplicity': 1}, {'nu': [4, 2], 'multiplicity': 2}, {'nu': [3, 2, 1], 'multiplicity': 1}]
    assert lr.decomposition_to_str(dec) == '(5,1) 1\n(4,2) 2\n(3,2,1) 1'
