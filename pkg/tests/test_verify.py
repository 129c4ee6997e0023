import pytest

from qcrystals import insertion
from qcrystals import verify

def test_quick_level_passes():
    report = verify.verify_run(level = 'quick', seed = 0)
    assert report['status'] == 'pass', verify.report_to_str(report)
    assert [c['name'] for c in report['checks']] == verify.verify_check_names()
    assert all(c['counterexample'] is None for c in report['checks'])
    assert all(c['range'] for c in report['checks'])

def test_named_checks_only():
    report = verify.verify_run(level = 'quick', seed = 3, names = ['rsk-bijection', 'queer-knuth'])
    assert [c['name'] for c in report['checks']] == ['rsk-bijection', 'queer-knuth']
    assert report['seed'] == 3
    assert report['status'] == 'pass'

def test_report_is_deterministic():
    a = verify.verify_run(level = 'quick', seed = 7, names = ['rsk-bijection'])
    b = verify.verify_run(level = 'quick', seed = 7, names = ['rsk-bijection'])
    assert verify.report_to_str(a) == verify.report_to_str(b)

def test_flipped_knuth_case_is_caught(monkeypatch):
    mutant = [list(case) for case in insertion._knuth_relation]
    mutant[0][0] = 'abdc'
    monkeypatch.setattr(insertion, '_knuth_relation', mutant)
    report = verify.verify_run(level = 'quick', names = ['queer-knuth'])
    assert report['status'] == 'fail'
    assert 'w=1121' in report['checks'][0]['counterexample']
    assert 'counterexample: ' in verify.report_to_str(report)

def test_bad_arguments():
    with pytest.raises(ValueError, match = 'level'):
        verify.verify_run(level = 'slow')
    with pytest.raises(ValueError, match = 'unknown check'):
        verify.verify_run(names = ['nope'])
