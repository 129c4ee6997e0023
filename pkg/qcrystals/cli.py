### cli.py
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
## the qcrystals command line.
##
## every command is driven by a command config dict (see
## `_qcrystals_cmd_info`); options fill the dict, `qcrystals_dict2cc`
## validates it and the command function writes text, json or dot to
## stdout. `--config` saves the validated dict as json and `-W` runs a
## saved one.
##
## exit status: 0 ok, 1 a verification or cross-check failed, 2 bad input.
##
### Code:
import os
import sys
import copy
import json

from qcrystals import core
from qcrystals import crystal
from qcrystals import tableaux
from qcrystals import insertion
from qcrystals import lr
from qcrystals import verify
from qcrystals import utils
from qcrystals.utils import echo_msg
from qcrystals.utils import echo_error_msg
from qcrystals.utils import _version

## ==============================================
## the command config
## ==============================================
_qcrystals_cmd_info = {
    'cmd': None,
    'n': None,
    'shape': None,
    'inner': None,
    'word': None,
    'tableau': None,
    'other': None,
    'P': None,
    'Q': None,
    'lam': None,
    'mu': None,
    'nu': None,
    'N': None,
    'label': None,
    'op': 'f',
    'times': 1,
    'method': None,
    'fmt': None,
    'level': 'quick',
    'seed': 0,
    'size_limit': 10,
    'bars': False,
    'standard': False,
    'verbose': False,
}

qcrystals_config = lambda: copy.deepcopy(_qcrystals_cmd_info)

_partition_keys = ['shape', 'inner', 'lam', 'mu', 'nu']
_int_keys = ['n', 'N', 'times', 'seed', 'size_limit']
_bool_keys = ['bars', 'standard', 'verbose']
_fmts = ['text', 'json', 'dot']

def qcrystals_dict2cc(cc = _qcrystals_cmd_info):
    '''copy the `cc` dict and add any missing keys.
    also validate the key values and return the valid command config

    returns a complete and validated command config dict or None'''

    cc = copy.deepcopy(cc)
    for key in _qcrystals_cmd_info.keys():
        if key not in cc.keys(): cc[key] = copy.deepcopy(_qcrystals_cmd_info[key])
    unknown = [key for key in cc.keys() if key not in _qcrystals_cmd_info.keys()]
    if len(unknown) > 0:
        echo_error_msg('unknown config key(s) {}'.format(', '.join(str(k) for k in unknown)))
        return(None)
    if cc['cmd'] not in _qcrystals_commands.keys():
        echo_error_msg('invalid command `{}`, use one of {}'.format(cc['cmd'], ', '.join(_qcrystals_commands.keys())))
        return(None)
    for key in _int_keys:
        if cc[key] is None: continue
        val = utils.int_or(cc[key])
        if val is None:
            echo_error_msg('invalid integer `{}` for {}'.format(cc[key], key))
            return(None)
        cc[key] = val
    for key in _bool_keys: cc[key] = utils.bool_or(cc[key], False)
    for key in _partition_keys:
        if cc[key] is None: continue
        try:
            cc[key] = list(core.partition_check(utils.str2ints(cc[key]), key))
        except ValueError as e:
            echo_error_msg(e)
            return(None)
    if cc['n'] is not None and cc['n'] < 2:
        echo_error_msg('rank n must be at least 2, got {}'.format(cc['n']))
        return(None)
    if cc['fmt'] is not None and cc['fmt'] not in _fmts:
        echo_error_msg('invalid format `{}`, use one of {}'.format(cc['fmt'], ', '.join(_fmts)))
        return(None)
    if cc['level'] not in verify.verify_level_names():
        echo_error_msg('invalid level `{}`, use one of {}'.format(cc['level'], ', '.join(verify.verify_level_names())))
        return(None)
    if cc['size_limit'] is None or cc['size_limit'] < 1:
        echo_error_msg('size limit must be positive, got {}'.format(cc['size_limit']))
        return(None)
    if cc['times'] is None or cc['times'] < 0:
        echo_error_msg('times must not be negative, got {}'.format(cc['times']))
        return(None)
    if cc['op'] not in ['f', 'e']:
        echo_error_msg('invalid operator `{}`, use f or e'.format(cc['op']))
        return(None)
    missing = [key for key in _qcrystals_commands[cc['cmd']][2] if cc[key] is None]
    if len(missing) > 0:
        echo_error_msg('command `{}` needs {}'.format(cc['cmd'], ', '.join('--{}'.format(_cc_flags.get(k, k)) for k in missing)))
        return(None)
    return(cc)

## ==============================================
## output
## ==============================================
def _write(cc, text = None, obj = None):
    if cc['fmt'] == 'json': sys.stdout.write(json.dumps(obj, indent = 4, sort_keys = True) + '\n')
    else: sys.stdout.write(text if text.endswith('\n') else text + '\n')

_shape = lambda cc, key: tuple(cc[key]) if cc[key] is not None else ()
_tstr = lambda rows, n: core.ssdt_to_str(rows, n) if len(rows) > 0 else '0'

def _target(cc):
    '''the word or tableau named by --word / --tableau'''

    n = cc['n']
    if cc['word'] is not None: return('word', core.word_from_str(cc['word'], n))
    if cc['tableau'] is not None: return('tableau', core.ssdt_from_str(cc['tableau'], n))
    raise ValueError('command `{}` needs --word or --tableau'.format(cc['cmd']))

## ==============================================
## commands
## ==============================================
def _cmd_enumerate(cc):
    '''list B(shape), or with --standard the standard shifted tableaux of shape/inner'''

    n = cc['n']
    shape = _shape(cc, 'shape')
    if cc['standard']:
        ts = core.enumerate_standard_shifted(shape, _shape(cc, 'inner'))
        if cc['verbose']:
            for t in ts: echo_msg('\n' + core.tableau_grid(t))
        _write(cc, '\n'.join([core.standard_to_str(t) for t in ts] + ['count: {}'.format(len(ts))]),
               {'outer': list(shape), 'inner': list(_shape(cc, 'inner')), 'tableaux': [core.standard_json(t) for t in ts], 'count': len(ts)})
        return(0)
    ts = tableaux.enumerate_ssdt(shape, n)
    if cc['verbose']: echo_msg('B({}) for n={} has {} element(s)'.format(core.partition_to_str(shape), n, len(ts)))
    _write(cc, '\n'.join([_tstr(t, n) for t in ts] + ['count: {}'.format(len(ts))]),
           {'shape': list(shape), 'n': n, 'tableaux': [core.ssdt_json(t) for t in ts], 'count': len(ts)})
    return(0)

def _cmd_apply(cc):
    '''apply f_x or e_x, --times times, to a word or tableau'''

    n = cc['n']
    x = crystal.label_from_str(cc['label'])
    if not crystal.label_valid_p(x, n):
        raise ValueError('operator label `{}` is out of range for n={}'.format(cc['label'], n))
    kind, t = _target(cc)
    if kind == 'word':
        v = (crystal.apply_f_times if cc['op'] == 'f' else crystal.apply_e_times)(t, x, cc['times'])
        _write(cc, 'undefined' if v is None else core.word_to_str(v, n), {'label': crystal.label_str(x), 'op': cc['op'], 'times': cc['times'], 'word': None if v is None else core.word_json(v, n)})
    else:
        v = t
        for _ in range(cc['times']):
            if v is None: break
            v = (tableaux.apply_f_ssdt if cc['op'] == 'f' else tableaux.apply_e_ssdt)(v, x)
        _write(cc, 'undefined' if v is None else _tstr(v, n), {'label': crystal.label_str(x), 'op': cc['op'], 'times': cc['times'], 'tableau': None if v is None else core.ssdt_json(v)})
    return(0)

def _extremal(cc, highest):
    n = cc['n']
    name = 'highest' if highest else 'lowest'
    if cc['word'] is not None or cc['tableau'] is not None:
        kind, t = _target(cc)
        w = t if kind == 'word' else tableaux.reading_word(t)
        ok = crystal.is_highest(w, n) if highest else crystal.is_lowest(w, n)
        _write(cc, '{}: {}'.format(name, 'true' if ok else 'false'), {name: ok})
    elif cc['shape'] is not None:
        shape = _shape(cc, 'shape')
        t = tableaux.highest_tableau(shape, n) if highest else tableaux.lowest_tableau(shape, n)
        _write(cc, _tstr(t, n), core.ssdt_json(t))
    elif cc['N'] is not None:
        ws = crystal.highest_weight_vectors(n, cc['N']) if highest else crystal.lowest_weight_vectors(n, cc['N'])
        _write(cc, '\n'.join([core.word_to_str(w, n) for w in ws] + ['count: {}'.format(len(ws))]),
               {'words': [core.word_json(w, n) for w in ws], 'count': len(ws)})
    else: raise ValueError('command `{}` needs --word, --tableau, --shape or --N'.format(cc['cmd']))
    return(0)

def _cmd_insert(cc):
    '''T <- word, T <- T' (method left) or T -> T' with its recording tableau (method right)'''

    n = cc['n']
    T = core.ssdt_from_str(cc['tableau'], n) if cc['tableau'] is not None else ()
    method = 'left' if cc['method'] is None else cc['method']
    if cc['other'] is not None:
        S = core.ssdt_from_str(cc['other'], n)
        if method == 'left':
            prod = insertion.insert_tableau_left(T, S)
            _write(cc, _tstr(prod, n), {'tableau': core.ssdt_json(prod)})
        elif method == 'right':
            prod, Q = insertion.insert_tableau_right(T, S)
            if cc['verbose']: echo_msg('recording tableau\n' + core.tableau_grid(Q))
            _write(cc, '{}\n{}'.format(_tstr(prod, n), core.standard_to_str(Q)), {'tableau': core.ssdt_json(prod), 'recording': core.standard_json(Q)})
        else: raise ValueError('invalid insert method `{}`, use left or right'.format(method))
    elif cc['word'] is not None:
        w = core.word_from_str(cc['word'], n)
        prod, cells = insertion.insert_word(T, w)
        trace = [{'letter': x, 'cell': list(c)} for x, c in zip(w, cells)]
        if cc['verbose']:
            for step in trace: echo_msg('inserted {} at cell ({}, {})'.format(step['letter'], *step['cell']))
        _write(cc, _tstr(prod, n), {'tableau': core.ssdt_json(prod), 'trace': trace})
    else: raise ValueError('command `insert` needs --word or --other')
    return(0)

def _cmd_rsk(cc):
    n = cc['n']
    P, Q = insertion.rsk(core.word_from_str(cc['word'], n))
    _write(cc, '{}\n{}'.format(_tstr(P, n), core.standard_to_str(Q) if len(Q) > 0 else '0'), {'P': core.ssdt_json(P), 'Q': core.standard_json(Q)})
    return(0)

def _cmd_unrsk(cc):
    n = cc['n']
    P = core.ssdt_from_str(cc['P'], n)
    Q = core.standard_from_str(cc['Q']) if cc['Q'] != '0' else ()
    w = insertion.inverse_rsk(P, Q)
    _write(cc, core.word_to_str(w, n), core.word_json(w, n))
    return(0)

def _cmd_lr(cc):
    '''the decomposition of B(lambda) (x) B(mu), or one coefficient with --nu'''

    n = cc['n']
    lam = _shape(cc, 'lam')
    mu = _shape(cc, 'mu')
    method = 'lattice' if cc['method'] is None else cc['method']
    methods = lr.lr_method_names() if method == 'all' else [method]
    decs = {m: lr.decompose_tensor(lam, mu, n, method = m, size_limit = cc['size_limit'], verbose = cc['verbose']) for m in methods}
    dec = decs[methods[0]]
    agree = all(d == dec for d in decs.values())
    if not agree:
        for m in methods:
            echo_error_msg('{}: {}'.format(m, lr.decomposition_to_str(decs[m]).replace('\n', ', ')))
        echo_error_msg('decomposition methods disagree')
    if cc['nu'] is not None:
        nu = _shape(cc, 'nu')
        f = dec.get(nu, 0)
        words = sorted(lr.lr_set(lam, mu, nu, n))
        qs = lr.lr_tilde_tableaux(lam, mu, nu, n) if core.shape_contains_p(nu, mu) else []
        text = ['f = {}'.format(f)] + ['lr word: {}'.format(core.word_to_str(w, n)) for w in words] + ['lr tableau: {}'.format(core.standard_to_str(q)) for q in qs]
        _write(cc, '\n'.join(text), {'lambda': list(lam), 'mu': list(mu), 'nu': list(nu), 'n': n, 'methods': methods, 'coefficient': f,
                                     'lr_words': [core.word_to_str(w, n) for w in words], 'lr_tableaux': [core.standard_json(q) for q in qs]})
    else:
        text = lr.decomposition_to_str(dec)
        if len(methods) > 1: text += '\n{}: {}'.format('agree' if agree else 'disagree', ', '.join(methods))
        _write(cc, text, {'lambda': list(lam), 'mu': list(mu), 'n': n, 'methods': methods, 'agree': agree, 'decomposition': lr.decomposition_json(dec)})
    return(0 if agree else 1)

def _cmd_decompose_power(cc):
    n = cc['n']
    method = 'tableaux' if cc['method'] is None else cc['method']
    methods = lr.power_method_names() if method == 'all' else [method]
    decs = {m: lr.decompose_power(n, cc['N'], method = m) for m in methods}
    dec = decs[methods[0]]
    agree = all(d == dec for d in decs.values())
    if not agree: echo_error_msg('decomposition methods disagree')
    text = lr.decomposition_to_str(dec)
    if len(methods) > 1: text += '\n{}: {}'.format('agree' if agree else 'disagree', ', '.join(methods))
    _write(cc, text, {'n': n, 'N': cc['N'], 'methods': methods, 'agree': agree, 'decomposition': lr.decomposition_json(dec)})
    return(0 if agree else 1)

def _cmd_graph(cc):
    '''the crystal graph of B(shape) or of the component of --word'''

    n = cc['n']
    if cc['shape'] is not None: w = tableaux.reading_word(tableaux.highest_tableau(_shape(cc, 'shape'), n))
    elif cc['word'] is not None: w = core.word_from_str(cc['word'], n)
    else: raise ValueError('command `graph` needs --shape or --word')
    g = crystal.component(w, n, bars = cc['bars'])
    if cc['verbose']: echo_msg('component has {} vertices and {} edges'.format(len(g['vertices']), len(g['edges'])))
    if cc['fmt'] == 'json': _write(cc, obj = crystal.graph_json(g))
    elif cc['fmt'] == 'text':
        _write(cc, '\n'.join('{} -{}-> {}'.format(core.word_to_str(u, n), crystal.label_str(x), core.word_to_str(v, n)) for u, x, v in g['edges']))
    else: sys.stdout.write(crystal.graph_dot(g))
    return(0)

def _cmd_verify(cc):
    report = verify.verify_run(level = cc['level'], seed = cc['seed'], verbose = cc['verbose'])
    _write(cc, verify.report_to_str(report), report)
    if report['status'] != 'pass':
        for c in report['checks']:
            if c['status'] != 'pass': echo_error_msg('{} failed, counterexample: {}'.format(c['name'], c['counterexample']))
    return(0 if report['status'] == 'pass' else 1)

## ==============================================
## the command table: function, description, required keys
## ==============================================
_qcrystals_commands = {
    'enumerate': [lambda cc: _cmd_enumerate(cc), '''list the tableaux of B(shape)''', ['shape', 'n']],
    'apply': [lambda cc: _cmd_apply(cc), '''apply a crystal operator to a word or tableau''', ['n', 'label']],
    'hw': [lambda cc: _extremal(cc, True), '''test or list highest weight vectors''', ['n']],
    'lw': [lambda cc: _extremal(cc, False), '''test or list lowest weight vectors''', ['n']],
    'insert': [lambda cc: _cmd_insert(cc), '''shifted insertion into a tableau''', ['n']],
    'rsk': [lambda cc: _cmd_rsk(cc), '''the insertion and recording tableaux of a word''', ['n', 'word']],
    'unrsk': [lambda cc: _cmd_unrsk(cc), '''the word of an insertion and recording tableau pair''', ['n', 'P', 'Q']],
    'lr': [lambda cc: _cmd_lr(cc), '''decompose B(lambda) x B(mu)''', ['n', 'lam', 'mu']],
    'decompose-power': [lambda cc: _cmd_decompose_power(cc), '''decompose B^N''', ['n', 'N']],
    'graph': [lambda cc: _cmd_graph(cc), '''export a crystal graph''', ['n']],
    'verify': [lambda cc: _cmd_verify(cc), '''run the self-verification checks''', []],
}

_cc_flags = {'lam': 'lambda', 'size_limit': 'size-limit'}

def qcrystals_run(cc):
    '''run the validated command config `cc`

    returns the exit status'''

    try:
        return(_qcrystals_commands[cc['cmd']][0](cc))
    except ValueError as e:
        echo_error_msg(e)
        return(2)

## ==============================================
## qcrystals cli
## ==============================================
_qcrystals_cmd_desc = lambda: '\n  '.join('{:16}{}'.format(k, v[1]) for k, v in _qcrystals_commands.items())

qcrystals_cli_usage = '''qcrystals ({}) <command> [OPTIONS]

Crystals of the queer Lie superalgebra q(n): operators on words,
semistandard decomposition tableaux, shifted insertion and
shifted Littlewood-Richardson coefficients.

Commands:
  {}

Options:
  -n, --n\t\tThe RANK n >= 2.
  -s, --shape\t\tA strict partition SHAPE, e.g. 3,1
  -i, --inner\t\tThe INNER shape of a skew shape (enumerate --standard).
  -w, --word\t\tA WORD, e.g. 2321 or 12,3,11
  -t, --tableau\t\tA TABLEAU, rows top first joined by `/`, e.g. 66325/421/3
  -o, --other\t\tThe right hand TABLEAU of a tableau insertion.
  -P, --P\t\tThe insertion tableau (unrsk).
  -Q, --Q\t\tThe recording tableau (unrsk), e.g. 124/3
  -l, --lambda\t\tThe left shape LAMBDA (lr).
  -m, --mu\t\tThe right shape MU (lr).
  -u, --nu\t\tThe target shape NU (lr).
  -N, --N\t\tThe word LENGTH N (decompose-power, hw, lw).
  -x, --label\t\tThe operator LABEL, i or ibar.
  -e, --op\t\tThe operator, f or e [f]
  -k, --times\t\tApply the operator this many TIMES [1]
  -M, --method\t\tThe METHOD (lr: lattice, insertion, tableaux, components, all;
\t\t\tdecompose-power: tableaux, components, rsk, all; insert: left, right)
  -F, --format\t\tOutput FORMAT: text, json or dot.
  -L, --level\t\tThe verify LEVEL: quick or full [quick]
  -S, --seed\t\tThe verify SEED [0]
  -Z, --size-limit\tThe largest |lambda|+|mu| for the components method [10]
  -W, --cc-config\tA qcrystals config JSON file. If supplied, will overwrite all other options.
\t\t\tgenerate a qcrystals config JSON file using the --config flag.

  -b, --bars\t\tInclude the ibar edges (graph).
  -d, --standard\tEnumerate standard shifted tableaux (enumerate).

  --help\t\tPrint the usage text
  --config\t\tSave the qcrystals config JSON
  --version\t\tPrint the version information
  --verbose\t\tIncrease the verbosity
'''.format(_version, _qcrystals_cmd_desc())

_cli_opts = {
    'n': ['--n', '-n'],
    'shape': ['--shape', '-s'],
    'inner': ['--inner', '-i'],
    'word': ['--word', '-w'],
    'tableau': ['--tableau', '-t'],
    'other': ['--other', '-o'],
    'P': ['--P', '-P'],
    'Q': ['--Q', '-Q'],
    'lam': ['--lambda', '-l'],
    'mu': ['--mu', '-m'],
    'nu': ['--nu', '-u'],
    'N': ['--N', '-N'],
    'label': ['--label', '-x'],
    'op': ['--op', '-e'],
    'times': ['--times', '-k'],
    'method': ['--method', '-M'],
    'fmt': ['--format', '-F'],
    'level': ['--level', '-L'],
    'seed': ['--seed', '-S'],
    'size_limit': ['--size-limit', '-Z'],
}

def qcrystals_cli(argv = sys.argv):
    '''run qcrystals from command-line
    e.g. `qcrystals lr --lambda 2 --mu 3,1 --n 3 --method all`
    generates a command config from the command-line options
    and either saves or runs it.
    See `qcrystals_cli_usage` for full cli options.

    returns the exit status'''

    cc = qcrystals_config()
    cc_user = None
    want_config = False
    i = 1
    while i < len(argv):
        arg = argv[i]
        for key, flags in _cli_opts.items():
            if arg in flags:
                if i + 1 >= len(argv):
                    echo_error_msg('option {} needs a value'.format(arg))
                    return(2)
                cc[key] = argv[i + 1]
                i += 1
                break
            elif arg[:2] == flags[1] and len(arg) > 2 and not arg.startswith('--'):
                cc[key] = arg[2:]
                break
        else:
            if arg == '--cc-config' or arg == '-W':
                if i + 1 >= len(argv):
                    echo_error_msg('option {} needs a value'.format(arg))
                    return(2)
                cc_user = argv[i + 1]
                i += 1
            elif arg[:2] == '-W': cc_user = arg[2:]
            elif arg == '--bars' or arg == '-b': cc['bars'] = True
            elif arg == '--standard' or arg == '-d': cc['standard'] = True
            elif arg == '--verbose' or arg == '-V': cc['verbose'] = True
            elif arg == '--config': want_config = True
            elif arg == '--help' or arg == '-h':
                sys.stderr.write(qcrystals_cli_usage)
                sys.exit(0)
            elif arg == '--version' or arg == '-v':
                sys.stdout.write('{}\n'.format(_version))
                sys.exit(0)
            elif arg.startswith('-') and not arg[1:].isdigit():
                sys.stderr.write(qcrystals_cli_usage)
                echo_error_msg('unknown option `{}`'.format(arg))
                return(2)
            elif cc['cmd'] is None: cc['cmd'] = arg
            else:
                echo_error_msg('unexpected argument `{}`'.format(arg))
                return(2)
        i += 1

    ## ==============================================
    ## load the user cc json and run with that.
    ## ==============================================
    if cc_user is not None:
        if not os.path.exists(cc_user):
            echo_error_msg('specified json file does not exist, {}'.format(cc_user))
            return(2)
        try:
            with open(cc_user, 'r') as ccj:
                cc = json.load(ccj)
        except Exception as e:
            echo_error_msg('could not read {}, {}'.format(cc_user, e))
            return(2)
        if not isinstance(cc, dict):
            echo_error_msg('{} does not hold a qcrystals config'.format(cc_user))
            return(2)

    if cc.get('cmd') is None:
        sys.stderr.write(qcrystals_cli_usage)
        echo_error_msg('must specify a command')
        return(2)

    this_cc = qcrystals_dict2cc(cc)
    if this_cc is None: return(2)
    if want_config:
        fn = 'qcrystals_{}.json'.format(this_cc['cmd'])
        echo_msg('generating qcrystals config file: {}'.format(fn))
        with open(fn, 'w') as cc_json:
            cc_json.write(json.dumps(this_cc, indent = 4, sort_keys = True))
        return(0)
    if this_cc['cmd'] == 'verify' and this_cc['verbose']:
        echo_msg('verify seed: {}'.format(this_cc['seed']))
    return(qcrystals_run(this_cc))

## ==============================================
## mainline -- run qcrystals directly...
##
## % python cli.py lr --lambda 2 --mu 3,1 --n 3
## ==============================================
if __name__ == '__main__': sys.exit(qcrystals_cli(sys.argv))

### End
