import json
import os
from typing import (Any,
                    Dict,
                    List)

import pytest
from click.testing import (CliRunner,
                           Result)

from holoprec.utils import parse_problem
from manage import main

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')
LN2_DIGITS = '0.6931471805599453094172321214581765681'


def _golden(name: str) -> str:
    with open(os.path.join(GOLDEN_DIR, name)) as file:
        return file.read()


def _invoke(arguments: List[str], **kwargs) -> Result:
    runner = CliRunner()
    with runner.isolated_filesystem():
        return runner.invoke(main, arguments, **kwargs)


def _invoke_with_ode(data: Dict[str, Any], arguments: List[str]) -> Result:
    runner = CliRunner()
    with runner.isolated_filesystem():
        with open('problem.json', 'w') as file:
            json.dump(data, file)
        return runner.invoke(main, arguments)


@pytest.mark.parametrize('arguments, golden',
                         [(['eval', '--catalog', 'geometric',
                            '--point', '1/2', '--prec-bits', '32',
                            '--mode', 'classic'],
                           'eval_geometric.txt'),
                          (['eval', '--catalog', 'geometric',
                            '--prec-bits', '32', '--mode', 'classic',
                            '--format', 'dyadic'],
                           'eval_geometric_dyadic.txt'),
                          (['recurrence', '--catalog', 'exp'],
                           'recurrence_exp.txt'),
                          (['recurrence', '--catalog', 'arctan'],
                           'recurrence_arctan.txt'),
                          (['recurrence', '--catalog', 'ln2'],
                           'recurrence_ln2.txt'),
                          (['catalog'], 'catalog.txt')])
def test_golden(arguments: List[str], golden: str) -> None:
    result = _invoke(arguments)

    assert result.exit_code == 0
    assert result.output == _golden(golden)


def test_eval_ln2() -> None:
    result = _invoke(['eval', '--catalog', 'ln2', '--prec-bits', '128'])

    lines = result.output.splitlines()
    assert result.exit_code == 0
    assert lines[0] == LN2_DIGITS
    assert 'certified: true' in lines


def test_eval_json() -> None:
    result = _invoke(['eval', '--catalog', 'ln2', '--prec-bits', '64',
                      '--json', '--stats', '--emit-certificate'])

    output = json.loads(result.output)
    assert result.exit_code == 0
    assert set(output) == {'value', 'decimal', 'error_bound', 'mode', 'N',
                           'delta', 'lgM', 'certified', 'assumed_in_disk',
                           'digest', 'ledger_peak', 'wall_ns', 'trace',
                           'certificate'}
    assert output['mode'] == 'trunc'
    assert output['error_bound'] == '2^-64'
    assert output['certified'] is True
    assert len(output['trace']) == output['delta']
    assert output['certificate']['N'] == output['N']


def test_eval_modes_orders() -> None:
    classic = _invoke(['eval', '--catalog', 'exp', '--prec-bits', '64',
                       '--json', '--mode', 'classic'])
    trunc = _invoke(['eval', '--catalog', 'exp', '--prec-bits', '64',
                     '--json', '--mode', 'trunc'])

    assert (json.loads(classic.output)['N']
            == json.loads(trunc.output)['N'])


def test_eval_missing_file() -> None:
    result = _invoke(['eval', '--ode', 'missing.json'])

    assert result.exit_code == 1
    assert 'cannot read ODE file' in result.output


def test_eval_problem_source() -> None:
    result = _invoke(['eval'])

    assert result.exit_code == 1
    assert result.output.startswith('error: ')


def test_eval_strict() -> None:
    arguments = ['eval', '--catalog', 'exp', '--prec-bits', '32',
                 '--bound-mode', 'heuristic']

    assert _invoke(arguments).exit_code == 0
    assert _invoke(arguments + ['--strict']).exit_code == 2


def test_eval_out_of_disk() -> None:
    result = _invoke(['eval', '--catalog', 'ln2', '--point', '1'])

    assert result.exit_code == 1
    assert '--assume-in-disk' in result.output


def test_eval_invalid_point() -> None:
    result = _invoke(['eval', '--catalog', 'ln2', '--point', '1/0'])

    assert result.exit_code == 1
    assert 'point' in result.output


@pytest.mark.parametrize('value', ['0', 'many'])
def test_threshold_environment(value: str) -> None:
    result = _invoke(['eval', '--catalog', 'exp', '--prec-bits', '32'],
                     env={'HOLOPREC_THRESHOLD': value})

    assert result.exit_code == 1
    assert 'threshold' in result.output.lower()


def test_threshold_invariance() -> None:
    outputs = [_invoke(['eval', '--catalog', 'arctan', '--prec-bits', '64',
                        '--threshold', threshold]).output
               for threshold in ('1', '4', '32')]

    assert outputs[0] == outputs[1] == outputs[2]


def test_settings_path() -> None:
    result = _invoke(['--settings-path', 'absent.yml', 'catalog'])

    assert result.exit_code == 1
    assert 'absent.yml' in result.output


def test_recurrence_not_ordinary() -> None:
    result = _invoke_with_ode({'coeffs': [[1], [0, 1]],
                               'initial_values': ['1'],
                               'point': '1/2'},
                              ['recurrence', '--ode', 'problem.json'])

    assert result.exit_code == 1
    assert '0 is not an ordinary point' in result.output


def test_parse_error_field() -> None:
    result = _invoke_with_ode({'coeffs': [[1], [1, 'x']],
                               'initial_values': ['1'],
                               'point': '1/2'},
                              ['eval', '--ode', 'problem.json'])

    assert result.exit_code == 1
    assert 'coeffs[1][1]' in result.output


def test_convert() -> None:
    data = {'form': 'dz',
            'coeffs': [[-1], [1]],
            'initial_values': ['1'],
            'point': '1/2'}

    result = _invoke_with_ode(data, ['convert', '--ode', 'problem.json'])

    output = json.loads(result.output)
    assert result.exit_code == 0
    assert output['form'] == 'theta'
    assert (parse_problem(output).ode
            == parse_problem(data).ode
            == parse_problem({'coeffs': [[0, -1], [1]],
                              'initial_values': ['1'],
                              'point': '1/2'}).ode)


def test_eval_dz_file() -> None:
    result = _invoke_with_ode({'form': 'dz',
                               'coeffs': [[-1], [1]],
                               'initial_values': ['1'],
                               'point': '1/2'},
                              ['eval', '--ode', 'problem.json',
                               '--prec-bits', '32'])

    assert result.exit_code == 0
    # exp(1/2)
    assert result.output.startswith('1.6487212')


def test_bench_csv() -> None:
    result = _invoke(['bench', '--catalog', 'ln2', '--p', '32,64',
                      '--modes', 'classic,trunc'])

    lines = result.output.splitlines()
    assert result.exit_code == 0
    assert lines[0] == 'problem,mode,p,N,delta,lgM,wall_ns,peak_bits,digest'
    assert len(lines) == 5
    assert all(line.startswith('ln2,') for line in lines[1:])


def test_bench_fit() -> None:
    result = _invoke(['bench', '--catalog', 'geometric',
                      '--p', '32,64,128,256', '--fit'])

    fit_lines = [line
                 for line in result.output.splitlines()
                 if line.startswith('# fit ')]
    assert result.exit_code == 0
    assert len(fit_lines) == 2


def test_bench_json() -> None:
    result = _invoke(['bench', '--catalog', 'exp', '--p', '32,64',
                      '--modes', 'trunc', '--format', 'json'])

    output = json.loads(result.output)
    assert result.exit_code == 0
    assert [record['p'] for record in output['records']] == [32, 64]
    assert 'fit' not in output


def test_bench_mismatch() -> None:
    result = _invoke(['bench', '--catalog', 'ln2', '--p', '32',
                      '--inject-mismatch'])

    assert result.exit_code == 1
    assert 'differ' in result.output


def test_bench_mismatch_single_mode() -> None:
    result = _invoke(['bench', '--catalog', 'ln2', '--p', '32',
                      '--modes', 'trunc', '--inject-mismatch'])

    assert result.exit_code == 1
    assert 'both modes' in result.output


def test_bench_invalid_modes() -> None:
    result = _invoke(['bench', '--catalog', 'ln2', '--p', '32',
                      '--modes', 'fast'])

    assert result.exit_code == 1
    assert 'modes' in result.output
