import csv
import json
import re

import pytest

from juddian.commands.roots import cli as cmd_roots


def test_roots_rabi(clirunner, configenv, validate_cliresult,
                    model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(cmd_roots, ['-v'])
        validate_cliresult(result)
        assert '0.433012701892219' in result.output
        assert 'pass' in result.output
        assert 'sum-rule' in result.output


def test_roots_solution_file(clirunner, configenv, validate_cliresult,
                             model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(cmd_roots, ['--out', 'sol.json'])
        validate_cliresult(result)
        assert 'Solutions written to sol.json' in result.output

        with open('sol.json', encoding='utf8') as file:
            data = json.load(file)
        assert data['mode'] == 'exact'
        assert data['param'] == 'g'
        assert data['model']['model'] == 'rabi'
        (point,) = data['points']
        assert point['certified']
        assert point['bundle']['status'] == 'pass'
        assert len(point['coefficients']) == 2
        assert point['coefficients'][1] == '1'


def test_roots_csv(clirunner, configenv, validate_cliresult,
                   model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(
            cmd_roots, ['--mode', 'numeric', '--out', 'points.csv']
        )
        validate_cliresult(result)
        with open('points.csv', newline='', encoding='utf8') as file:
            rows = list(csv.reader(file))
        assert rows[0] == ['g', 'status']
        assert len(rows) == 2
        assert abs(float(rows[1][0]) - 0.4330127018922193) < 1e-12
        assert rows[1][1] == 'pass'


def test_roots_failed_verification(clirunner, configenv, model_file,
                                   rabi_config):
    # -- The refined point is only 1e-30 close to the root
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(cmd_roots, ['--tol', '1e-40'])
        assert result.exit_code == 4
        assert 'failed verification' in result.output


def test_roots_bad_options(clirunner, configenv, model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(cmd_roots, ['--grid', '1'])
        assert result.exit_code == 2
        result = clirunner.invoke(cmd_roots, ['--mode', 'symbolic'])
        assert result.exit_code == 2


def test_roots_run_section(clirunner, configenv, validate_cliresult,
                           model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(dict(rabi_config, run={'mode': 'numeric'}))
        result = clirunner.invoke(cmd_roots, ['--mode', 'numeric'])
        validate_cliresult(result)
        assert 'Warning: redundant arguments: mode' in result.output


def test_roots_without_sweep(clirunner, configenv, model_file):
    with clirunner.isolated_filesystem():
        configenv()
        model_file({
            'model': 'rabi', 'omega': '1', 'delta': '1/2', 'g': '1', 'n': 1,
        })
        result = clirunner.invoke(cmd_roots)
        assert result.exit_code == 2
        assert 'no sweep' in result.output


@pytest.mark.parametrize('config', [
    {'model': 'two-photon', 'omega': '1', 'delta': '1/2', 'q': '1/4',
     'n': 2, 'sweep': {'param': 'Omega', 'min': '0', 'max': '1'}},
    {'model': 'two-mode', 'omega': '1', 'delta': '1/2', 'q': '1/2',
     'n': 2, 'sweep': {'param': 'Lambda', 'min': '0', 'max': '1'}},
])
def test_roots_squeezed_models(clirunner, configenv, model_file, config):
    # -- These models have no sum rule and g is not a parameter of them
    with clirunner.isolated_filesystem():
        configenv()
        model_file(config)
        result = clirunner.invoke(cmd_roots, ['-v'])
        assert result.exit_code in (0, 4)
        assert 'has no value' not in result.output
        assert 'sum-rule' not in result.output
        assert re.search(r'residual \((relative|modular)\)\s+pass',
                         result.output)
