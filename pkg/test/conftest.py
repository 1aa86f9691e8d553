# -*- coding: utf-8 -*-

import json
import pytest
from os import environ, getcwd, path
from click.testing import CliRunner


@pytest.fixture(scope='module')
def clirunner():
    return CliRunner()


@pytest.fixture(scope='session')
def validate_cliresult():
    def decorator(result):
        assert result.exit_code == 0
        assert not result.exception
        assert 'error' not in result.output.lower()
    return decorator


@pytest.fixture(scope='session')
def configenv():
    def decorator():
        cwd = path.join(getcwd(), ' ñ')
        environ['JUDDIAN_HOME_DIR'] = cwd
        environ['TESTING'] = ''
    return decorator


@pytest.fixture(scope='session')
def model_file():
    """Write a model config into the current folder"""
    def decorator(config, name='juddian.json'):
        with open(name, 'w', encoding='utf8') as file:
            json.dump(config, file)
        return name
    return decorator


@pytest.fixture(scope='session')
def rabi_config():
    """Rabi model with omega = 1, Delta = 1/2 on the first baseline.
    Its only Juddian point is g = sqrt(3)/4"""
    return {
        'model': 'rabi',
        'omega': '1',
        'delta': '1/2',
        'n': 1,
        'sweep': {'param': 'g', 'min': '0', 'max': '2'},
    }
