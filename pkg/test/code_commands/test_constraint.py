import json

from juddian.commands.constraint import cli as cmd_constraint


def test_constraint_rabi(clirunner, configenv, model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(cmd_constraint)
        assert result.exit_code == 0

        data = json.loads(result.output)
        assert data['model'] == 'rabi'
        assert data['n'] == 1
        assert data['param'] == 'g'
        assert data['clearing_factor'] == '2*g'
        (constraint,) = data['constraints']
        assert constraint['coefficients'] == ['-3/16', '0', '1']


def test_constraint_to_file(clirunner, configenv, validate_cliresult,
                            model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(cmd_constraint, ['--out', 'p.json'])
        validate_cliresult(result)
        assert 'Constraints written to p.json' in result.output
        with open('p.json', encoding='utf8') as file:
            data = json.load(file)
        assert len(data['constraints']) == 1


def test_constraint_generalized(clirunner, configenv, model_file):
    with clirunner.isolated_filesystem():
        configenv()
        model_file({
            'model': 'generalized-rabi', 'omega': '1', 'delta': '1/3',
            'g1': '1', 'g2': '1/2', 'n': 1,
            'sweep': {'param': 'kappa', 'min': '0', 'max': '2'},
        })
        result = clirunner.invoke(cmd_constraint)
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert len(data['constraints']) == 2
