import json

from juddian.commands.roots import cli as cmd_roots
from juddian.commands.verify import cli as cmd_verify


def make_solution(clirunner, model_file, rabi_config, mode='exact'):
    model_file(rabi_config)
    result = clirunner.invoke(
        cmd_roots, ['--mode', mode, '--out', 'sol.json']
    )
    assert result.exit_code == 0
    with open('sol.json', encoding='utf8') as file:
        return json.load(file)


def save(data, name='sol.json'):
    with open(name, 'w', encoding='utf8') as file:
        json.dump(data, file)


def test_verify(clirunner, configenv, validate_cliresult,
                model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        make_solution(clirunner, model_file, rabi_config)
        result = clirunner.invoke(cmd_verify, ['sol.json', '--seed', '3'])
        validate_cliresult(result)
        assert 'All the certificates pass' in result.output
        assert 'residual (probe)' in result.output
        assert 'isolation' in result.output


def test_verify_numeric(clirunner, configenv, validate_cliresult,
                        model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        make_solution(clirunner, model_file, rabi_config, 'numeric')
        result = clirunner.invoke(
            cmd_verify, ['sol.json', '--out', 'bundles.json']
        )
        validate_cliresult(result)
        with open('bundles.json', encoding='utf8') as file:
            bundles = json.load(file)['bundles']
        assert [b['status'] for b in bundles] == ['pass']


def test_verify_tampered(clirunner, configenv, model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        data = make_solution(clirunner, model_file, rabi_config)
        data['points'][0]['coefficients'][0] = '1/2'
        save(data)
        result = clirunner.invoke(cmd_verify, ['sol.json'])
        assert result.exit_code == 4
        assert 'stored status pass, recomputed fail' in result.output


def test_verify_format_version(clirunner, configenv, model_file,
                               rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        data = make_solution(clirunner, model_file, rabi_config)
        data['format'] = '2.0.0'
        save(data)
        result = clirunner.invoke(cmd_verify, ['sol.json'])
        assert result.exit_code == 2
        assert "unsupported solution format '2.0.0'" in result.output


def test_verify_broken_file(clirunner, configenv):
    with clirunner.isolated_filesystem():
        configenv()
        with open('sol.json', 'w', encoding='utf8') as file:
            file.write('{')
        result = clirunner.invoke(cmd_verify, ['sol.json'])
        assert result.exit_code == 2

        result = clirunner.invoke(cmd_verify, ['missing.json'])
        assert result.exit_code == 2
