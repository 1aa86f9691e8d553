from juddian.commands.models import cli as cmd_models


def test_models(clirunner, validate_cliresult):
    result = clirunner.invoke(cmd_models)
    validate_cliresult(result)


def test_models_list(clirunner, validate_cliresult):
    result = clirunner.invoke(cmd_models, ['--list'])
    validate_cliresult(result)
    for name in ('rabi', 'driven-rabi', 'two-photon', 'two-mode',
                 'generalized-rabi', 'schweber', 'koc'):
        assert name in result.output
    assert 'juddian init --model' in result.output


def test_models_fields(clirunner, validate_cliresult):
    result = clirunner.invoke(cmd_models, ['--fields', 'two-photon'])
    validate_cliresult(result)
    assert 'Required: omega, delta, q, g' in result.output
    assert 'Sweep:    Omega' in result.output


def test_models_wrong_fields(clirunner):
    result = clirunner.invoke(cmd_models, ['--fields', 'missed_model'])
    assert result.exit_code == 2
