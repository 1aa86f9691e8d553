from juddian.commands.slice import cli as cmd_slice


def test_slice_without_config(clirunner, configenv):
    with clirunner.isolated_filesystem():
        configenv()
        result = clirunner.invoke(cmd_slice)
        assert result.exit_code == 2
        assert 'Error: no model config file' in result.output


def test_slice_rabi(clirunner, configenv, validate_cliresult,
                    model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(cmd_slice)
        validate_cliresult(result)
        assert 'Grade signature: gamma=1, gamma*=-2, width=4' in result.output
        assert 'Alternative: A2' in result.output
        assert 'Infinity is an irregular singular point' in result.output


def test_slice_other_config(clirunner, configenv, validate_cliresult,
                            model_file):
    with clirunner.isolated_filesystem():
        configenv()
        name = model_file({
            'model': 'koc', 'omega': '2/5', 'delta': '1/10', 'g': '1/3',
        }, name='koc.json')
        result = clirunner.invoke(cmd_slice, ['--config', name, '-v'])
        validate_cliresult(result)
        assert 'gamma=1, gamma*=-1, width=3' in result.output
        assert 'Operator:' in result.output


def test_slice_bad_model(clirunner, configenv, model_file):
    with clirunner.isolated_filesystem():
        configenv()
        model_file({'model': 'jaynes-cummings', 'omega': '1'})
        result = clirunner.invoke(cmd_slice)
        assert result.exit_code == 2
        assert "unknown model 'jaynes-cummings'" in result.output
