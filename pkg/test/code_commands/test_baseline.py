from juddian.commands.baseline import cli as cmd_baseline


def test_baseline_rabi(clirunner, configenv, validate_cliresult,
                       model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(cmd_baseline)
        validate_cliresult(result)
        assert 'E_1 = ' in result.output
        assert 'Clearing factor: 2*g' in result.output
        assert 'F_1' in result.output and 'F_-2' in result.output


def test_baseline_without_degree(clirunner, configenv, model_file,
                                 rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        config = dict(rabi_config)
        del config['n']
        model_file(config)
        result = clirunner.invoke(cmd_baseline)
        assert result.exit_code == 2
        assert 'no baseline degree' in result.output


def test_baseline_without_coupling(clirunner, configenv, model_file):
    # -- g = 0 removes the top grade: F_0(n) is quadratic in E
    with clirunner.isolated_filesystem():
        configenv()
        model_file({
            'model': 'rabi', 'omega': '1', 'delta': '1/2', 'g': '0', 'n': 1,
        })
        result = clirunner.invoke(cmd_baseline)
        assert result.exit_code == 3
        assert 'nonlinear in the energy' in result.output
