import csv

from juddian.commands.sweep import cli as cmd_sweep

# -- g^2 - 3/16 and 4 g^2 - 3/4 on four grid points of (0, 2]
EXPECTED = [
    'param,P1,kus',
    '0.5,0.0625,0.25',
    '1,0.8125,3.25',
    '1.5,2.0625,8.25',
    '2,3.8125,15.25',
]


def test_sweep_stdout(clirunner, configenv, validate_cliresult,
                      model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(cmd_sweep, ['--grid', '4'])
        validate_cliresult(result)
        assert result.output.splitlines() == EXPECTED


def test_sweep_parallel(clirunner, configenv, validate_cliresult,
                        model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(
            cmd_sweep, ['--grid', '4', '--workers', '2']
        )
        validate_cliresult(result)
        assert result.output.splitlines() == EXPECTED


def test_sweep_file(clirunner, configenv, validate_cliresult,
                    model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(
            cmd_sweep, ['--grid', '10', '--out', 'sweep.csv']
        )
        validate_cliresult(result)
        with open('sweep.csv', newline='', encoding='utf8') as file:
            rows = list(csv.reader(file))
        assert rows[0] == ['param', 'P1', 'kus']
        assert len(rows) == 11
        assert rows[-1][0] == '2'


def test_sweep_numeric(clirunner, configenv, validate_cliresult,
                       model_file, rabi_config):
    with clirunner.isolated_filesystem():
        configenv()
        model_file(rabi_config)
        result = clirunner.invoke(
            cmd_sweep, ['--grid', '4', '--mode', 'numeric']
        )
        validate_cliresult(result)
        lines = result.output.splitlines()
        assert lines[0] == 'param,P1,kus'
        assert [line.split(',')[0] for line in lines[1:]] == [
            '0.5', '1', '1.5', '2'
        ]
