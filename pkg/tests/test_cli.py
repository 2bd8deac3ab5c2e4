"""
Tests of the command line front end: config files, flag overrides, exit codes and CSV output.
"""

import csv

import numpy as np
import pytest

from qudi.kerr_newman.cli import EXIT_OK, EXIT_USAGE, EXIT_PHYSICS, main, parse_value
from qudi.kerr_newman.cli import read_config_file
from qudi.kerr_newman.spacetime import BlackHoleParams, horizons
from qudi.kerr_newman.sweep import ScenarioError

MINKOWSKI_ARGS = ['--mass', '0', '--spin-ratio', '0', '--charge-ratio', '0', '--speed', '0.6',
                  '--r-scale', 'linear', '--r-min', '10', '--r-max', '10', '--r-count', '1']


class TestConfigFile:

    def test_parse_values(self):
        assert parse_value('speeds', '0.3, 0.5,0.9') == (0.3, 0.5, 0.9)
        assert parse_value('outputs', 'Theta,chsh') == ('theta', 'chsh')
        assert parse_value('r_count', '12') == 12
        assert parse_value('include_horizons', 'no') is False
        assert parse_value('mass', '1e3') == 1000.0
        with pytest.raises(ScenarioError):
            parse_value('r_count', 'many')

    def test_read_file(self, tmp_path):
        path = tmp_path / 'scenario.cfg'
        path.write_text('# far field\nmass = 2000\n\nspeeds = 0.3,0.7  # two orbits\n'
                        'r_scale = log\n')
        assert read_config_file(str(path)) == {'mass': 2000.0, 'speeds': (0.3, 0.7),
                                               'r_scale': 'log'}

    def test_duplicate_key_last_wins(self, tmp_path):
        path = tmp_path / 'scenario.cfg'
        path.write_text('mass = 1\nmass = 5\n')
        assert read_config_file(str(path)) == {'mass': 5.0}

    @pytest.mark.parametrize('text', ['colour = red\n', 'mass 5\n'])
    def test_malformed_file(self, tmp_path, text):
        path = tmp_path / 'scenario.cfg'
        path.write_text(text)
        with pytest.raises(ScenarioError):
            read_config_file(str(path))


class TestMain:

    def test_minkowski_run_to_file(self, tmp_path):
        destination = tmp_path / 'flat.csv'
        assert main(MINKOWSKI_ARGS + ['--output', str(destination)]) == EXIT_OK
        with open(destination, newline='') as file:
            rows = list(csv.DictReader(file))
        assert len(rows) == 1
        row = rows[0]
        assert row['error'] == ''
        assert row['r_over_r_plus'] == ''
        np.testing.assert_allclose(float(row['vartheta_1_3']), 0.09375, rtol=1e-9)
        np.testing.assert_allclose(float(row['chsh_corrected']), 2.0 * np.sqrt(2.0), atol=1e-9)

    def test_stdout_stream(self, capsys):
        assert main(['--r-count', '3', '--speed', '0.3,0.5', '--outputs', 'chsh']) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == 'r,r_over_r_plus,v,chsh,error'
        assert len(lines) == 1 + 3 * 2

    def test_config_file_with_overrides(self, tmp_path):
        config = tmp_path / 'scenario.cfg'
        destination = tmp_path / 'out.csv'
        config.write_text('spin_ratio = 0.9\ncharge_ratio = 0.1\nr_count = 4\n'
                          'outputs = theta\nspeeds = 0.3\n')
        args = ['--config', str(config), '--r-count', '2', '--output', str(destination)]
        assert main(args) == EXIT_OK
        with open(destination, newline='') as file:
            reader = csv.DictReader(file)
            rows = list(reader)
        assert reader.fieldnames == ['r', 'r_over_r_plus', 'v', 'theta_paper', 'theta_tau',
                                     'error']
        assert len(rows) == 2
        assert {row['v'] for row in rows} == {'0.29999999999999999'}

    def test_empty_grid(self):
        assert main(['--r-count', '0']) == EXIT_USAGE

    def test_unknown_config_key(self, tmp_path):
        config = tmp_path / 'scenario.cfg'
        config.write_text('colour = red\n')
        assert main(['--config', str(config)]) == EXIT_USAGE

    def test_bad_choice(self):
        with pytest.raises(SystemExit) as info:
            main(['--r-scale', 'cubic'])
        assert info.value.code == 2

    def test_naked_singularity(self):
        assert main(['--spin-ratio', '0.9', '--charge-ratio', '0.5']) == EXIT_PHYSICS

    def test_doran_scan_on_the_horizon_only(self):
        r_plus = horizons(BlackHoleParams.from_ratios(1000.0, 0.8, 0.2))[0]
        args = ['--outputs', 'doran', '--r-scale', 'linear', '--r-min', repr(float(r_plus)),
                '--r-max', repr(float(r_plus)), '--r-count', '1', '--no-horizons']
        assert main(args) == EXIT_PHYSICS

    def test_doran_scan(self, capsys):
        args = ['--outputs', 'doran', '--r-scale', 'linear', '--r-min', '300', '--r-max', '3000',
                '--r-count', '10']
        assert main(args) == EXIT_OK
        rows = list(csv.DictReader(capsys.readouterr().out.splitlines()))
        assert len(rows) == 12
        assert [row['singular'] for row in rows].count('1') == 2
