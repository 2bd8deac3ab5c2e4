"""
Tests of the sweep logic module: option handling, scenario updates, the sweep slot, status
variables and saving; skipped without a qudi installation.
"""

import os
import re
from unittest.mock import MagicMock

import numpy as np
import pytest

pytest.importorskip('PySide2')
pytest.importorskip('qudi.core.module')

from PySide2 import QtCore
from qudi.util.mutex import Mutex

from qudi.logic import wigner_rotation_logic
from qudi.logic.wigner_rotation_logic import WignerRotationLogic, scenario_from_options
from qudi.kerr_newman.spacetime import KerrNewmanError
from qudi.kerr_newman.sweep import ScenarioConfig, ScenarioError, Dataset


class _LogicStandIn:
    """ Carries the logic methods and module attributes without a running qudi application """

    scenario = WignerRotationLogic.scenario
    dataset = WignerRotationLogic.dataset
    on_activate = WignerRotationLogic.on_activate
    on_deactivate = WignerRotationLogic.on_deactivate
    _options = WignerRotationLogic._options
    _restored_overrides = WignerRotationLogic._restored_overrides
    set_scenario = WignerRotationLogic.set_scenario
    _start_sweep = WignerRotationLogic._start_sweep
    save_sweep = WignerRotationLogic.save_sweep

    def __init__(self, data_dir='.', **status):
        self.log = MagicMock()
        self.module_state = MagicMock(return_value='idle')
        self._sigStart = MagicMock()
        self.sigSweepFinished = MagicMock()
        self.sigScenarioUpdated = MagicMock()
        self._mutex = Mutex()
        self._mass, self._spin_ratio, self._charge_ratio = 1000.0, 0.8, 0.2
        self._speeds, self._phi = [0.3, 0.5, 0.7, 0.9], np.pi
        self._r_min, self._r_max, self._r_count, self._r_scale = 1.001, 10.0, 200, 'horizon'
        self._particle_mass, self._threads = 1.0, 1
        self._data_dir = data_dir
        self._scenario_overrides = status.get('scenario_overrides', dict())
        self._last_columns = status.get('last_columns')
        self._last_rows = status.get('last_rows')
        self._scenario = None
        self._dataset = None


@pytest.fixture
def logic():
    module = _LogicStandIn()
    module.on_activate()
    return module


class TestScenarioFromOptions:

    def test_yaml_lists_become_tuples(self):
        config = scenario_from_options({'speeds': [0.3, 0.9], 'r_count': 20.0, 'threads': None})
        assert config.speeds == (0.3, 0.9)
        assert config.r_count == 20
        assert config.threads == 1

    def test_invalid_options(self):
        with pytest.raises(ScenarioError):
            scenario_from_options({'spin_ratio': 1.2})

    def test_declared_options_match_scenario_fields(self):
        fields = set(ScenarioConfig.__dataclass_fields__)
        for key in _LogicStandIn()._options():
            assert getattr(WignerRotationLogic, '_' + key).name == key
            assert key in fields
        assert WignerRotationLogic._data_dir.name == 'data_dir'


class TestActivation:

    def test_config_options_define_scenario(self, logic):
        assert logic.scenario.speeds == (0.3, 0.5, 0.7, 0.9)
        assert logic.scenario.r_count == 200
        assert logic.dataset is None
        logic._sigStart.connect.assert_called_once_with(logic._start_sweep,
                                                        QtCore.Qt.QueuedConnection)

    def test_status_variables_round_trip(self, logic):
        logic._dataset = Dataset(columns=('r', 'error'), rows=[{'r': 3000.0, 'error': ''}])
        logic.set_scenario(speeds=[0.4], r_count=5)
        logic.on_deactivate()
        logic._sigStart.disconnect.assert_called_once()

        restored = _LogicStandIn(scenario_overrides=logic._scenario_overrides,
                                 last_columns=logic._last_columns, last_rows=logic._last_rows)
        restored.on_activate()
        assert restored.dataset.columns == ('r', 'error')
        assert restored.dataset.rows == [{'r': 3000.0, 'error': ''}]
        assert restored.scenario.speeds == (0.4,)
        assert restored.scenario.r_count == 5

    def test_invalid_saved_changes_are_discarded(self):
        module = _LogicStandIn(scenario_overrides={'speeds': [2.0]})
        module.on_activate()
        module.log.warning.assert_called_once()
        assert module._scenario_overrides == dict()
        assert module.scenario.speeds == (0.3, 0.5, 0.7, 0.9)


class TestScenarioUpdates:

    def test_update_is_recorded(self, logic):
        scenario = logic.set_scenario(speeds=[0.3, 0.6], mass=None)
        assert scenario.speeds == (0.3, 0.6)
        assert scenario.mass == 1000.0
        assert logic._scenario_overrides == {'speeds': [0.3, 0.6]}
        logic.sigScenarioUpdated.emit.assert_called_once()

    def test_refused_while_locked(self, logic):
        before = logic.scenario
        logic.module_state.return_value = 'locked'
        assert logic.set_scenario(speeds=[0.3]) is before
        logic.log.error.assert_called_once()
        assert logic._scenario_overrides == dict()
        logic.sigScenarioUpdated.emit.assert_not_called()

    def test_invalid_update_keeps_scenario(self, logic):
        before = logic.scenario
        assert logic.set_scenario(phi=0.0) is before
        logic.log.error.assert_called_once()
        logic.sigScenarioUpdated.emit.assert_not_called()


class TestSweepSlot:

    def test_finished_sweep_is_stored(self, logic):
        logic.set_scenario(speeds=[0.5], r_count=3, outputs=['theta'])
        logic._start_sweep()
        assert len(logic.dataset.rows) == 3
        assert logic.dataset.columns == ('r', 'r_over_r_plus', 'v', 'theta_paper', 'theta_tau',
                                         'error')
        logic.module_state.unlock.assert_called_once()
        logic.sigSweepFinished.emit.assert_called_once()

    def test_doran_scan_is_dispatched(self, logic):
        logic.set_scenario(outputs=['doran'], r_scale='linear', r_min=200.0, r_max=3200.0,
                           r_count=4)
        logic._start_sweep()
        assert 'printed_lapse' in logic.dataset.columns

    def test_failed_sweep_keeps_previous_dataset(self, logic, monkeypatch):
        previous = Dataset(columns=('r',), rows=[])
        logic._dataset = previous

        def failing_sweep(config):
            raise KerrNewmanError('every row singular')

        monkeypatch.setattr(wigner_rotation_logic, 'run_sweep', failing_sweep)
        logic._start_sweep()
        assert logic.dataset is previous
        logic.log.error.assert_called_once()
        logic.module_state.unlock.assert_called_once()
        logic.sigSweepFinished.emit.assert_called_once()


class TestSaveSweep:

    def test_timestamped_file_in_data_dir(self, tmp_path):
        directory = tmp_path / 'wigner_rotation'
        module = _LogicStandIn(data_dir=str(directory))
        module.on_activate()
        module._dataset = Dataset(columns=('r', 'error'), rows=[{'r': 3000.0, 'error': ''}])
        path = module.save_sweep()
        assert os.path.dirname(path) == str(directory)
        assert re.fullmatch(r'\d{8}-\d{6}_wigner_rotation\.csv', os.path.basename(path))
        with open(path, newline='') as file:
            lines = file.read().split('\n')
        assert lines[0] == 'r,error'
        assert len(lines) == 3 and lines[2] == ''

    def test_explicit_path(self, logic, tmp_path):
        logic._dataset = Dataset(columns=('r',), rows=[])
        target = str(tmp_path / 'sweep.csv')
        assert logic.save_sweep(target) == target
        assert os.path.isfile(target)

    def test_nothing_to_save(self, logic):
        assert logic.save_sweep() is None
        logic.log.error.assert_called_once()
