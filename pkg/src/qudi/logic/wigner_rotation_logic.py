# -*- coding: utf-8 -*-
"""
This file contains a Qudi logic module running Wigner rotation and CHSH sweeps around a
Kerr-Newman black hole.

Qudi is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Qudi is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Qudi. If not, see <http://www.gnu.org/licenses/>.

Copyright (c) the Qudi Developers. See the COPYRIGHT.txt file at the
top-level directory of this distribution and at <https://github.com/Ulm-IQO/qudi/>
"""
__all__ = ['WignerRotationLogic', 'scenario_from_options']

import os
import time

import numpy as np
from PySide2 import QtCore

from qudi.core.module import LogicBase
from qudi.core.statusvariable import StatusVar
from qudi.core.configoption import ConfigOption
from qudi.util.mutex import Mutex

from qudi.kerr_newman.spacetime import KerrNewmanError
from qudi.kerr_newman.sweep import ScenarioConfig, ScenarioError, run_sweep, run_doran_scan
from qudi.kerr_newman.sweep import Dataset, write_csv


def scenario_from_options(options):
    """ Build a validated ScenarioConfig from a dict of module options.

    @param (dict) options: ScenarioConfig field values, lists accepted for speeds and outputs

    @return (ScenarioConfig): validated scenario
    """
    values = {key: value for key, value in options.items() if value is not None}
    for key in ('speeds', 'outputs'):
        if key in values:
            values[key] = tuple(values[key])
    for key in ('r_count', 'threads'):
        if key in values:
            values[key] = int(values[key])
    return ScenarioConfig(**values).validate()


class WignerRotationLogic(LogicBase):
    """ This logic module runs orbit sweeps and Doran horizon scans in its own thread

    Example config for copy-paste:

    wigner_rotation_logic:
        module.Class: 'wigner_rotation_logic.WignerRotationLogic'
        options:
            mass: 1000
            spin_ratio: 0.8
            charge_ratio: 0.2
            speeds: [0.3, 0.5, 0.7, 0.9]
            phi: 3.141592653589793
            r_min: 1.001
            r_max: 10
            r_count: 200
            r_scale: 'horizon'
            particle_mass: 1
            threads: 1
            data_dir: '~/qudi/Data/wigner_rotation'
    """

    # declare config options :
    _mass = ConfigOption('mass', default=1000.0, missing='warn')
    _spin_ratio = ConfigOption('spin_ratio', default=0.8, missing='warn')
    _charge_ratio = ConfigOption('charge_ratio', default=0.2, missing='warn')
    _speeds = ConfigOption('speeds', default=[0.3, 0.5, 0.7, 0.9])
    _phi = ConfigOption('phi', default=np.pi)
    _r_min = ConfigOption('r_min', default=1.001)
    _r_max = ConfigOption('r_max', default=10.0)
    _r_count = ConfigOption('r_count', default=200)
    _r_scale = ConfigOption('r_scale', default='horizon')
    _particle_mass = ConfigOption('particle_mass', default=1.0)
    _threads = ConfigOption('threads', default=1)
    _data_dir = ConfigOption('data_dir', default=os.path.join('~', 'qudi', 'Data',
                                                         'wigner_rotation'))

    # declare status variables :
    _scenario_overrides = StatusVar('scenario_overrides', default=dict())
    _last_columns = StatusVar('last_columns', default=None)
    _last_rows = StatusVar('last_rows', default=None)

    _sigStart = QtCore.Signal()
    sigSweepFinished = QtCore.Signal()
    sigScenarioUpdated = QtCore.Signal()

    ##############################################################################
    #                            Basic functions
    ##############################################################################

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._mutex = Mutex()
        self._scenario = None
        self._dataset = None

    def on_activate(self):
        """ Initialisation performed during activation of the module. """
        try:
            self._scenario = scenario_from_options(self._options())
        except ScenarioError as err:
            self.log.error('Invalid scenario in module config, using defaults: {0}'.format(err))
            self._scenario = ScenarioConfig()
        if self._scenario_overrides:
            try:
                overrides = self._restored_overrides()
                self._scenario = self._scenario.with_overrides(**overrides).validate()
            except (ScenarioError, TypeError) as err:
                self.log.warning('Discarding saved scenario changes: {0}'.format(err))
                self._scenario_overrides = dict()
        if self._last_columns and self._last_rows is not None:
            self._dataset = Dataset(columns=tuple(self._last_columns), rows=list(self._last_rows))
        self._sigStart.connect(self._start_sweep, QtCore.Qt.QueuedConnection)

    def on_deactivate(self):
        """ Deinitialisation performed during deactivation of the module. """
        if self.module_state() != 'idle':
            self.log.warning('Deactivating while a sweep is running.')
        if self._dataset is not None:
            self._last_columns = list(self._dataset.columns)
            self._last_rows = list(self._dataset.rows)
        self._sigStart.disconnect()

    def _options(self):
        return {'mass': self._mass, 'spin_ratio': self._spin_ratio,
                'charge_ratio': self._charge_ratio, 'speeds': self._speeds, 'phi': self._phi,
                'r_min': self._r_min, 'r_max': self._r_max, 'r_count': self._r_count,
                'r_scale': self._r_scale, 'particle_mass': self._particle_mass,
                'threads': self._threads}

    def _restored_overrides(self):
        overrides = dict(self._scenario_overrides)
        for key in ('speeds', 'outputs'):
            if key in overrides:
                overrides[key] = tuple(overrides[key])
        return overrides

    ##############################################################################
    #                            Scenario
    ##############################################################################

    @property
    def scenario(self):
        with self._mutex:
            return self._scenario

    def set_scenario(self, **values):
        """ Update scenario fields; the change is refused while a sweep is running.

        @param values: ScenarioConfig fields to override

        @return (ScenarioConfig): scenario in use after the call
        """
        if self.module_state() == 'locked':
            self.log.error('Sweep is still running, module state is currently locked.')
            return self.scenario
        values = {k: tuple(v) if isinstance(v, list) else v for k, v in values.items()}
        with self._mutex:
            try:
                self._scenario = self._scenario.with_overrides(**values).validate()
            except (ScenarioError, TypeError) as err:
                self.log.error('Scenario not updated: {0}'.format(err))
                return self._scenario
            self._scenario_overrides = dict(self._scenario_overrides,
                                            **{k: list(v) if isinstance(v, tuple) else v
                                               for k, v in values.items() if v is not None})
        self.sigScenarioUpdated.emit()
        return self.scenario

    ##############################################################################
    #                            Sweep functions
    ##############################################################################

    @property
    def dataset(self):
        with self._mutex:
            return self._dataset

    def start_sweep(self):
        """ Start the sweep in the module's thread and return immediately """
        if self.module_state() == 'locked':
            self.log.error('Sweep is still running, module state is currently locked.')
            return
        self.module_state.lock()
        self._sigStart.emit()

    def take_sweep(self, timeout=None):
        """ Start a sweep, wait for it to finish and return the dataset

        @param (float) timeout: seconds to wait, no limit if None

        @return (Dataset): the newly computed dataset, None on failure or timeout
        """
        if self.module_state() == 'locked':
            self.log.error('Sweep is still running, module state is currently locked.')
            return None
        start = time.monotonic()
        self.start_sweep()
        while self.module_state() != 'idle':
            if timeout is not None and time.monotonic() - start > timeout:
                self.log.error('Sweep did not finish within {0} s.'.format(timeout))
                return None
            time.sleep(0.05)
        return self.dataset

    @QtCore.Slot()
    def _start_sweep(self):
        scenario = self.scenario
        self.log.info('Sweep started.')
        try:
            if 'doran' in scenario.outputs:
                dataset = run_doran_scan(scenario)
            else:
                dataset = run_sweep(scenario)
        except (ScenarioError, KerrNewmanError) as err:
            self.log.error('Sweep failed: {0}: {1}'.format(type(err).__name__, err))
            dataset = None
        with self._mutex:
            if dataset is not None:
                self._dataset = dataset
        if dataset is not None and dataset.failed_rows:
            self.log.warning('{0} of {1} rows carry an error tag.'
                             ''.format(len(dataset.failed_rows), len(dataset.rows)))
        self.log.info('Sweep finished.')
        self.module_state.unlock()
        self.sigSweepFinished.emit()

    def save_sweep(self, filepath=None):
        """ Write the last dataset as CSV

        @param (str) filepath: destination, a timestamped file in data_dir if None

        @return (str): path written, None if there is nothing to save
        """
        dataset = self.dataset
        if dataset is None:
            self.log.error('No sweep data to save.')
            return None
        if filepath is None:
            directory = os.path.expanduser(self._data_dir)
            os.makedirs(directory, exist_ok=True)
            filepath = os.path.join(directory,
                                    time.strftime('%Y%m%d-%H%M%S') + '_wigner_rotation.csv')
        with open(filepath, 'w', newline='') as file:
            write_csv(dataset, file)
        self.log.info('Sweep saved to {0}'.format(filepath))
        return filepath
