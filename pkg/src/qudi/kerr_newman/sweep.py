# -*- coding: utf-8 -*-
"""
Parameter sweeps over circular-orbit radii and speeds, the Doran horizon scan and their CSV
rendering.

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
__all__ = ['ScenarioError', 'RadiusScale', 'OUTPUT_CHOICES', 'FIGURE_PARAMETER_SETS',
           'ScenarioConfig', 'Dataset', 'radius_grid', 'evaluate_point', 'run_sweep',
           'run_doran_scan', 'format_value', 'write_csv']

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import List, Tuple

import numpy as np

from qudi.core.logger import get_logger
from qudi.kerr_newman.spacetime import KerrNewmanError, HorizonSingular, BlackHoleParams
from qudi.kerr_newman.spacetime import SpacetimePoint, horizons, require_subextremal
from qudi.kerr_newman.connection import frame_change_chi
from qudi.kerr_newman.orbit import circular_orbit
from qudi.kerr_newman.wigner import llt_lambda, wigner_generator, wigner_angles
from qudi.kerr_newman.epr import make_bell_state, evolve_pair, remove_trivial_rotation
from qudi.kerr_newman.epr import chsh_value, chsh_primed, standard_directions
from qudi.kerr_newman.epr import corrected_directions
from qudi.kerr_newman.doran import doran_frame_at, infalling_circular_velocity

logger = get_logger(__name__)

# (spin ratio a/M, charge ratio Q/M) of the two reference curve families
FIGURE_PARAMETER_SETS = ((0.8, 0.2), (0.9, 0.1))

OUTPUT_CHOICES = ('lambda', 'theta', 'delta', 'chsh', 'chsh_primed', 'chsh_corrected', 'doran')

_OUTPUT_COLUMNS = {'lambda': ('lambda_0_1', 'lambda_1_3', 'vartheta_1_3'),
                   'theta': ('theta_paper', 'theta_tau'),
                   'delta': ('delta_angle', 'delta_paper'),
                   'chsh': ('chsh',),
                   'chsh_primed': ('chsh_primed',),
                   'chsh_corrected': ('chsh_corrected',)}

_SWEEP_BASE_COLUMNS = ('r', 'r_over_r_plus', 'v')

DORAN_COLUMNS = ('R', 'delta', 'b', 'omega', 'printed_lapse', 'printed_shift_plus_re',
                 'printed_shift_plus_im', 'printed_shift_minus_re', 'printed_shift_minus_im',
                 'lapse_re', 'lapse_im', 'shift', 'singular', 'error')

# Row-level conditions: the row is kept with an error tag
_ROW_ERRORS = (KerrNewmanError,)


class ScenarioError(ValueError):
    """ Invalid scenario configuration or usage """
    pass


class RadiusScale(Enum):
    """ Spacing of the radial grid

    LINEAR : r_min..r_max evenly spaced, absolute radii
    LOG : r_min..r_max geometrically spaced, absolute radii
    HORIZON : r_min, r_max in units of r_plus, offsets r/r_plus - 1 geometrically spaced
    """
    LINEAR = 'linear'
    LOG = 'log'
    HORIZON = 'horizon'


@dataclass(frozen=True)
class ScenarioConfig:
    """ Complete description of a sweep; field names double as config file keys """
    mass: float = 1000.0
    spin_ratio: float = 0.8
    charge_ratio: float = 0.2
    speeds: Tuple[float, ...] = (0.5,)
    phi: float = np.pi
    r_min: float = 1.001
    r_max: float = 10.0
    r_count: int = 200
    r_scale: str = RadiusScale.HORIZON.value
    outputs: Tuple[str, ...] = OUTPUT_CHOICES[:-1]
    output: str = '-'
    threads: int = 1
    particle_mass: float = 1.0
    include_horizons: bool = True

    def validate(self):
        """ Raise ScenarioError for inconsistent or out-of-range settings """
        if not np.isfinite(self.mass) or self.mass < 0:
            raise ScenarioError('mass must be finite and non-negative.')
        for name in ('spin_ratio', 'charge_ratio'):
            if not 0 <= getattr(self, name) < 1:
                raise ScenarioError('{0} must lie in [0, 1).'.format(name))
        if not self.speeds:
            raise ScenarioError('At least one speed is required.')
        for speed in self.speeds:
            if not abs(speed) < 1:
                raise ScenarioError('Speeds must satisfy |v| < 1, got {0}.'.format(speed))
        if not 0 < self.phi <= 2 * np.pi:
            raise ScenarioError('phi must lie in (0, 2 pi].')
        if self.r_count < 1:
            raise ScenarioError('The radius grid is empty (r_count < 1).')
        if not 0 < self.r_min <= self.r_max or not np.isfinite(self.r_max):
            raise ScenarioError('Radius grid requires 0 < r_min <= r_max.')
        try:
            scale = RadiusScale(self.r_scale)
        except ValueError:
            raise ScenarioError('Unknown radius scale {0!r}.'.format(self.r_scale)) from None
        if scale is RadiusScale.HORIZON:
            if self.mass == 0:
                raise ScenarioError('Horizon-relative radii need a black hole (mass > 0).')
            if not self.r_min > 1:
                raise ScenarioError('Horizon-relative r_min must exceed 1.')
        if not self.outputs:
            raise ScenarioError('No outputs requested.')
        unknown = [name for name in self.outputs if name not in OUTPUT_CHOICES]
        if unknown:
            raise ScenarioError('Unknown outputs: {0}.'.format(', '.join(unknown)))
        if 'doran' in self.outputs and len(self.outputs) > 1:
            raise ScenarioError('The doran scan cannot be combined with orbit outputs.')
        if self.threads < 1:
            raise ScenarioError('threads must be at least 1.')
        if not self.particle_mass > 0:
            raise ScenarioError('particle_mass must be positive.')
        return self

    def black_hole(self):
        return BlackHoleParams.from_ratios(self.mass, self.spin_ratio, self.charge_ratio)

    def with_overrides(self, **overrides):
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


@dataclass
class Dataset:
    columns: Tuple[str, ...]
    rows: List[dict] = field(default_factory=list)

    @property
    def failed_rows(self):
        return [row for row in self.rows if row.get('error')]

    @property
    def all_failed(self):
        return bool(self.rows) and len(self.failed_rows) == len(self.rows)

    def column(self, name):
        return [row.get(name) for row in self.rows]


##############################################################################
#                            Grids
##############################################################################

def radius_grid(config, params=None, horizon_points=False):
    """ Ascending radii of the sweep.

    @param (ScenarioConfig) config: scenario
    @param (BlackHoleParams) params: black hole, built from config if omitted
    @param (bool) horizon_points: insert r_minus and r_plus when they fall inside the range

    @return (np.ndarray): radii
    """
    params = config.black_hole() if params is None else params
    scale = RadiusScale(config.r_scale)
    if scale is RadiusScale.LINEAR:
        grid = np.linspace(config.r_min, config.r_max, config.r_count)
    elif scale is RadiusScale.LOG:
        grid = np.geomspace(config.r_min, config.r_max, config.r_count)
    else:
        r_plus, _ = horizons(params)
        grid = r_plus * (1.0 + np.geomspace(config.r_min - 1.0, config.r_max - 1.0,
                                            config.r_count))
    if horizon_points and params.mass > 0:
        extra = [r for r in horizons(params) if grid[0] <= r <= grid[-1]]
        grid = np.union1d(grid, extra)
    return np.asarray(grid, dtype=float)


##############################################################################
#                            Orbit sweep
##############################################################################

def sweep_columns(outputs):
    columns = list(_SWEEP_BASE_COLUMNS)
    for name in OUTPUT_CHOICES:
        if name in outputs and name in _OUTPUT_COLUMNS:
            columns.extend(_OUTPUT_COLUMNS[name])
    columns.append('error')
    return tuple(columns)


def evaluate_point(params, radius, speed, phi, particle_mass=1.0):
    """ Full pipeline at one (r, v) grid point.

    @return (dict): every sweep column; numeric entries are None and 'error' names the condition
                    when the point cannot be evaluated
    """
    r_plus, _ = horizons(params)
    row = {'r': float(radius), 'r_over_r_plus': float(radius / r_plus) if r_plus > 0 else None,
           'v': float(speed), 'error': ''}
    try:
        orbit = circular_orbit(params, radius, speed, particle_mass)
        chi = frame_change_chi(params, orbit)
        lam = llt_lambda(params, orbit, chi=chi)
        vartheta = wigner_generator(lam, orbit.momentum, orbit.mass)
        angles = wigner_angles(params, orbit, phi, vartheta=vartheta)

        bell = make_bell_state(phi, momenta=(orbit.momentum, orbit.momentum * [1, 1, 1, -1]))
        evolved = evolve_pair(bell, angles.theta)
        values = {'lambda_0_1': lam[0, 1],
                  'lambda_1_3': lam[1, 3],
                  'vartheta_1_3': vartheta[1, 3],
                  'theta_paper': angles.theta_paper,
                  'theta_tau': angles.theta,
                  'delta_angle': angles.delta_angle,
                  'delta_paper': angles.delta_paper,
                  'chsh': chsh_value(evolved, standard_directions()),
                  'chsh_primed': chsh_primed(remove_trivial_rotation(evolved, phi), phi,
                                             angles.delta_angle),
                  'chsh_corrected': chsh_value(evolved, corrected_directions(angles.theta))}
    except _ROW_ERRORS as err:
        logger.debug('Point r={0}, v={1} failed: {2}'.format(radius, speed, err))
        row['error'] = type(err).__name__
        return row
    if not all(value is None or np.isfinite(value) for value in values.values()):
        row['error'] = 'NonFinite'
        return row
    row.update({key: None if value is None else float(value) for key, value in values.items()})
    return row


def run_sweep(config):
    """ Evaluate every (r, v) grid point; rows ordered by r, then v, for any thread count.

    @param (ScenarioConfig) config: validated scenario with orbit outputs

    @return (Dataset): rows restricted to the requested columns
    """
    config.validate()
    params = config.black_hole()
    require_subextremal(params)
    tasks = [(radius, speed) for radius in radius_grid(config, params)
             for speed in sorted(config.speeds)]
    logger.info('Sweeping {0} grid points with {1} thread(s).'.format(len(tasks), config.threads))

    def evaluate(task):
        return evaluate_point(params, task[0], task[1], config.phi, config.particle_mass)

    with ThreadPoolExecutor(max_workers=config.threads) as executor:
        rows = list(executor.map(evaluate, tasks))
    columns = sweep_columns(config.outputs)
    return Dataset(columns=columns, rows=[{key: row.get(key) for key in columns} for row in rows])


##############################################################################
#                            Doran scan
##############################################################################

def _doran_row(params, radius, rapidity):
    row = dict.fromkeys(DORAN_COLUMNS)
    row.update({'R': float(radius), 'delta': None, 'singular': False, 'error': ''})
    try:
        frame = doran_frame_at(params, SpacetimePoint.equatorial(radius))
        row.update({'b': frame.b, 'omega': frame.omega})
        velocity = infalling_circular_velocity(params, radius, rapidity)
    except HorizonSingular as err:
        row.update({'singular': True, 'error': type(err).__name__})
        return row
    except KerrNewmanError as err:
        row['error'] = type(err).__name__
        return row
    plus, minus = velocity.printed_shift
    row.update({'delta': velocity.horizon_function,
                'printed_lapse': velocity.printed_lapse,
                'printed_shift_plus_re': plus.real, 'printed_shift_plus_im': plus.imag,
                'printed_shift_minus_re': minus.real, 'printed_shift_minus_im': minus.imag,
                'lapse_re': velocity.lapse.real, 'lapse_im': velocity.lapse.imag,
                'shift': velocity.shift})
    return row


def run_doran_scan(config):
    """ Infalling-observer quantities on the radial grid, horizons inserted by default.

    @param (ScenarioConfig) config: validated scenario, radii in absolute units

    @return (Dataset): one row per radius with the singular flag set on the horizons
    """
    config.validate()
    params = config.black_hole()
    rapidity = float(np.arctanh(sorted(config.speeds)[0]))
    grid = radius_grid(config, params, horizon_points=config.include_horizons)
    logger.info('Scanning {0} Doran radii with {1} thread(s).'.format(len(grid), config.threads))
    with ThreadPoolExecutor(max_workers=config.threads) as executor:
        rows = list(executor.map(lambda radius: _doran_row(params, radius, rapidity), grid))
    return Dataset(columns=DORAN_COLUMNS, rows=rows)


##############################################################################
#                            CSV
##############################################################################

def format_value(value):
    """ Render one CSV cell; floats with 17 significant digits, missing values empty """
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return '1' if value else '0'
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), '.17g')


def write_csv(dataset, stream):
    """ Write the dataset with a header row, ',' separators and LF line endings """
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(dataset.columns)
    for row in dataset.rows:
        writer.writerow([format_value(row.get(column)) for column in dataset.columns])
