# -*- coding: utf-8 -*-
"""
Two-particle spin states, their evolution under the local Wigner rotations and the CHSH
correlation of the pair.

The tensor product is ordered (particle at +Phi) x (particle at -Phi), basis
{up-up, up-down, down-up, down-down}.

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
__all__ = ['NonUnitDirection', 'DenormalizedState', 'PAULI', 'TwoSpinState',
           'MeasurementDirection', 'make_bell_state', 'spin_rotation', 'evolve_pair',
           'remove_trivial_rotation', 'correlator', 'chsh_value', 'chsh_closed_form',
           'chsh_primed', 'standard_directions', 'primed_directions', 'corrected_directions',
           'chsh_with_alignment_error', 'concurrence', 'reduced_purity']

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import linalg

from qudi.core.logger import get_logger
from qudi.kerr_newman.spacetime import KerrNewmanError

logger = get_logger(__name__)

PAULI = (np.array([[0, 1], [1, 0]], dtype=complex),
         np.array([[0, -1j], [1j, 0]], dtype=complex),
         np.array([[1, 0], [0, -1]], dtype=complex))

_NORM_TOLERANCE = 1e-12
_DIRECTION_TOLERANCE = 1e-9


class NonUnitDirection(KerrNewmanError):
    """ A measurement direction is not a unit vector """
    pass


class DenormalizedState(KerrNewmanError):
    """ The two-spin amplitudes are not normalized """
    pass


@dataclass(frozen=True)
class TwoSpinState:
    """ Pure two-spin state.

    amplitudes: complex amplitudes over {up-up, up-down, down-up, down-down}
    phi: azimuth of the pair, the particles sit at +phi and -phi
    momenta: optional local momenta (p_plus, p_minus)
    """
    amplitudes: np.ndarray
    phi: float = 0.0
    momenta: Optional[Tuple[np.ndarray, np.ndarray]] = None

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(4)
        object.__setattr__(self, 'amplitudes', amplitudes)
        if abs(self.norm - 1.0) > _NORM_TOLERANCE:
            raise DenormalizedState('Two-spin state norm is {0!r}, expected 1.'.format(self.norm))

    @property
    def norm(self):
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    @property
    def coefficients(self):
        """ Amplitudes as a 2x2 matrix c[i, j] for particle +phi in state i, -phi in state j """
        return self.amplitudes.reshape(2, 2)

    def with_amplitudes(self, amplitudes):
        return TwoSpinState(amplitudes=amplitudes, phi=self.phi, momenta=self.momenta)


@dataclass(frozen=True)
class MeasurementDirection:
    """ Unit spin measurement axis in a local inertial frame """
    label: str
    vector: np.ndarray

    def __post_init__(self):
        vector = np.asarray(self.vector, dtype=float).reshape(3)
        object.__setattr__(self, 'vector', vector)
        if abs(np.linalg.norm(vector) - 1.0) > _DIRECTION_TOLERANCE:
            raise NonUnitDirection('Direction {0} has norm {1!r}.'
                                   ''.format(self.label, np.linalg.norm(vector)))

    @property
    def operator(self):
        """ n . sigma """
        return sum(component * sigma for component, sigma in zip(self.vector, PAULI))


##############################################################################
#                            States and evolution
##############################################################################

def make_bell_state(phi=0.0, momenta=None):
    """ Spin singlet (|up,down> - |down,up>)/sqrt(2) """
    amplitudes = np.array([0.0, 1.0, -1.0, 0.0], dtype=complex) / np.sqrt(2.0)
    return TwoSpinState(amplitudes=amplitudes, phi=float(phi), momenta=momenta)


def spin_rotation(angle):
    """ Spin-1/2 representation exp(-i sigma_y angle/2) of a rotation about the 2-axis """
    return linalg.expm(-0.5j * angle * PAULI[1])


def evolve_pair(state, theta):
    """ Apply the local Wigner rotations, exp(-i sigma_y theta/2) at +phi, exp(+i sigma_y theta/2) at -phi.

    @param (TwoSpinState) state: initial state
    @param (float) theta: precession angle of the particle at +phi

    @return (TwoSpinState): evolved state
    """
    if not np.isfinite(theta):
        raise ValueError('Rotation angle must be finite, got {0}.'.format(theta))
    unitary = np.kron(spin_rotation(theta), spin_rotation(-theta))
    return state.with_amplitudes(unitary @ state.amplitudes)


def remove_trivial_rotation(state, phi):
    """ Re-express the state in the bases rotated by -/+phi about the 2-axis at +/-phi.

    The primed basis at +phi is cos(phi/2)|up> + sin(phi/2)|down>, -sin(phi/2)|up> + cos(phi/2)|down>;
    at -phi the sine terms change sign.
    """
    basis = np.kron(spin_rotation(phi), spin_rotation(-phi))
    return state.with_amplitudes(basis.conj().T @ state.amplitudes)


##############################################################################
#                            Correlations
##############################################################################

def correlator(state, first, second):
    """ <state| (a . sigma) x (b . sigma) |state> """
    operator = np.kron(first.operator, second.operator)
    amplitudes = state.amplitudes
    return float(np.real(amplitudes.conj() @ operator @ amplitudes))


def chsh_value(state, directions):
    """ CHSH combination <QS> + <RS> + <RT> - <QT>.

    @param (TwoSpinState) state: normalized two-spin state
    @param (tuple) directions: (Q, R, S, T); Q and R act on the particle at +phi, S and T at -phi

    @return (float): CHSH value, 2 sqrt(2) at most
    """
    q, r, s, t = directions
    return (correlator(state, q, s) + correlator(state, r, s) + correlator(state, r, t)
            - correlator(state, q, t))


def chsh_closed_form(angle):
    """ 2 sqrt(2) cos^2(angle) """
    return 2.0 * np.sqrt(2.0) * np.cos(angle) ** 2


def standard_directions():
    """ Q = (1,0,0), R = (0,1,0), S = (-1,-1,0)/sqrt(2), T = (1,-1,0)/sqrt(2) """
    root = np.sqrt(0.5)
    return (MeasurementDirection('Q', [1.0, 0.0, 0.0]),
            MeasurementDirection('R', [0.0, 1.0, 0.0]),
            MeasurementDirection('S', [-root, -root, 0.0]),
            MeasurementDirection('T', [root, -root, 0.0]))


def _rotated_directions(angle, suffix):
    root = np.sqrt(0.5)
    cos, sin = np.cos(angle), np.sin(angle)
    return (MeasurementDirection('Q' + suffix, [cos, 0.0, -sin]),
            MeasurementDirection('R' + suffix, [0.0, 1.0, 0.0]),
            MeasurementDirection('S' + suffix, [-root * cos, -root, -root * sin]),
            MeasurementDirection('T' + suffix, [root * cos, -root, root * sin]))


def primed_directions(phi):
    """ Standard set with Q, S, T turned by the azimuth phi, expressed in the unprimed frames """
    return _rotated_directions(phi, "'")


def corrected_directions(theta):
    """ Standard set turned by the precession angle theta; restores maximal violation """
    return _rotated_directions(theta, '"')


def chsh_primed(state, phi, delta_angle=None):
    """ CHSH value of the primed direction set on a state already expressed in the primed bases.

    In the primed bases the primed directions take the standard components, so the operators are
    built from the primed set turned back by -/+phi.

    @param (TwoSpinState) state: output of remove_trivial_rotation
    @param (float) phi: azimuth of the pair
    @param (float) delta_angle: optional Theta - Phi; a disagreement with 2 sqrt(2) cos^2 is logged

    @return (float): CHSH value
    """
    primed = primed_directions(phi)
    turn_plus = _rotation_about_2(-phi)
    turn_minus = _rotation_about_2(phi)
    q, r, s, t = primed
    in_primed_bases = (MeasurementDirection(q.label, turn_plus @ q.vector),
                       MeasurementDirection(r.label, turn_plus @ r.vector),
                       MeasurementDirection(s.label, turn_minus @ s.vector),
                       MeasurementDirection(t.label, turn_minus @ t.vector))
    value = chsh_value(state, in_primed_bases)
    if delta_angle is not None and abs(value - chsh_closed_form(delta_angle)) > 1e-9:
        logger.warning('Primed CHSH {0!r} differs from 2 sqrt(2) cos^2({1!r}).'
                       ''.format(value, delta_angle))
    return value


def _rotation_about_2(angle):
    """ Rotation of 3-vectors about the 2-axis, x -> x cos + z sin, z -> -x sin + z cos """
    cos, sin = np.cos(angle), np.sin(angle)
    return np.array([[cos, 0.0, sin], [0.0, 1.0, 0.0], [-sin, 0.0, cos]])


def chsh_with_alignment_error(state, theta, relative_error):
    """ CHSH value when the corrected directions use theta * (1 + relative_error) """
    return chsh_value(state, corrected_directions(theta * (1.0 + relative_error)))


##############################################################################
#                            Entanglement
##############################################################################

def concurrence(state):
    """ Wootters concurrence of a pure state, 2 |c00 c11 - c01 c10| """
    c = state.coefficients
    return float(2.0 * abs(c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0]))


def reduced_purity(state):
    """ Tr(rho_A^2) of either particle """
    c = state.coefficients
    reduced = c @ c.conj().T
    return float(np.real(np.trace(reduced @ reduced)))
