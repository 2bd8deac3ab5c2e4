# -*- coding: utf-8 -*-
"""
Local Lorentz transformation, Wigner rotation generator and finite spin precession angles of a
particle on a circular equatorial orbit.

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
__all__ = ['StationaryParticle', 'StandardBoost', 'WignerAngles', 'ThomasPrecession',
           'llt_lambda', 'trivial_generator', 'wigner_generator', 'wigner_finite',
           'closed_form_wigner', 'standard_boost', 'wigner_from_boosts', 'wigner_angles',
           'thomas_precession_check']

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import linalg

from qudi.kerr_newman.spacetime import KerrNewmanError, ETA, BlackHoleParams, tetrad_at
from qudi.kerr_newman.connection import LorentzGenerator, frame_change_chi
from qudi.kerr_newman.orbit import acceleration, circular_orbit_rapidity


class StationaryParticle(KerrNewmanError):
    """ u^phi vanishes, so the particle never reaches the azimuth Phi """
    pass


@dataclass(frozen=True)
class StandardBoost:
    """ Pure boost L^a_b(p) taking the rest momentum (m, 0, 0, 0) to p^a """
    matrix: np.ndarray
    gamma: float

    def lorentz_residual(self):
        return np.max(np.abs(self.matrix.T @ ETA @ self.matrix - ETA))


@dataclass(frozen=True)
class WignerAngles:
    """ Spin precession accumulated while the particle travels the azimuth phi.

    theta is the exponent of the time-ordered Wigner rotation, vartheta^1_3 * Phi/u^phi.
    theta_paper is Phi * r/sinh(zeta) * vartheta^1_3, which agrees with theta only when u^phi
    carries no frame-dragging term; it is None for zeta = 0.
    proper_time is Phi/u^phi and is negative when u^phi < 0, so that
    wigner_finite(vartheta, proper_time) reproduces theta on retrograde orbits.
    """
    theta: float
    theta_paper: Optional[float]
    phi: float
    proper_time: float

    @property
    def delta_angle(self):
        return self.theta - self.phi

    @property
    def delta_paper(self):
        if self.theta_paper is None:
            return None
        return self.theta_paper - self.phi


@dataclass(frozen=True)
class ThomasPrecession:
    """ Both sides of the low-velocity spin precession relation, per unit coordinate time """
    lhs: float
    rhs: float

    @property
    def relative_deviation(self):
        if self.rhs == 0:
            return 0.0 if self.lhs == 0 else np.inf
        return abs(self.lhs / self.rhs - 1.0)


##############################################################################
#                            Infinitesimal transformations
##############################################################################

def llt_lambda(params, orbit, chi=None):
    """ Infinitesimal local Lorentz transformation along the orbit.

    lambda^a_b = -(1/m)(a^a p_b - p^a a_b) + chi^a_b

    @param (BlackHoleParams) params: black hole parameters
    @param (OrbitState) orbit: circular orbit
    @param (LorentzGenerator) chi: precomputed frame-change generator, computed if omitted

    @return (LorentzGenerator): lambda^a_b
    """
    if chi is None:
        chi = frame_change_chi(params, orbit)
    local_acceleration = tetrad_at(params, orbit.point).to_local(acceleration(params, orbit))
    p = orbit.momentum
    boost = (np.outer(local_acceleration, ETA @ p) - np.outer(p, ETA @ local_acceleration))
    return LorentzGenerator(matrix=-boost / orbit.mass + chi.matrix)


def trivial_generator(orbit):
    """ Rotation about the 2-axis at the rate u^phi, the bare turning of the local frame """
    matrix = np.zeros((4, 4))
    matrix[1, 3] = orbit.angular_velocity
    matrix[3, 1] = -orbit.angular_velocity
    return LorentzGenerator(matrix=matrix)


def wigner_generator(lam, momentum, mass):
    """ Generator of the infinitesimal Wigner rotation.

    vartheta^i_k = lambda^i_k + (lambda^i_0 p_k - lambda_k0 p^i)/(p^0 + m), all other entries 0.

    @param (LorentzGenerator) lam: local Lorentz transformation generator
    @param (np.ndarray) momentum: local momentum p^a
    @param (float) mass: particle mass

    @return (LorentzGenerator): vartheta^a_b
    """
    lam = np.asarray(lam.matrix if isinstance(lam, LorentzGenerator) else lam)
    p = np.asarray(momentum, dtype=float)
    if not p[0] + mass > 0:
        raise ValueError('p^0 + m must be positive.')
    p_lower = ETA @ p
    lam_lower = ETA @ lam
    spatial = slice(1, 4)
    matrix = np.zeros((4, 4))
    matrix[spatial, spatial] = (lam[spatial, spatial]
                                + (np.outer(lam[spatial, 0], p_lower[spatial])
                                   - np.outer(p[spatial], lam_lower[spatial, 0])) / (p[0] + mass))
    return LorentzGenerator(matrix=matrix)


##############################################################################
#                            Finite rotations
##############################################################################

def closed_form_wigner(theta, sign=1):
    """ Rotation about the 2-axis: W^1_1 = W^3_3 = cos(theta), W^1_3 = -W^3_1 = sign * sin(theta) """
    w = np.eye(4)
    w[1, 1] = w[3, 3] = np.cos(theta)
    w[1, 3] = sign * np.sin(theta)
    w[3, 1] = -sign * np.sin(theta)
    return w


def wigner_finite(generator, proper_time):
    """ Finite Wigner rotation for a generator constant along the orbit.

    @param (LorentzGenerator) generator: vartheta^a_b
    @param (float) proper_time: elapsed proper time

    @return (tuple): (W^a_b as np.ndarray, theta = vartheta^1_3 * proper_time)
    """
    matrix = np.asarray(generator.matrix if isinstance(generator, LorentzGenerator)
                        else generator)
    return linalg.expm(matrix * proper_time), float(matrix[1, 3] * proper_time)


def standard_boost(momentum, mass):
    """ Boost L(p): L^0_0 = gamma, L^0_i = L^i_0 = p^i/m, L^i_k = delta_ik + (gamma-1) p^i p^k/|p|^2 """
    p = np.asarray(momentum, dtype=float)
    spatial = p[1:]
    p2 = spatial @ spatial
    gamma = np.sqrt(p2 + mass ** 2) / mass
    matrix = np.eye(4)
    matrix[0, 0] = gamma
    matrix[0, 1:] = matrix[1:, 0] = spatial / mass
    if p2 > 0:
        matrix[1:, 1:] += (gamma - 1.0) * np.outer(spatial, spatial) / p2
    return StandardBoost(matrix=matrix, gamma=float(gamma))


def wigner_from_boosts(lam, momentum, mass, proper_time):
    """ W = L^-1(Lambda p) Lambda L(p) with Lambda = exp(lambda * proper_time) """
    lam = np.asarray(lam.matrix if isinstance(lam, LorentzGenerator) else lam)
    p = np.asarray(momentum, dtype=float)
    transformation = linalg.expm(lam * proper_time)
    initial = standard_boost(p, mass).matrix
    final = standard_boost(transformation @ p, mass).matrix
    return np.linalg.solve(final, transformation @ initial)


def wigner_angles(params, orbit, phi, vartheta=None):
    """ Precession angles after the particle has advanced by the azimuth phi.

    @param (BlackHoleParams) params: black hole parameters
    @param (OrbitState) orbit: circular orbit
    @param (float) phi: azimuth travelled, in radians
    @param (LorentzGenerator) vartheta: precomputed Wigner generator, computed if omitted

    @return (WignerAngles): both angle definitions and the proper time of flight
    """
    if vartheta is None:
        vartheta = wigner_generator(llt_lambda(params, orbit), orbit.momentum, orbit.mass)
    angular_velocity = orbit.angular_velocity
    if angular_velocity == 0:
        raise StationaryParticle('u^phi vanishes at r={0}, zeta={1}.'
                                 ''.format(orbit.radius, orbit.rapidity))
    rate = vartheta.matrix[1, 3]
    theta = float(rate * phi / angular_velocity)
    sinh_z = np.sinh(orbit.rapidity)
    theta_paper = float(phi * orbit.radius / sinh_z * rate) if sinh_z != 0 else None
    return WignerAngles(theta=theta, theta_paper=theta_paper, phi=float(phi),
                        proper_time=float(phi / angular_velocity))


def thomas_precession_check(r, rapidity):
    """ Low-velocity precession in flat space.

    Left side: (vartheta^3_1 - chi^3_1)/cosh(zeta), the precession per coordinate time.
    Right side: -v a/2 with a = |a^r| = sinh^2(zeta)/r.

    @return (ThomasPrecession): both sides
    """
    flat = BlackHoleParams(mass=0.0)
    orbit = circular_orbit_rapidity(flat, r, rapidity)
    chi = frame_change_chi(flat, orbit)
    vartheta = wigner_generator(llt_lambda(flat, orbit, chi=chi), orbit.momentum, orbit.mass)
    lhs = (vartheta.matrix[3, 1] - chi.matrix[3, 1]) / np.cosh(rapidity)
    rhs = -orbit.speed * abs(acceleration(flat, orbit)[1]) / 2.0
    return ThomasPrecession(lhs=float(lhs), rhs=float(rhs))
