# -*- coding: utf-8 -*-
"""
Circular equatorial orbits seen by the observer at infinity: four-velocity, lapse and shift,
local momentum and the acceleration of the force keeping the particle on the orbit.

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
__all__ = ['InsideHorizon', 'Superluminal', 'NoCircularGeodesic', 'OrbitState',
           'circular_orbit', 'circular_orbit_rapidity', 'acceleration', 'geodesic_speed',
           'printed_radial_acceleration']

from dataclasses import dataclass

import numpy as np
from scipy import optimize

from qudi.core.logger import get_logger
from qudi.kerr_newman.spacetime import KerrNewmanError, BlackHoleParams, SpacetimePoint
from qudi.kerr_newman.spacetime import metric_at, christoffels_at, horizons, horizon_function
from qudi.kerr_newman.spacetime import require_subextremal

logger = get_logger(__name__)

# Upper end of the rapidity bracket searched for circular geodesics
_MAX_GEODESIC_RAPIDITY = 15.0


class InsideHorizon(KerrNewmanError):
    pass


class Superluminal(KerrNewmanError):
    pass


class NoCircularGeodesic(KerrNewmanError):
    pass


@dataclass(frozen=True)
class OrbitState:
    """ Kinematics of a particle on a circular equatorial orbit.

    four_velocity holds coordinate components u^mu, momentum the local frame components
    p^a = (m cosh(zeta), 0, 0, m sinh(zeta)).
    """
    params: BlackHoleParams
    radius: float
    rapidity: float
    mass: float
    point: SpacetimePoint
    four_velocity: np.ndarray
    momentum: np.ndarray
    lapse: float
    shift: float
    sqrt_g_phiphi: float

    @property
    def speed(self):
        return float(np.tanh(self.rapidity))

    @property
    def gamma(self):
        return float(np.cosh(self.rapidity))

    @property
    def angular_velocity(self):
        """ u^phi, the rate of azimuth per unit proper time """
        return float(self.four_velocity[3])


def circular_orbit(params, r, speed, mass=1.0):
    """ Circular orbit with local speed v = tanh(zeta).

    @param (BlackHoleParams) params: black hole parameters
    @param (float) r: orbit radius, outside the outer horizon
    @param (float) speed: speed relative to the local frame, |v| < 1, positive when co-rotating
    @param (float) mass: particle mass m > 0

    @return (OrbitState): orbit kinematics
    """
    speed = float(speed)
    if not abs(speed) < 1:
        raise Superluminal('Orbit speed must satisfy |v| < 1, got {0}.'.format(speed))
    return circular_orbit_rapidity(params, r, float(np.arctanh(speed)), mass)


def circular_orbit_rapidity(params, r, rapidity, mass=1.0):
    """ Circular orbit parameterized by the rapidity zeta.

    u^t = cosh(zeta)/N and u^phi = -N^phi cosh(zeta)/N + sinh(zeta)/sqrt(g_phiphi), with
    N = 1/sqrt(-g^tt) and N^phi = g_tphi/g_phiphi.
    """
    r = float(r)
    rapidity = float(rapidity)
    mass = float(mass)
    if not mass > 0:
        raise ValueError('Particle mass must be positive, got {0}.'.format(mass))
    if not np.isfinite(rapidity):
        raise Superluminal('Rapidity must be finite, got {0}.'.format(rapidity))
    require_subextremal(params)
    r_plus, _ = horizons(params)
    if r <= r_plus:
        raise InsideHorizon('Orbit radius {0} does not lie outside the outer horizon {1}.'
                            ''.format(r, r_plus))

    point = SpacetimePoint.equatorial(r)
    metric = metric_at(params, point)
    g = metric.covariant
    lapse = 1.0 / np.sqrt(-metric.contravariant[0, 0])
    shift = g[0, 3] / g[3, 3]
    sqrt_g_phiphi = np.sqrt(g[3, 3])

    cosh_z, sinh_z = np.cosh(rapidity), np.sinh(rapidity)
    four_velocity = np.array([cosh_z / lapse,
                              0.0,
                              0.0,
                              -shift * cosh_z / lapse + sinh_z / sqrt_g_phiphi])
    momentum = mass * np.array([cosh_z, 0.0, 0.0, sinh_z])

    residual = abs(metric.norm2(four_velocity) + 1.0)
    if residual > 1e-10 * cosh_z ** 2:
        logger.warning('Four-velocity normalization off by {0:.3e} at r={1}, zeta={2}.'
                       ''.format(residual, r, rapidity))

    return OrbitState(params=params, radius=r, rapidity=rapidity, mass=mass, point=point,
                      four_velocity=four_velocity, momentum=momentum, lapse=float(lapse),
                      shift=float(shift), sqrt_g_phiphi=float(sqrt_g_phiphi))


def acceleration(params, orbit):
    """ a^mu = u^nu nabla_nu u^mu of the force holding the particle on its orbit.

    u^mu depends on r only, so along the flow d_nu u^mu vanishes and a^mu = Gamma^mu_nu_s u^nu u^s.

    @return (np.ndarray): coordinate components a^mu
    """
    gamma = christoffels_at(params, orbit.point).symbols
    u = orbit.four_velocity
    return np.einsum('mns,n,s->m', gamma, u, u)


def geodesic_speed(params, r, prograde=True):
    """ Local speed for which the circular orbit at r is a geodesic (a^r = 0).

    @param (bool) prograde: co-rotating (v > 0) or counter-rotating (v < 0) orbit

    @return (float): signed speed v
    """
    sign = 1.0 if prograde else -1.0

    def radial_acceleration(rapidity):
        orbit = circular_orbit_rapidity(params, r, sign * rapidity)
        return acceleration(params, orbit)[1]

    low, high = radial_acceleration(0.0), radial_acceleration(_MAX_GEODESIC_RAPIDITY)
    if low == 0:
        return 0.0
    if np.sign(low) == np.sign(high):
        raise NoCircularGeodesic('No circular geodesic at r={0} ({1}).'
                                 ''.format(r, 'prograde' if prograde else 'retrograde'))
    rapidity = optimize.brentq(radial_acceleration, 0.0, _MAX_GEODESIC_RAPIDITY,
                               xtol=1e-14, rtol=1e-14, maxiter=200)
    return float(sign * np.tanh(rapidity))


def printed_radial_acceleration(params, r, rapidity):
    """ Closed form of a^r on the equator as printed with the orbit kinematics.

    Kept as an independent cross-check of acceleration(); not used by the pipeline.
    """
    m, a, q = params.mass, params.spin, params.charge
    r = float(r)
    delta = horizon_function(params, r)
    big_a = a ** 2 * (r * (2 * m + r) - q ** 2) + r ** 4
    rotation = a ** 2 * (m * r - q ** 2) + r ** 2 * (3 * m * r - 2 * q ** 2)
    boost = (2 * a ** 4 * (q ** 2 - m * r)
             + a ** 2 * (r ** 2 * (6 * m ** 2 - 3 * m * r + r ** 2) + q ** 2 * r * (3 * r - 7 * m)
                         + 2 * q ** 4)
             + r ** 4 * (r * (r - 3 * m) + 2 * q ** 2))
    bracket = (a * np.sqrt(delta) * np.sinh(2 * rapidity) * rotation * big_a
               + 0.5 * r * (m - r) * big_a ** 2
               + 0.5 * np.cosh(2 * rapidity) * boost * big_a)
    return float(-bracket / (r ** 3 * big_a ** 2))
