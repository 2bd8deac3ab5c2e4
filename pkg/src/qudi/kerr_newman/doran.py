# -*- coding: utf-8 -*-
"""
Infalling-observer analysis in Doran coordinates (T, R, theta, phi): horizon-regular metric and
vierbein, and the circular velocity field of a freely falling observer.

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
__all__ = ['ComplexLapse', 'ComplexRoot', 'DoranChart', 'DORAN', 'DoranFrame',
           'InfallingVelocity', 'doran_metric_at', 'doran_vierbein_at', 'doran_frame_at',
           'infalling_circular_velocity']

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from qudi.core.logger import get_logger
from qudi.kerr_newman import dual
from qudi.kerr_newman.spacetime import KerrNewmanError, HorizonSingular, InvalidPoint
from qudi.kerr_newman.spacetime import FrameField, SpacetimeChart, SpacetimePoint
from qudi.kerr_newman.spacetime import frame_at, horizon_function, is_on_horizon, metric_at

logger = get_logger(__name__)


class ComplexLapse(KerrNewmanError):
    """ 2MR < Q^2: the infall velocity b is imaginary """
    pass


class ComplexRoot(KerrNewmanError):
    """ The observer velocity field is not real at the requested radius """
    pass


class DoranChart(SpacetimeChart):
    """ Doran chart with the freely falling vierbein.

    Co-frame: e^0 = dT, e^1 = (b Omega/Sigma)(dT - a sin^2 theta dphi) + (Sigma/Omega) dR,
    e^2 = Sigma dtheta, e^3 = Omega sin theta dphi, with Omega = sqrt(R^2 + a^2),
    Sigma = sqrt(R^2 + a^2 cos^2 theta) and b = sqrt(2MR - Q^2)/Omega.
    """

    name = 'doran'

    def check_metric_point(self, params, point):
        if not point.r > 0:
            raise InvalidPoint('Doran radius must be positive, got {0}.'.format(point.r))
        if not 0 < point.theta < np.pi:
            raise InvalidPoint('theta must lie in (0, pi), got {0}.'.format(point.theta))
        if 2 * params.mass * point.r < params.charge ** 2:
            raise ComplexLapse('2MR < Q^2 at R={0}: the infall velocity is imaginary.'
                               ''.format(point.r))

    def check_frame_point(self, params, point):
        self.check_metric_point(params, point)

    @staticmethod
    def _blocks(params, r, theta):
        a = params.spin
        sin_theta = dual.sin(theta)
        cos_theta = dual.cos(theta)
        omega = dual.sqrt(r * r + a * a)
        sigma = dual.sqrt(r * r + a * a * cos_theta * cos_theta)
        b = dual.sqrt(2 * params.mass * r - params.charge ** 2) / omega
        # e^1 = boost dT + stretch dR + twist dphi, e^3 = ring dphi
        boost = b * omega / sigma
        stretch = sigma / omega
        twist = -a * b * omega * sin_theta * sin_theta / sigma
        ring = omega * sin_theta
        return boost, stretch, twist, ring, sigma

    def metric_components(self, params, t, r, theta, phi):
        boost, stretch, twist, ring, sigma = self._blocks(params, r, theta)
        g_tt = boost * boost - 1.0
        g_tr = boost * stretch
        g_tphi = boost * twist
        g_rphi = stretch * twist
        return [[g_tt, g_tr, 0.0, g_tphi],
                [g_tr, stretch * stretch, 0.0, g_rphi],
                [0.0, 0.0, sigma * sigma, 0.0],
                [g_tphi, g_rphi, 0.0, twist * twist + ring * ring]]

    def coframe_components(self, params, t, r, theta, phi):
        boost, stretch, twist, ring, sigma = self._blocks(params, r, theta)
        return [[1.0, 0.0, 0.0, 0.0],
                [boost, stretch, 0.0, twist],
                [0.0, 0.0, sigma, 0.0],
                [0.0, 0.0, 0.0, ring]]

    def frame_components(self, params, t, r, theta, phi):
        boost, stretch, twist, ring, sigma = self._blocks(params, r, theta)
        return [[1.0, -boost / stretch, 0.0, 0.0],
                [0.0, 1.0 / stretch, 0.0, 0.0],
                [0.0, 0.0, 1.0 / sigma, 0.0],
                [0.0, -twist / (stretch * ring), 0.0, 1.0 / ring]]


DORAN = DoranChart()


@dataclass(frozen=True)
class DoranFrame:
    """ Doran quantities at a point. sigma is the square-root Sigma of this chart, not the
    Boyer-Lindquist one """
    omega: float
    b: float
    sigma: float
    vierbein: FrameField


@dataclass(frozen=True)
class InfallingVelocity:
    """ Circular velocity field of the infalling observer on the equator.

    printed_lapse and printed_shift are the literal closed forms; lapse and shift are the
    values consistent with the normalization of the velocity field, lapse^2 = R^2 Delta/D and
    shift = a(2MR - Q^2)/D with D = R^4 + a^2 R^2 + 2 a^2 M R - a^2 Q^2.
    """
    radius: float
    horizon_function: float
    printed_lapse: float
    printed_shift: Tuple[complex, complex]
    lapse: complex
    shift: float
    u_t: complex
    u_phi: complex
    normalization: complex
    is_real: bool


def doran_metric_at(params, x):
    """ Doran metric at x = (T, R, theta, phi) """
    return metric_at(params, x, DORAN)


def doran_vierbein_at(params, x):
    """ Freely falling vierbein at x; frame holds e_a^mu, coframe the printed one-forms """
    return frame_at(params, x, DORAN)


def doran_frame_at(params, x):
    """ Omega, b, Sigma and the vierbein at x """
    vierbein = doran_vierbein_at(params, x)
    a = params.spin
    omega = np.sqrt(x.r ** 2 + a ** 2)
    return DoranFrame(omega=float(omega),
                      b=float(np.sqrt(2 * params.mass * x.r - params.charge ** 2) / omega),
                      sigma=float(np.sqrt(x.r ** 2 + a ** 2 * np.cos(x.theta) ** 2)),
                      vierbein=vierbein)


def infalling_circular_velocity(params, radius, rapidity, require_real=False):
    """ Lapse, shift and four-velocity of the infalling observer circling at radius.

    @param (BlackHoleParams) params: black hole parameters
    @param (float) radius: Doran radius R > 0
    @param (float) rapidity: rapidity zeta~ in the local frame
    @param (bool) require_real: raise ComplexRoot between the horizons instead of returning
                                complex values

    @return (InfallingVelocity): printed and consistent velocity fields
    """
    radius = float(radius)
    point = SpacetimePoint.equatorial(radius)
    DORAN.check_metric_point(params, point)
    if is_on_horizon(params, radius):
        raise HorizonSingular('Infalling velocity field is singular on the horizon R={0}.'
                              ''.format(radius))
    m, a, q = params.mass, params.spin, params.charge
    delta = float(horizon_function(params, radius))
    dragging = 2 * m * radius - q ** 2
    d = radius ** 4 + a ** 2 * radius ** 2 + a ** 2 * dragging

    printed_lapse = a * (q ** 2 - 2 * m * radius) / (-2 * a ** 2 * radius * m + a ** 2 * q ** 2
                                                   - a ** 2 * radius ** 2 - radius ** 4)
    radicand = -2 * a ** 2 * radius * m + a ** 2 * q ** 2 - a ** 2 * radius ** 2 - radius ** 4
    printed_shift = np.sqrt(complex(radicand, 0.0)) / (radius * np.sqrt(complex(delta, 0.0)))

    is_real = delta > 0
    if require_real and not is_real:
        raise ComplexRoot('Infalling velocity field is complex between the horizons (R={0}).'
                          ''.format(radius))
    lapse = np.sqrt(complex(radius ** 2 * delta / d, 0.0))
    shift = a * dragging / d

    g = doran_metric_at(params, point).covariant
    cosh_z, sinh_z = np.cosh(rapidity), np.sinh(rapidity)
    u_t = cosh_z / lapse
    u_phi = shift * cosh_z / lapse + sinh_z / np.sqrt(g[3, 3])
    normalization = g[0, 0] * u_t ** 2 + 2 * g[0, 3] * u_t * u_phi + g[3, 3] * u_phi ** 2
    if abs(normalization + 1.0) > 1e-10 * cosh_z ** 2:
        logger.warning('Infalling four-velocity normalization {0!r} at R={1}.'
                       ''.format(normalization, radius))

    return InfallingVelocity(radius=radius, horizon_function=delta,
                             printed_lapse=float(printed_lapse),
                             printed_shift=(complex(printed_shift), complex(-printed_shift)),
                             lapse=complex(lapse), shift=float(shift), u_t=complex(u_t),
                             u_phi=complex(u_phi), normalization=complex(normalization),
                             is_real=bool(is_real))
