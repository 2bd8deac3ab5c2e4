# -*- coding: utf-8 -*-
"""
Kerr-Newman geometry: black hole parameters, horizons, metric, Christoffel symbols and the
Boyer-Lindquist local frame field.

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
__all__ = ['KerrNewmanError', 'NakedSingularity', 'ExtremalHorizon', 'HorizonSingular',
           'RingSingularity', 'InvalidPoint', 'ETA', 'HORIZON_TOLERANCE', 'BlackHoleParams',
           'SpacetimePoint', 'MetricTensor', 'FrameField', 'ChristoffelField', 'SpacetimeChart',
           'BoyerLindquistChart', 'BOYER_LINDQUIST', 'horizons', 'horizon_function',
           'is_on_horizon', 'require_subextremal', 'metric_at', 'metric_derivatives_at',
           'christoffels_at', 'frame_at', 'tetrad_at']

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from qudi.core.logger import get_logger
from qudi.kerr_newman import dual

logger = get_logger(__name__)

ETA = np.diag([-1.0, 1.0, 1.0, 1.0])

# |Delta(r)| below HORIZON_TOLERANCE * max(M^2, r^2) counts as "on the horizon"
HORIZON_TOLERANCE = 1e-12


class KerrNewmanError(Exception):
    """ Base class of all physics-domain errors raised by this package """
    pass


class NakedSingularity(KerrNewmanError):
    """ M^2 < a^2 + Q^2: no horizon exists """
    pass


class ExtremalHorizon(KerrNewmanError):
    """ M^2 = a^2 + Q^2: accepted for horizons, refused by orbit and EPR operations """
    pass


class HorizonSingular(KerrNewmanError):
    """ The requested quantity is singular on (or between) the horizons in this chart """
    pass


class RingSingularity(KerrNewmanError):
    """ Sigma = r^2 + a^2 cos^2(theta) vanishes, the point lies on the ring singularity """
    pass


class InvalidPoint(KerrNewmanError):
    """ The point is outside the chart, e.g. on the symmetry axis or at r <= 0 """
    pass


@dataclass(frozen=True)
class BlackHoleParams:
    """ Kerr-Newman family in geometric units (G = c = 1).

    mass M, spin a (angular momentum per unit mass) and charge Q all have dimension of length.
    M = 0 is only accepted together with a = Q = 0 (Minkowski space).
    """
    mass: float
    spin: float = 0.0
    charge: float = 0.0

    def __post_init__(self):
        for name in ('mass', 'spin', 'charge'):
            value = float(getattr(self, name))
            if not np.isfinite(value) or value < 0:
                raise ValueError('Black hole {0} must be finite and non-negative, got {1}.'
                                 ''.format(name, value))
            object.__setattr__(self, name, value)
        if self.mass == 0 and (self.spin > 0 or self.charge > 0):
            raise NakedSingularity('Spin and charge require a positive mass.')
        if self.discriminant < 0:
            raise NakedSingularity('M^2 < a^2 + Q^2 for M={0}, a={1}, Q={2}: no horizon exists.'
                                   ''.format(self.mass, self.spin, self.charge))

    @classmethod
    def from_ratios(cls, mass, spin_ratio=0.0, charge_ratio=0.0):
        """ Build parameters from a and Q given as fractions of M, e.g. a=0.8M, Q=0.2M """
        mass = float(mass)
        return cls(mass=mass, spin=spin_ratio * mass, charge=charge_ratio * mass)

    @property
    def discriminant(self):
        return self.mass ** 2 - self.spin ** 2 - self.charge ** 2

    @property
    def is_flat(self):
        return self.mass == 0

    @property
    def is_extremal(self):
        return self.mass > 0 and self.discriminant == 0

    @property
    def r_plus(self):
        return horizons(self)[0]

    @property
    def r_minus(self):
        return horizons(self)[1]


@dataclass(frozen=True)
class SpacetimePoint:
    """ Point in (t, r, theta, phi) coordinates; r is a length, angles in radians """
    t: float
    r: float
    theta: float
    phi: float

    @classmethod
    def equatorial(cls, r, t=0.0, phi=0.0):
        return cls(t=float(t), r=float(r), theta=np.pi / 2, phi=float(phi))

    def as_array(self):
        return np.array([self.t, self.r, self.theta, self.phi], dtype=float)


@dataclass(frozen=True)
class MetricTensor:
    covariant: np.ndarray
    contravariant: np.ndarray

    def inverse_residual(self):
        """ Largest entry of g_mu_nu g^nu_lambda - delta """
        return np.max(np.abs(self.covariant @ self.contravariant - np.eye(4)))

    def signature(self):
        """ (number of negative, number of positive) eigenvalues """
        eigenvalues = np.linalg.eigvalsh(self.covariant)
        return int(np.sum(eigenvalues < 0)), int(np.sum(eigenvalues > 0))

    def lower(self, vector):
        return self.covariant @ np.asarray(vector)

    def norm2(self, vector):
        vector = np.asarray(vector)
        return vector @ self.covariant @ vector


@dataclass(frozen=True)
class FrameField:
    """ Orthonormal frame at a point.

    frame[a, mu] holds the vector e_a^mu, coframe[a, mu] the one-form e^a_mu.
    """
    frame: np.ndarray
    coframe: np.ndarray

    def reconstructed_metric(self):
        """ g_mu_nu = eta_ab e^a_mu e^b_nu """
        return self.coframe.T @ ETA @ self.coframe

    def duality_residual(self):
        return np.max(np.abs(self.coframe @ self.frame.T - np.eye(4)))

    def orthonormality_residual(self, metric):
        """ Largest deviation of g(e_a, e_b) from eta_ab """
        covariant = metric.covariant if isinstance(metric, MetricTensor) else np.asarray(metric)
        gram = self.frame @ covariant @ self.frame.T
        return np.max(np.abs(gram - ETA))

    def to_local(self, vector):
        """ Local components v^a = e^a_mu v^mu """
        return self.coframe @ np.asarray(vector)

    def to_coordinates(self, vector):
        """ Coordinate components v^mu = e_a^mu v^a """
        return self.frame.T @ np.asarray(vector)


@dataclass(frozen=True)
class ChristoffelField:
    """ Gamma^lambda_mu_nu at a point together with the metric data it was built from """
    symbols: np.ndarray
    metric: np.ndarray
    metric_derivatives: np.ndarray

    def covariant_metric_derivative(self):
        """ nabla_lambda g_mu_nu, indexed [lambda, mu, nu] """
        gamma_g = np.einsum('slm,sn->lmn', self.symbols, self.metric)
        return self.metric_derivatives - gamma_g - np.transpose(gamma_g, (0, 2, 1))

    def compatibility_residual(self):
        """ max |nabla g| scaled by max |d g| """
        scale = max(np.max(np.abs(self.metric_derivatives)), 1e-300)
        return np.max(np.abs(self.covariant_metric_derivative())) / scale


class SpacetimeChart(ABC):
    """ Interface class to define a coordinate chart of the Kerr-Newman family.

    Component methods receive coordinates that may be plain floats or dual numbers and must only
    use arithmetic and the functions of qudi.kerr_newman.dual, so that the same code gives
    values and exact derivatives.
    """

    name = ''

    @abstractmethod
    def check_metric_point(self, params, point):
        """ Raise a KerrNewmanError if the metric is not defined or not invertible at point.

        @param (BlackHoleParams) params: black hole parameters
        @param (SpacetimePoint) point: point to check
        """
        pass

    @abstractmethod
    def check_frame_point(self, params, point):
        """ Raise a KerrNewmanError if the frame field is not real and finite at point. """
        pass

    @abstractmethod
    def metric_components(self, params, t, r, theta, phi):
        """ Covariant metric components as a nested 4x4 list.

        @return (list): g_mu_nu, with the very same object at [mu][nu] and [nu][mu]
        """
        pass

    @abstractmethod
    def frame_components(self, params, t, r, theta, phi):
        """ Frame vectors e_a^mu as a nested 4x4 list indexed [a][mu] """
        pass

    @abstractmethod
    def coframe_components(self, params, t, r, theta, phi):
        """ Frame one-forms e^a_mu as a nested 4x4 list indexed [a][mu] """
        pass

    def inverse_metric(self, params, point):
        """ Contravariant metric g^mu_nu = eta^ab e_a^mu e_b^nu.

        Charts with a closed-form inverse valid where the frame is not real override this.
        """
        frame, _ = dual.unpack(self.frame_components(params, *point.as_array()))
        return frame.T @ ETA @ frame


class BoyerLindquistChart(SpacetimeChart):
    """ Boyer-Lindquist chart with the zero-angular-momentum observer frame.

    The frame e_0 = N^-1 (d_t - N^phi d_phi), e_1 = sqrt(Delta/Sigma) d_r, e_2 = d_theta/sqrt(Sigma),
    e_3 = d_phi/sqrt(g_phiphi) reduces to the static spherical frame when a = 0.
    """

    name = 'boyer-lindquist'

    def check_metric_point(self, params, point):
        if not 0 < point.theta < np.pi:
            raise InvalidPoint('theta must lie in (0, pi), got {0}.'.format(point.theta))
        sigma = point.r ** 2 + params.spin ** 2 * np.cos(point.theta) ** 2
        if sigma <= 0:
            raise RingSingularity('Sigma vanishes at r={0}, theta={1}.'.format(point.r, point.theta))
        if is_on_horizon(params, point.r):
            raise HorizonSingular('Boyer-Lindquist metric is not invertible on the horizon r={0}.'
                                  ''.format(point.r))

    def check_frame_point(self, params, point):
        self.check_metric_point(params, point)
        if horizon_function(params, point.r) <= 0:
            raise HorizonSingular('Boyer-Lindquist frame is not real between the horizons '
                                  '(r={0}).'.format(point.r))

    @staticmethod
    def _common(params, r, theta):
        a = params.spin
        sin_theta = dual.sin(theta)
        cos_theta = dual.cos(theta)
        sin2 = sin_theta * sin_theta
        sigma = r * r + a * a * cos_theta * cos_theta
        delta = horizon_function(params, r)
        r2a2 = r * r + a * a
        big_a = r2a2 * r2a2 - a * a * delta * sin2
        return a, sin_theta, sin2, sigma, delta, r2a2, big_a

    def metric_components(self, params, t, r, theta, phi):
        a, _, sin2, sigma, delta, r2a2, big_a = self._common(params, r, theta)
        g_tt = -(delta - a * a * sin2) / sigma
        g_tphi = -a * sin2 * (r2a2 - delta) / sigma
        g_phiphi = sin2 * big_a / sigma
        g_rr = sigma / delta
        return [[g_tt, 0.0, 0.0, g_tphi],
                [0.0, g_rr, 0.0, 0.0],
                [0.0, 0.0, sigma, 0.0],
                [g_tphi, 0.0, 0.0, g_phiphi]]

    def _lapse_shift(self, params, r, theta):
        a, sin_theta, _, sigma, delta, r2a2, big_a = self._common(params, r, theta)
        lapse = dual.sqrt(delta * sigma / big_a)
        angular_velocity = a * (r2a2 - delta) / big_a
        sqrt_g_phiphi = sin_theta * dual.sqrt(big_a / sigma)
        return lapse, angular_velocity, sqrt_g_phiphi, sigma, delta

    def frame_components(self, params, t, r, theta, phi):
        lapse, omega, sqrt_g_phiphi, sigma, delta = self._lapse_shift(params, r, theta)
        return [[1.0 / lapse, 0.0, 0.0, omega / lapse],
                [0.0, dual.sqrt(delta / sigma), 0.0, 0.0],
                [0.0, 0.0, 1.0 / dual.sqrt(sigma), 0.0],
                [0.0, 0.0, 0.0, 1.0 / sqrt_g_phiphi]]

    def coframe_components(self, params, t, r, theta, phi):
        lapse, omega, sqrt_g_phiphi, sigma, delta = self._lapse_shift(params, r, theta)
        return [[lapse, 0.0, 0.0, 0.0],
                [0.0, dual.sqrt(sigma / delta), 0.0, 0.0],
                [0.0, 0.0, dual.sqrt(sigma), 0.0],
                [-omega * sqrt_g_phiphi, 0.0, 0.0, sqrt_g_phiphi]]

    def inverse_metric(self, params, point):
        a, _, sin2, sigma, delta, r2a2, big_a = self._common(params, point.r, point.theta)
        inverse = np.zeros((4, 4))
        inverse[0, 0] = -big_a / (delta * sigma)
        inverse[0, 3] = inverse[3, 0] = -a * (r2a2 - delta) / (delta * sigma)
        inverse[3, 3] = (delta - a * a * sin2) / (delta * sigma * sin2)
        inverse[1, 1] = delta / sigma
        inverse[2, 2] = 1.0 / sigma
        return inverse


BOYER_LINDQUIST = BoyerLindquistChart()


##############################################################################
#                            Horizons
##############################################################################

def horizons(params):
    """ Outer and inner horizon radii, the roots of Delta(r) = 0.

    @param (BlackHoleParams) params: black hole parameters

    @return (tuple): (r_plus, r_minus)
    """
    if params.discriminant < 0:
        raise NakedSingularity('No horizon exists for M^2 < a^2 + Q^2.')
    r_plus = params.mass + np.sqrt(params.discriminant)
    # Vieta form keeps r_minus accurate when a^2 + Q^2 << M^2
    a2q2 = params.spin ** 2 + params.charge ** 2
    r_minus = a2q2 / r_plus if a2q2 > 0 else 0.0
    return float(r_plus), float(r_minus)


def horizon_function(params, r):
    """ Delta(r) = r^2 - 2Mr + a^2 + Q^2, evaluated in factored form (r - r+)(r - r-) """
    r_plus, r_minus = horizons(params)
    return (r - r_plus) * (r - r_minus)


def is_on_horizon(params, r):
    scale = max(params.mass ** 2, float(r) ** 2)
    return abs(horizon_function(params, float(r))) < HORIZON_TOLERANCE * scale


def require_subextremal(params):
    """ Refuse extremal parameters for orbit and EPR operations """
    if params.is_extremal:
        raise ExtremalHorizon('Extremal black holes (M^2 = a^2 + Q^2) are not supported for '
                              'orbits.')


##############################################################################
#                            Metric and connection coefficients
##############################################################################

def metric_at(params, x, chart=BOYER_LINDQUIST):
    """ Metric tensor and its inverse at a point.

    @param (BlackHoleParams) params: black hole parameters
    @param (SpacetimePoint) x: evaluation point
    @param (SpacetimeChart) chart: coordinate chart, Boyer-Lindquist by default

    @return (MetricTensor): covariant and contravariant components
    """
    chart.check_metric_point(params, x)
    covariant, _ = dual.unpack(chart.metric_components(params, *x.as_array()))
    metric = MetricTensor(covariant=covariant, contravariant=chart.inverse_metric(params, x))
    scale = max(1.0, np.max(np.abs(covariant)) * np.max(np.abs(metric.contravariant)))
    if metric.inverse_residual() > 1e-9 * scale:
        logger.warning('Inverse metric residual {0:.3e} at {1} in {2} chart.'
                       ''.format(metric.inverse_residual(), x, chart.name))
    return metric


def metric_derivatives_at(params, x, chart=BOYER_LINDQUIST):
    """ Metric components and their partial derivatives from dual-number differentiation.

    @return (tuple): (g[mu, nu], dg[lambda, mu, nu]) with dg = d_lambda g_mu_nu
    """
    chart.check_metric_point(params, x)
    covariant, derivatives = dual.unpack(chart.metric_components(params, *dual.seed(x.as_array())))
    if np.any(derivatives[0]) or np.any(derivatives[3]):
        raise RuntimeError('Metric of the {0} chart depends on t or phi.'.format(chart.name))
    return covariant, derivatives


def christoffels_at(params, x, chart=BOYER_LINDQUIST):
    """ Christoffel symbols of the second kind.

    Gamma^l_mn = 1/2 g^ls (d_m g_sn + d_n g_sm - d_s g_mn)

    @return (ChristoffelField): symbols indexed [lambda, mu, nu]
    """
    covariant, derivatives = metric_derivatives_at(params, x, chart)
    contravariant = chart.inverse_metric(params, x)
    first_kind = 0.5 * (np.einsum('msn->smn', derivatives)
                        + np.einsum('nsm->smn', derivatives)
                        - derivatives)
    symbols = np.einsum('ls,smn->lmn', contravariant, first_kind)
    symbols = 0.5 * (symbols + np.transpose(symbols, (0, 2, 1)))
    return ChristoffelField(symbols=symbols, metric=covariant, metric_derivatives=derivatives)


##############################################################################
#                            Frame fields
##############################################################################

def frame_at(params, x, chart=BOYER_LINDQUIST):
    """ Orthonormal frame of the given chart at x """
    chart.check_frame_point(params, x)
    coordinates = x.as_array()
    frame, _ = dual.unpack(chart.frame_components(params, *coordinates))
    coframe, _ = dual.unpack(chart.coframe_components(params, *coordinates))
    return FrameField(frame=frame, coframe=coframe)


def tetrad_at(params, x):
    """ Boyer-Lindquist tetrad (zero-angular-momentum frame).

    @param (BlackHoleParams) params: black hole parameters
    @param (SpacetimePoint) x: evaluation point, outside the outer horizon

    @return (FrameField): e_a^mu and e^a_mu
    """
    return frame_at(params, x, BOYER_LINDQUIST)
