"""
Shared fixtures: the parameter sets of the published curve families, Minkowski and
Schwarzschild space, and symbolic oracles for the equatorial zero-angular-momentum frame.
"""

import numpy as np
import pytest
import sympy

from qudi.kerr_newman.spacetime import BlackHoleParams
from qudi.kerr_newman.sweep import FIGURE_PARAMETER_SETS


@pytest.fixture
def figure_params():
    """ M = 1000, a = 0.8M, Q = 0.2M """
    return BlackHoleParams.from_ratios(1000.0, 0.8, 0.2)


@pytest.fixture(params=FIGURE_PARAMETER_SETS, ids=lambda ratios: 'a{0}-q{1}'.format(*ratios))
def figure_family(request):
    spin_ratio, charge_ratio = request.param
    return BlackHoleParams.from_ratios(1000.0, spin_ratio, charge_ratio)


@pytest.fixture
def unit_params():
    """ Same shape as the figure parameters with M = 1 """
    return BlackHoleParams.from_ratios(1.0, 0.8, 0.2)


@pytest.fixture
def minkowski():
    return BlackHoleParams(mass=0.0)


@pytest.fixture
def schwarzschild():
    return BlackHoleParams(mass=1.0)


def _equatorial_frame_quantities(params, radius, speed):
    r = sympy.symbols('r', positive=True)
    m, a, q = (sympy.Float(value, 40) for value in (params.mass, params.spin, params.charge))
    delta = r ** 2 - 2 * m * r + a ** 2 + q ** 2
    big_a = r ** 4 + a ** 2 * r ** 2 + 2 * a ** 2 * m * r - a ** 2 * q ** 2
    circumference = sympy.sqrt(big_a) / r
    lapse = r * sympy.sqrt(delta) / sympy.sqrt(big_a)
    dragging = a * (2 * m * r - q ** 2) / big_a

    point = {r: sympy.Float(radius, 40)}

    def at(expression):
        return float(sympy.N(expression.subs(point), 30))

    log_lapse = at(sympy.diff(lapse, r) / lapse)
    log_circumference = at(sympy.diff(circumference, r) / circumference)
    alpha = at(sympy.sqrt(delta) / r) * log_lapse
    k = at(sympy.sqrt(delta) / r) * log_circumference
    beta = at(circumference * sympy.sqrt(big_a) * sympy.diff(dragging, r) / (2 * r ** 2))
    ratio = at(circumference * sympy.diff(dragging, r) / lapse)

    v = speed
    gamma = 1.0 / np.sqrt(1.0 - v ** 2)
    return {'alpha': alpha,
            'k': k,
            'beta': beta,
            'chi_0_1': -gamma * (alpha + beta * v),
            'chi_1_3': gamma * (k * v - beta),
            'lambda_0_1': gamma * (gamma ** 2 * v ** 2 * (alpha - k)
                                   + (2 * gamma ** 2 - 1) * v * beta),
            'lambda_1_3': gamma ** 3 * v * (k - alpha) - gamma * beta * (2 * gamma ** 2 * v ** 2 + 1),
            'vartheta_1_3': gamma ** 2 * v * (k - alpha) - (2 * gamma ** 2 - 1) * beta,
            'a_r': at(delta / r ** 2) * gamma ** 2 * (log_lapse - v ** 2 * log_circumference
                                                      + v * ratio)}


@pytest.fixture
def zamo_oracle():
    """ Closed forms of chi, lambda, vartheta and a^r for the equatorial circular orbit.

    Returns a callable (params, radius, speed) -> dict, evaluated from sympy derivatives of
    lapse N, circumferential radius R and frame dragging rate omega.
    """
    return _equatorial_frame_quantities
