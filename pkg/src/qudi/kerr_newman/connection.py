# -*- coding: utf-8 -*-
"""
Spin connection one-forms of a frame field and the frame-change generator along a worldline.

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
__all__ = ['ConnectionField', 'LorentzGenerator', 'spin_connection_at', 'frame_change_chi',
           'frame_change_chi_from_coframe']

from dataclasses import dataclass

import numpy as np

from qudi.kerr_newman import dual
from qudi.kerr_newman.spacetime import ETA, BOYER_LINDQUIST, christoffels_at


def _scaled_max(array, reference):
    scale = np.max(np.abs(reference))
    return np.max(np.abs(array)) / scale if scale > 0 else np.max(np.abs(array))


@dataclass(frozen=True)
class LorentzGenerator:
    """ Mixed-index generator X^a_b of an (infinitesimal) local Lorentz transformation.

    Units are inverse proper time. The lowered form X_ab = eta_ac X^c_b is antisymmetric.
    """
    matrix: np.ndarray

    def __getitem__(self, item):
        return self.matrix[item]

    @property
    def lowered(self):
        return ETA @ self.matrix

    def antisymmetry_residual(self):
        lowered = self.lowered
        return _scaled_max(lowered + lowered.T, lowered)

    def max_difference(self, other):
        return np.max(np.abs(self.matrix - np.asarray(other.matrix)))


@dataclass(frozen=True)
class ConnectionField:
    """ omega_mu^a_b indexed [mu, a, b] """
    components: np.ndarray

    @property
    def lowered(self):
        return np.einsum('ac,mcb->mab', ETA, self.components)

    def antisymmetry_residual(self):
        lowered = self.lowered
        return _scaled_max(lowered + np.transpose(lowered, (0, 2, 1)), lowered)

    def contract(self, vector):
        """ v^mu omega_mu^a_b """
        return np.einsum('m,mab->ab', np.asarray(vector), self.components)


def spin_connection_at(params, x, chart=BOYER_LINDQUIST):
    """ Spin connection omega_mu^a_b = e^a_nu (d_mu e_b^nu + Gamma^nu_mu_sigma e_b^sigma).

    Frame derivatives come from dual-number differentiation of the chart's frame components.

    @param (BlackHoleParams) params: black hole parameters
    @param (SpacetimePoint) x: evaluation point
    @param (SpacetimeChart) chart: chart whose frame is transported

    @return (ConnectionField): the connection one-forms
    """
    chart.check_frame_point(params, x)
    coordinates = dual.seed(x.as_array())
    frame, frame_derivatives = dual.unpack(chart.frame_components(params, *coordinates))
    coframe, _ = dual.unpack(chart.coframe_components(params, *x.as_array()))
    gamma = christoffels_at(params, x, chart).symbols
    omega = (np.einsum('an,mbn->mab', coframe, frame_derivatives)
             + np.einsum('an,nms,bs->mab', coframe, gamma, frame))
    return ConnectionField(components=omega)


def frame_change_chi(params, orbit, chart=BOYER_LINDQUIST):
    """ Frame-change generator chi^a_b = -u^nu omega_nu^a_b along the orbit.

    omega is evaluated at orbit.point, the only point where u^nu is defined.

    @param (BlackHoleParams) params: black hole parameters
    @param (OrbitState) orbit: worldline state providing the point and four-velocity
    @param (SpacetimeChart) chart: coordinate chart of orbit.point, Boyer-Lindquist by default

    @return (LorentzGenerator): chi
    """
    omega = spin_connection_at(params, orbit.point, chart)
    return LorentzGenerator(matrix=-omega.contract(orbit.four_velocity))


def frame_change_chi_from_coframe(params, orbit, chart=BOYER_LINDQUIST):
    """ chi^a_b = u^nu e_b^mu nabla_nu e^a_mu, transporting the one-forms instead of the vectors """
    x = orbit.point
    chart.check_frame_point(params, x)
    coordinates = dual.seed(x.as_array())
    coframe, coframe_derivatives = dual.unpack(chart.coframe_components(params, *coordinates))
    frame, _ = dual.unpack(chart.frame_components(params, *x.as_array()))
    gamma = christoffels_at(params, x, chart).symbols
    # nabla_nu e^a_mu indexed [nu, a, mu]
    nabla = coframe_derivatives - np.einsum('snm,as->nam', gamma, coframe)
    chi = np.einsum('n,bm,nam->ab', np.asarray(orbit.four_velocity), frame, nabla)
    return LorentzGenerator(matrix=chi)
