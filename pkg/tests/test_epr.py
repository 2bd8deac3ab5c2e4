"""
Tests of the two-spin states, their Wigner evolution and the CHSH values.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qudi.kerr_newman.epr import NonUnitDirection, DenormalizedState, TwoSpinState
from qudi.kerr_newman.epr import MeasurementDirection, make_bell_state, spin_rotation
from qudi.kerr_newman.epr import evolve_pair, remove_trivial_rotation, correlator, chsh_value
from qudi.kerr_newman.epr import chsh_closed_form, chsh_primed, standard_directions
from qudi.kerr_newman.epr import primed_directions, corrected_directions
from qudi.kerr_newman.epr import chsh_with_alignment_error, concurrence, reduced_purity
from qudi.kerr_newman.spacetime import horizons
from qudi.kerr_newman.sweep import evaluate_point

MAXIMAL = 2.0 * np.sqrt(2.0)

angles = st.floats(-20.0, 20.0, allow_nan=False, allow_infinity=False)


class TestStates:

    def test_singlet(self):
        state = make_bell_state(phi=0.5)
        np.testing.assert_allclose(state.amplitudes, [0.0, 1.0, -1.0, 0.0] / np.sqrt(2.0))
        assert state.phi == 0.5
        np.testing.assert_allclose(concurrence(state), 1.0)
        np.testing.assert_allclose(reduced_purity(state), 0.5)

    def test_product_state(self):
        state = TwoSpinState(amplitudes=[1.0, 0.0, 0.0, 0.0])
        assert concurrence(state) == 0.0
        np.testing.assert_allclose(reduced_purity(state), 1.0)

    def test_denormalized_state_refused(self):
        with pytest.raises(DenormalizedState):
            TwoSpinState(amplitudes=[1.0, 1.0, 0.0, 0.0])

    def test_non_unit_direction_refused(self):
        with pytest.raises(NonUnitDirection):
            MeasurementDirection('Q', [1.0, 1.0, 0.0])

    def test_singlet_anticorrelation(self):
        state = make_bell_state()
        for direction in standard_directions():
            np.testing.assert_allclose(correlator(state, direction, direction), -1.0, atol=1e-14)

    def test_spin_rotation_turns_bloch_vector(self):
        angle = 0.7
        up_x = np.array([1.0, 1.0]) / np.sqrt(2.0)
        rotated = spin_rotation(angle) @ up_x
        sigma_x = MeasurementDirection('x', [1.0, 0.0, 0.0]).operator
        sigma_z = MeasurementDirection('z', [0.0, 0.0, 1.0]).operator
        np.testing.assert_allclose(np.real(rotated.conj() @ sigma_x @ rotated), np.cos(angle))
        np.testing.assert_allclose(np.real(rotated.conj() @ sigma_z @ rotated), -np.sin(angle))

    @settings(max_examples=100, deadline=None)
    @given(theta=angles, phi=st.floats(0.01, 2 * np.pi))
    def test_evolution_preserves_norm_and_entanglement(self, theta, phi):
        state = evolve_pair(make_bell_state(phi), theta)
        np.testing.assert_allclose(state.norm, 1.0, atol=1e-12)
        np.testing.assert_allclose(concurrence(state), 1.0, atol=1e-12)
        np.testing.assert_allclose(concurrence(remove_trivial_rotation(state, phi)), 1.0,
                                   atol=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(theta=angles, phi=st.floats(0.01, 2 * np.pi))
    def test_trivial_rotation_removal(self, theta, phi):
        bell = make_bell_state(phi)
        removed = remove_trivial_rotation(evolve_pair(bell, theta), phi)
        np.testing.assert_allclose(removed.amplitudes, evolve_pair(bell, theta - phi).amplitudes,
                                   atol=1e-12)

    def test_quarter_turn_amplitudes(self):
        # (sin, cos, -cos, sin)(theta)/sqrt(2) at theta = pi/4
        state = evolve_pair(make_bell_state(), np.pi / 4)
        np.testing.assert_allclose(state.amplitudes, [0.5, 0.5, -0.5, 0.5], atol=1e-14)

    def test_trivial_rotation_removal_amplitudes(self):
        bell = make_bell_state(np.pi / 4)
        removed = remove_trivial_rotation(evolve_pair(bell, np.pi / 3), np.pi / 4)
        small, large = (np.sqrt(3.0) - 1.0) / 4.0, (np.sqrt(3.0) + 1.0) / 4.0
        np.testing.assert_allclose(removed.amplitudes, [small, large, -large, small], atol=1e-14)
        np.testing.assert_allclose(removed.amplitudes, evolve_pair(bell, np.pi / 12).amplitudes,
                                   atol=1e-14)

    @pytest.mark.parametrize('error', [NonUnitDirection, DenormalizedState])
    def test_errors_are_documented(self, error):
        assert error.__doc__.strip()

    def test_non_finite_angle_refused(self):
        with pytest.raises(ValueError):
            evolve_pair(make_bell_state(), np.inf)


class TestChsh:

    def test_maximal_violation(self):
        np.testing.assert_allclose(chsh_value(make_bell_state(), standard_directions()), MAXIMAL,
                                   atol=1e-14)

    def test_random_angles_match_closed_form(self):
        rng = np.random.default_rng(20)
        bell = make_bell_state()
        for theta in rng.uniform(-10.0, 10.0, size=100):
            state = evolve_pair(bell, theta)
            assert abs(chsh_value(state, standard_directions()) - chsh_closed_form(theta)) < 1e-9
            assert abs(chsh_value(state, corrected_directions(theta)) - MAXIMAL) < 1e-9

    @settings(max_examples=100, deadline=None)
    @given(theta=angles, phi=st.floats(0.01, 2 * np.pi))
    def test_primed_directions(self, theta, phi):
        state = remove_trivial_rotation(evolve_pair(make_bell_state(phi), theta), phi)
        np.testing.assert_allclose(chsh_primed(state, phi), chsh_closed_form(theta - phi),
                                   atol=1e-9)

    @pytest.mark.parametrize('theta, expected', [(np.pi / 2, np.sqrt(2.0)),
                                                 (np.pi / 4 + np.pi / 3, np.sqrt(2.0) / 2.0)])
    def test_primed_literal_values(self, theta, expected):
        phi = np.pi / 4
        state = remove_trivial_rotation(evolve_pair(make_bell_state(phi), theta), phi)
        np.testing.assert_allclose(chsh_primed(state, phi), expected, atol=1e-12)

    def test_quarter_turn_chsh(self):
        state = evolve_pair(make_bell_state(), np.pi / 4)
        np.testing.assert_allclose(chsh_value(state, standard_directions()), np.sqrt(2.0),
                                   atol=1e-14)

    def test_primed_set_labels(self):
        labels = [direction.label for direction in primed_directions(0.3)]
        assert labels == ["Q'", "R'", "S'", "T'"]
        labels = [direction.label for direction in corrected_directions(0.3)]
        assert labels == ['Q"', 'R"', 'S"', 'T"']

    def test_corrected_restores_violation_end_to_end(self, figure_params):
        row = evaluate_point(figure_params, 3000.0, 0.5, np.pi)
        assert row['error'] == ''
        np.testing.assert_allclose(row['chsh_corrected'], MAXIMAL, atol=1e-9)
        np.testing.assert_allclose(row['chsh'], chsh_closed_form(row['theta_tau']), atol=1e-9)
        np.testing.assert_allclose(row['chsh_primed'], chsh_closed_form(row['delta_angle']),
                                   atol=1e-9)

    def test_alignment_error_grows_with_angle(self, figure_params):
        r_plus = horizons(figure_params)[0]
        bell = make_bell_state(np.pi)
        deficits = []
        for k in range(1, 7):
            row = evaluate_point(figure_params, r_plus * (1.0 + 10.0 ** -k), 0.5, np.pi)
            theta = row['theta_paper']
            value = chsh_with_alignment_error(evolve_pair(bell, theta), theta, 1e-6)
            deficits.append(MAXIMAL - value)
        assert all(later > earlier for earlier, later in zip(deficits, deficits[1:]))
        assert deficits[-1] > 1e-6

    def test_exact_alignment_has_no_deficit(self):
        state = evolve_pair(make_bell_state(), 123.4)
        np.testing.assert_allclose(chsh_with_alignment_error(state, 123.4, 0.0), MAXIMAL,
                                   atol=1e-9)
