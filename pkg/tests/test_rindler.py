import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unruh_discord.measures import measure_first
from unruh_discord.optimizer import MeasurementAngles
from unruh_discord.qmat import partial_trace, von_neumann_entropy
from unruh_discord.rindler import (
    NonPositiveInputError,
    Pair,
    R_MAX,
    UnruhParameter,
    acceleration_to_r,
    closed_form_conditional_eigenvalues,
    closed_form_entropy,
    reduced_state,
    thermal_occupation,
    tripartite_state,
)


# --- acceleration parameter ---------------------------------------------------

def test_acceleration_to_r_analytic_point():
    # 2*pi*omega/a = ln 3  =>  cos r = sqrt(3)/2  =>  r = pi/6
    a = 2 * math.pi / math.log(3.0)
    assert acceleration_to_r(1.0, a).r == pytest.approx(math.pi / 6, abs=1e-12)


def test_acceleration_to_r_infinite_acceleration_limit():
    assert acceleration_to_r(1.0, 1e9).r == pytest.approx(R_MAX, abs=1e-6)


def test_acceleration_to_r_inertial_limit():
    assert acceleration_to_r(1.0, 1e-3).r == 0.0


@pytest.mark.parametrize("omega,a", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -2.0)])
def test_non_positive_inputs_rejected(omega, a):
    with pytest.raises(NonPositiveInputError):
        acceleration_to_r(omega, a)
    with pytest.raises(NonPositiveInputError):
        thermal_occupation(omega, a)


def test_thermal_occupation_limits():
    assert thermal_occupation(1.0, 1e9) == pytest.approx(0.5, abs=1e-6)
    assert thermal_occupation(1.0, 2 * math.pi / math.log(3.0)) == pytest.approx(0.25, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(omega=st.floats(0.01, 100.0), a=st.floats(0.01, 100.0))
def test_thermal_occupation_equals_sin_squared_r(omega, a):
    r = acceleration_to_r(omega, a).r
    assert abs(thermal_occupation(omega, a) - math.sin(r) ** 2) <= 1e-12


def test_unruh_parameter_range():
    UnruhParameter(0.0)
    UnruhParameter(R_MAX)
    with pytest.raises(ValueError):
        UnruhParameter(-0.01)
    with pytest.raises(ValueError):
        UnruhParameter(R_MAX + 0.01)


def test_acceleration_to_r_strictly_increasing():
    values = [acceleration_to_r(1.0, a).r for a in np.geomspace(0.5, 100.0, 25)]
    assert all(b > a for a, b in zip(values, values[1:]))


# --- tripartite state ----------------------------------------------------------

def test_tripartite_state_inertial():
    amps = tripartite_state(0.0).amplitudes
    expected = np.zeros(8)
    expected[0] = expected[6] = 1 / math.sqrt(2)
    np.testing.assert_allclose(amps, expected, atol=1e-15)


def test_tripartite_state_infinite_acceleration():
    amps = tripartite_state(R_MAX).amplitudes
    assert amps[0] == pytest.approx(0.5, abs=1e-15)
    assert amps[3] == pytest.approx(0.5, abs=1e-15)
    assert amps[6] == pytest.approx(1 / math.sqrt(2), abs=1e-15)


def test_tripartite_state_support_and_norm():
    rng = np.random.default_rng(67)
    for r in rng.uniform(0.0, R_MAX, size=100):
        amps = tripartite_state(r).amplitudes
        assert np.abs(amps[[1, 2, 4, 5, 7]]).max() == 0.0
        assert np.vdot(amps, amps).real == pytest.approx(1.0, abs=1e-12)


# --- reductions -----------------------------------------------------------------

def test_reduced_state_inertial_accessible_is_bell():
    bell = np.zeros((4, 4))
    bell[0, 0] = bell[0, 3] = bell[3, 0] = bell[3, 3] = 0.5
    np.testing.assert_allclose(reduced_state(0.0, Pair.AI).data, bell, atol=1e-15)


def test_reduced_state_inertial_hidden_pairs():
    expected = np.diag([0.5, 0.0, 0.5, 0.0])
    np.testing.assert_allclose(reduced_state(0.0, Pair.AII).data, expected, atol=1e-15)
    np.testing.assert_allclose(reduced_state(0.0, Pair.III).data, expected, atol=1e-15)


def test_reduced_state_wedge_pair_diagonal_at_pi_six():
    diag = np.diag(reduced_state(math.pi / 6, Pair.III).data).real
    np.testing.assert_allclose(diag, [3 / 8, 0.0, 0.5, 1 / 8], atol=1e-15)


def test_factory_matches_partial_trace():
    rng = np.random.default_rng(71)
    for r in rng.uniform(0.0, R_MAX, size=200):
        projector = tripartite_state(r).density_matrix((2, 2, 2))
        for pair in Pair:
            direct = reduced_state(r, pair)
            traced = partial_trace(projector, pair.kept_indices)
            assert np.abs(direct.data - traced.data).max() <= 1e-14


def test_pair_accepts_strings():
    assert reduced_state(0.3, "AII").dims == (2, 2)
    assert Pair("III").measured == "I"
    assert Pair.AI.labels == ("A", "I")


# --- closed forms ----------------------------------------------------------------

def test_closed_form_entropy_examples():
    assert closed_form_entropy(0.0, Pair.AI) == pytest.approx(0.0, abs=1e-12)
    expected = 2.0 - 0.75 * math.log2(3.0)
    assert closed_form_entropy(R_MAX, Pair.AI) == pytest.approx(expected, abs=1e-12)
    assert closed_form_entropy(0.0, Pair.AII) == pytest.approx(1.0, abs=1e-12)


def test_closed_form_entropy_matches_numeric_on_grid():
    for r in np.linspace(0.0, R_MAX, 101):
        for pair in Pair:
            gap = abs(closed_form_entropy(r, pair) - von_neumann_entropy(reduced_state(r, pair)))
            assert gap <= 1e-10, (r, pair)


def test_conditional_eigenvalues_polar():
    r = 0.6
    lam = closed_form_conditional_eigenvalues(r, 0.0)
    np.testing.assert_allclose(
        lam, [math.cos(r) ** 2, math.sin(r) ** 2, 1.0, 0.0], atol=1e-12)


def test_conditional_eigenvalues_inertial():
    np.testing.assert_allclose(
        closed_form_conditional_eigenvalues(0.0, 1.234), [1.0, 0.0, 1.0, 0.0], atol=1e-12)


def test_conditional_eigenvalues_equator_infinite_acceleration():
    lam = closed_form_conditional_eigenvalues(R_MAX, math.pi / 2)
    hi = 0.5 * (1 + math.sqrt(3) / 2)
    np.testing.assert_allclose(lam, [hi, 1 - hi, hi, 1 - hi], atol=1e-12)


def test_conditional_eigenvalues_match_measurement_spectra():
    for r in np.linspace(0.0, R_MAX, 20):
        state = reduced_state(r, Pair.AI)
        for theta in np.linspace(0.0, math.pi, 20):
            expected = closed_form_conditional_eigenvalues(r, theta)
            plus, minus = measure_first(state, MeasurementAngles(theta, 0.4))
            got = tuple(plus.post_state.spectrum) + tuple(minus.post_state.spectrum)
            assert max(abs(e - g) for e, g in zip(expected, got)) <= 1e-10


@settings(max_examples=60, deadline=None)
@given(r=st.floats(0.0, R_MAX), theta=st.floats(0.0, math.pi))
def test_conditional_eigenvalues_are_probability_pairs(r, theta):
    hi_p, lo_p, hi_m, lo_m = closed_form_conditional_eigenvalues(r, theta)
    for pair_sum in (hi_p + lo_p, hi_m + lo_m):
        assert pair_sum == pytest.approx(1.0, abs=1e-12)
    assert all(-1e-12 <= x <= 1.0 + 1e-12 for x in (hi_p, lo_p, hi_m, lo_m))


# --- purity complementarity -------------------------------------------------------

def test_pure_state_complementarity():
    for r in np.linspace(0.0, R_MAX, 21):
        projector = tripartite_state(r).density_matrix((2, 2, 2))
        s_joint = {pair: von_neumann_entropy(reduced_state(r, pair)) for pair in Pair}
        s_single = {label: von_neumann_entropy(partial_trace(projector, (k,)))
                    for k, label in enumerate("A I II".split())}
        assert abs(s_joint[Pair.AI] - s_single["II"]) <= 1e-10
        assert abs(s_joint[Pair.AII] - s_single["I"]) <= 1e-10
        assert abs(s_joint[Pair.III] - s_single["A"]) <= 1e-10
        assert abs(s_single["A"] - 1.0) <= 1e-10
