import math
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from vacuumlab import double_slit as ds
from vacuumlab import wavepacket as wp
from vacuumlab.constants import EV
from vacuumlab.errors import DomainError

BASE = ds.SlitScenario(1e-3, 1.0, 1e-3 * EV, 100.0, 1e-6)
X = wp.centered_grid(128, 0.1)
K = wp.conjugate_grid(X)


def test_phi_max_spot_value():
    s = ds.SlitScenario(1e-3, 1.0, 1.602176634e-19)
    assert ds.phi_max(s) == pytest.approx(oracles.PHI_MAX_1MM_1EV, rel=1e-6)
    assert ds.phi_max(s) == pytest.approx(oracles.phi_max(1e-3, 1.602176634e-19), rel=1e-12)
    assert ds.phi_max(s) == pytest.approx(9.866e-5, rel=1e-4)


def test_delta_y_pair():
    s = ds.SlitScenario(1e-3, 1.0, EV)
    plus, minus = ds.delta_y(s)
    assert plus == pytest.approx(9.866e-5, rel=1e-4)
    assert plus + minus == 0.0
    assert ds.delta_y(ds.SlitScenario(1e-3, 2.0, EV))[0] == pytest.approx(2 * plus, rel=1e-15)


@given(st.floats(1e-6, 1.0), st.floats(1e-3, 1e3), st.floats(1e-22, 1e-15))
def test_scaling_laws(D, L, dE):
    s = ds.SlitScenario(D, L, dE)
    ref = ds.phi_max(BASE) * BASE.D * BASE.delta_E
    assert ds.phi_max(s) * D * dE == pytest.approx(ref, rel=1e-12)
    assert abs(ds.delta_y(s)[0]) == pytest.approx(L * ds.phi_max(s), rel=1e-12)
    assert ds.phi_max(ds.SlitScenario(2 * D, L, dE)) == pytest.approx(ds.phi_max(s) / 2, rel=1e-14)
    assert ds.phi_max(ds.SlitScenario(D, L, 2 * dE)) == pytest.approx(ds.phi_max(s) / 2, rel=1e-14)


@pytest.mark.parametrize("field,value", [("D", 0.0), ("delta_E", -1.0), ("L", 0.0), ("wavelength", 0.0), ("gamma", 0.5)])
def test_scenario_validation(field, value):
    kw = dict(D=1e-3, L=1.0, delta_E=EV, gamma=100.0, wavelength=1e-6)
    kw[field] = value
    with pytest.raises(DomainError):
        ds.SlitScenario(**kw)


def test_low_gamma_warns():
    with pytest.warns(RuntimeWarning, match="gamma"):
        ds.phi_max(ds.SlitScenario(1e-3, 1.0, EV, gamma=2.0))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        ds.phi_max(BASE)


def test_pattern_even_and_peaked_at_centre():
    y = 1e-6 * (np.arange(4001) - 2000)
    inten = ds.interference_pattern(BASE, y)
    assert np.max(np.abs(inten - inten[::-1])) < 1e-12
    assert inten[2000] == 1.0
    assert np.all(inten <= 1.0)


def test_fringe_spacing():
    y = 1e-6 * (np.arange(20001) - 10000)
    inten = ds.interference_pattern(BASE, y)
    assert ds.measure_fringe_spacing(y, inten) == pytest.approx(5e-4, rel=1e-2)
    assert ds.fringe_spacing_estimate(BASE) == pytest.approx(5e-4, rel=1e-15)


def test_far_field_enforced():
    with pytest.raises(DomainError):
        ds.interference_pattern(ds.SlitScenario(1e-1, 0.5, EV), np.linspace(-1, 1, 11))


def test_envelope_half_width():
    s = ds.SlitScenario(1e-3, 1.0, 1.0 * EV, 100.0, 1e-6)
    hw = abs(ds.delta_y(s)[0])
    y = np.array([-hw, 0.0, hw])
    ratio = ds.interference_pattern(s, y) / ds.interference_pattern(s, y, envelope=False)
    assert ratio[0] / ratio[1] == pytest.approx(0.5, rel=1e-12)


def test_mode_sum_n0_reduces_to_synthesis():
    p = wp.gaussian_packet(K, 3.0, 0.5, wp.linear_dispersion(1.0))
    amps = dict(zip(K.tolist(), p.amplitudes.tolist()))
    exp = ds.ModeExpansion([lambda k, D: np.array([amps[v] for v in k])], 1e-3)
    psi = wp.synthesize(p, X, 0.4)
    for j in (10, 64, 100):
        got = ds.evaluate_mode_sum(exp, p, X[j], theta=0.7, t=0.4)
        assert got == pytest.approx(psi.values[j], rel=1e-12, abs=1e-14)


@given(st.integers(1, 6), st.lists(st.floats(-5, 5), min_size=7, max_size=7), st.floats(-math.pi, math.pi))
def test_mode_sum_even_in_theta(n_max, weights, theta):
    p = wp.gaussian_packet(K, 3.0, 0.5, wp.linear_dispersion(1.0))
    coeffs = [(lambda k, D, w=w: w * np.exp(-((k - 3.0) ** 2))) for w in weights[: n_max + 1]]
    exp = ds.ModeExpansion(coeffs, 1e-3)
    a = ds.evaluate_mode_sum(exp, p, 0.3, theta, 0.2)
    b = ds.evaluate_mode_sum(exp, p, 0.3, -theta, 0.2)
    assert a == pytest.approx(b, rel=1e-12, abs=1e-300)


@pytest.mark.parametrize("theta", [0.0, math.pi])
def test_angular_sum_real_for_real_coefficients(theta):
    exp = ds.exponential_family(4, lambda k: np.cos(k), 1e-3)
    vals = ds.angular_sum(exp, K, theta)
    assert np.all(vals.imag == 0)


def test_angular_sum_matches_full_sum():
    exp = ds.exponential_family(3, lambda k: 1.0 + 0.0 * k, 1e-3, decay=0.5)
    theta = 0.9
    full = sum(math.exp(-0.5 * abs(n)) * np.exp(1j * n * theta) for n in range(-3, 4))
    assert ds.angular_sum(exp, np.array([0.0]), theta)[0] == pytest.approx(full, rel=1e-14)


def test_from_orders_checks_symmetry():
    good = {n: (lambda k, D, n=n: np.exp(-abs(n)) * np.ones_like(k)) for n in range(-2, 3)}
    exp = ds.ModeExpansion.from_orders(good, 1e-3)
    assert exp.n_max == 2 and exp.coefficient(-2) is exp.coefficient(2)
    bad = dict(good)
    bad[-1] = lambda k, D: 2.0 * np.ones_like(k)
    with pytest.raises(DomainError, match="A_"):
        ds.ModeExpansion.from_orders(bad, 1e-3)
    with pytest.raises(DomainError):
        ds.ModeExpansion.from_orders({0: good[0], 2: good[2], -2: good[-2]}, 1e-3)


def test_coefficient_range():
    exp = ds.exponential_family(2, np.cos, 1e-3)
    with pytest.raises(DomainError):
        exp.coefficient(3)


def test_metadata():
    meta = ds.pattern_metadata(BASE)
    assert meta["delta_y"][0] == -meta["delta_y"][1]
    assert meta["phi_max"] == ds.phi_max(BASE)
