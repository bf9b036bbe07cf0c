import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from vacuumlab import lorentz as lz
from vacuumlab.constants import C, HBAR
from vacuumlab.errors import DomainError
from vacuumlab.rng import make_rng, normal

finite = st.floats(-1e3, 1e3, allow_nan=False)
vec3 = st.tuples(finite, finite, finite)


@st.composite
def betas(draw, max_speed=0.95):
    d = np.array(draw(st.tuples(finite, finite, finite)))
    n = np.linalg.norm(d)
    if n < 1e-6:
        d, n = np.array([1.0, 0.0, 0.0]), 1.0
    return d / n * draw(st.floats(0.0, max_speed))


def test_identity_boost_leaves_vector_unchanged():
    v = lz.FourVector(3.0, [1.0, -2.0, 0.5])
    w = lz.boost(v, lz.Boost([0.0, 0.0, 0.0]))
    assert w.t == v.t and np.array_equal(w.spatial, v.spatial)


def test_null_vector_along_boost():
    w = lz.boost(lz.FourVector(1.0, [1.0, 0.0, 0.0]), lz.Boost([0.6, 0.0, 0.0]))
    assert w.t == pytest.approx(0.5, rel=1e-15)
    assert w.spatial[0] == pytest.approx(0.5, rel=1e-15)
    assert w.is_null()


@pytest.mark.parametrize("beta", [[1.0, 0.0, 0.0], [0.8, 0.7, 0.0], [np.nan, 0, 0]])
def test_superluminal_boost_rejected(beta):
    with pytest.raises(DomainError):
        lz.Boost(beta)


@given(vec3, betas())
def test_boost_matches_matrix_oracle(spatial, beta):
    v = lz.FourVector(float(np.linalg.norm(spatial)) + 1.0, spatial)
    got = lz.boost(v, lz.Boost(beta)).components()
    want = oracles.boost(v.components(), beta)
    scale = max(1.0, float(np.max(np.abs(v.components())))) * lz.lorentz_factor(float(np.linalg.norm(beta)))
    assert np.allclose(got, want, rtol=0, atol=1e-13 * scale)


@given(vec3, betas())
def test_interval_invariant(spatial, beta):
    v = lz.FourVector(2.0 * float(np.linalg.norm(spatial)) + 1.0, spatial)
    w = lz.boost(v, lz.Boost(beta))
    assert w.interval() == pytest.approx(v.interval(), rel=1e-9, abs=1e-9 * w.t**2)


@given(vec3, betas())
def test_inverse_boost_round_trip(spatial, beta):
    v = lz.FourVector(float(np.linalg.norm(spatial)) + 1.0, spatial)
    b = lz.Boost(beta)
    back = lz.boost(lz.boost(v, b), b.inverse())
    assert np.allclose(back.components(), v.components(), rtol=1e-10, atol=1e-10 * v.t)


def test_ratio_identity_boost_is_exactly_two():
    k = lz.FourVector.null([1.0, 2.0, 2.0])
    report = lz.ratio_invariance_check(k, 2.0 * k, [lz.Boost()])
    assert np.all(report.ratios == 2.0)
    assert report.skipped == []


def test_ratio_hbar_over_random_boosts():
    rng = make_rng(7)
    k = lz.FourVector.null(normal(rng, 3) * 1e7)
    report = lz.ratio_invariance_check(k, HBAR * k, lz.generic_boosts(rng, 100, k))
    assert report.max_relative_spread < 1e-12
    assert report.mean == pytest.approx(HBAR, rel=1e-12)


def test_ratio_skips_vanishing_components():
    k = lz.FourVector.null([1.0, 0.0, 0.0])
    report = lz.ratio_invariance_check(k, 3.0 * k, [lz.Boost([0.5, 0.0, 0.0])])
    assert set(report.skipped) == {(0, 2), (0, 3)}
    assert np.allclose(report.finite, 3.0, rtol=1e-15)


def test_ratio_rejects_non_parallel_momentum():
    k = lz.FourVector.null([1.0, 0.0, 0.0])
    p = lz.FourVector.null([0.0, 1.0, 0.0])
    with pytest.raises(DomainError, match="parallel"):
        lz.ratio_invariance_check(k, p, [lz.Boost()])


def test_ratio_rejects_non_null_input():
    k = lz.FourVector(2.0, [1.0, 0.0, 0.0])
    with pytest.raises(DomainError, match="null"):
        lz.ratio_invariance_check(k, k, [lz.Boost()])


def test_generic_boosts_keep_components_away_from_zero():
    rng = make_rng(3)
    k = lz.FourVector.null([1.0, 0.0, 0.0])
    for b in lz.generic_boosts(rng, 20, k):
        kc = lz.boost(k, b).components()
        assert np.min(np.abs(kc)) >= 1e-3 * kc[0]


@pytest.mark.parametrize(
    "fn,beta,x,expected",
    [
        (lz.time_dilation, 0.6, 1.0, 0.8),
        (lz.time_dilation, 0.0, 5.0, 5.0),
        (lz.time_dilation, 0.8, 2.0, 1.2),
        (lz.length_contraction, 0.8, 1.0, 0.6),
        (lz.length_contraction, 0.0, 7.5, 7.5),
        (lz.length_contraction, 0.6, 10.0, 8.0),
    ],
)
def test_dilation_and_contraction_values(fn, beta, x, expected):
    assert fn(beta, x) == pytest.approx(expected, rel=1e-15, abs=1e-15)


@pytest.mark.parametrize("fn", [lz.time_dilation, lz.length_contraction])
@pytest.mark.parametrize("beta", [1.0, 1.5, -0.1])
def test_dilation_domain(fn, beta):
    with pytest.raises(DomainError):
        fn(beta, 1.0)


def test_energy_limits():
    assert lz.relativistic_energy(2.0, 0.0) == 2.0 * C * C
    assert lz.relativistic_energy(0.0, 3.0) == 3.0 * C


def test_energy_at_six_tenths():
    p = lz.momentum_from_beta(1.0, 0.6)
    assert p == pytest.approx(0.75 * C, rel=1e-15)
    assert lz.relativistic_energy(1.0, p) == pytest.approx(1.25 * C * C, rel=1e-15)


def test_energy_rejects_negative():
    with pytest.raises(DomainError):
        lz.relativistic_energy(-1.0, 0.0)
    with pytest.raises(DomainError):
        lz.relativistic_energy(1.0, -1.0)


@given(st.floats(1e-35, 1e3), st.floats(0.0, 0.999))
def test_mass_shell(mass, beta):
    p = lz.momentum_from_beta(mass, beta)
    e = lz.relativistic_energy(mass, p)
    rest = mass * C * C
    assert (e * e - (p * C) ** 2) / rest**2 == pytest.approx(1.0, rel=1e-12)


@given(st.floats(0.0, 0.999999))
def test_gamma_matches_definition(beta):
    assert lz.lorentz_factor(beta) == pytest.approx(1.0 / math.sqrt(1.0 - beta * beta), rel=1e-9)
