import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from vacuumlab import complex_space as cs
from vacuumlab.errors import DomainError, SingularityError

coord = st.floats(-1e3, 1e3, allow_nan=False)
point = st.builds(cs.InternalComplexPoint, st.tuples(coord, coord, coord), st.tuples(coord, coord, coord))
angle = st.floats(-100.0, 100.0, allow_nan=False)
UNIT = cs.Rectangle(1.0, 2.0, 1.0, 2.0)


@pytest.mark.parametrize(
    "real,imag,expected",
    [((3, 0, 0), (4, 0, 0), 5.0), ((0, 0, 0), (0, 0, 0), 0.0), ((1, 2, 2), (0, 0, 0), 3.0)],
)
def test_absolute_length_values(real, imag, expected):
    assert cs.absolute_length(cs.InternalComplexPoint(real, imag)) == expected


def test_complex_length_components():
    p = cs.InternalComplexPoint((3, 4, 0), (0, 0, 2))
    assert p.complex_length == complex(5.0, 2.0)
    assert np.array_equal(p.xi, np.array([3, 4, 2j]))


def test_zero_rotation_is_identity():
    p = cs.InternalComplexPoint((1.5, -2.0, 0.25), (0.1, 0.2, 0.3))
    q = cs.u1_rotate(p, cs.RotationAngles())
    assert np.array_equal(q.real, p.real) and np.array_equal(q.imag, p.imag)


def test_quarter_turn_moves_real_into_imag():
    q = cs.u1_rotate(cs.InternalComplexPoint((1, 0, 0), (0, 0, 0)), cs.RotationAngles(math.pi / 2))
    assert np.allclose(q.real, 0.0, atol=1e-16)
    assert np.allclose(q.imag, [1.0, 0.0, 0.0], atol=1e-16)


@given(point, angle, angle, angle)
def test_rotation_preserves_absolute_length(p, a, b, c):
    l0 = cs.absolute_length(p)
    l1 = cs.absolute_length(cs.u1_rotate(p, cs.RotationAngles(a, b, c)))
    assert l1 == pytest.approx(l0, rel=1e-12, abs=1e-300)


@given(point, angle)
def test_rotation_is_multiplication_by_phase(p, a):
    q = cs.u1_rotate(p, cs.RotationAngles(a, a, a))
    assert np.allclose(q.xi, p.xi * np.exp(1j * a), rtol=1e-12, atol=1e-9)


@given(angle)
def test_angles_wrapped(a):
    w = cs.RotationAngles(a).theta_x
    assert -math.pi <= w < math.pi
    assert math.cos(w) == pytest.approx(math.cos(a), abs=1e-12)


def test_sheet_potential_values():
    s = 1.0 / (2.0 * math.pi)
    assert cs.sheet_potential(s, 2 + 0j) == pytest.approx(-2 + 0j, rel=1e-15)
    assert cs.sheet_potential(s, 0j) == 0
    assert cs.sheet_potential(s, 1 + 1j) == pytest.approx(-1 - 1j, rel=1e-15)


def test_point_charge_values():
    assert cs.point_charge_potential(1.0, 1 + 1j) == pytest.approx(0.5 - 0.5j, rel=1e-15)
    assert cs.point_charge_potential(1.0, 2.0) == 0.5
    assert cs.point_charge_potential(0.0, 3 - 4j) == 0


def test_point_charge_singular_at_origin():
    with pytest.raises(SingularityError):
        cs.point_charge_potential(1.0, 0j)
    with pytest.raises(SingularityError):
        cs.point_charge_potential(1.0, np.array([1.0, 0.0]))


@pytest.mark.parametrize("h", [0.1, 0.05, 0.01])
def test_sheet_is_analytic_at_any_h(h):
    f = cs.sheet_field(1.0)
    assert cs.cauchy_riemann_residual(f, UNIT, h) < 1e-12
    assert cs.harmonicity_residual(f, UNIT, h) < 1e-9


def test_point_charge_residual_ratio_near_four():
    f = cs.point_charge_field(1.0)
    r1 = cs.cauchy_riemann_residual(f, UNIT, 0.05)
    r2 = cs.cauchy_riemann_residual(f, UNIT, 0.025)
    assert r1 / r2 == pytest.approx(4.0, rel=0.05)


def test_conjugate_control_gives_two():
    f = cs.ComplexScalarField(np.conj)
    assert cs.cauchy_riemann_residual(f, UNIT, 0.05) == pytest.approx(2.0, rel=1e-12)


def test_square_is_harmonic_and_abs2_is_not():
    sq = cs.ComplexScalarField(lambda z: z * z)
    ab = cs.ComplexScalarField(lambda z: (np.abs(z) ** 2).astype(complex))
    assert cs.harmonicity_residual(sq, UNIT, 0.05) < 1e-10
    assert cs.harmonicity_residual(ab, UNIT, 0.05) == pytest.approx(4.0, rel=1e-9)


def test_region_near_singularity_rejected():
    f = cs.point_charge_field(1.0)
    with pytest.raises(DomainError):
        cs.cauchy_riemann_residual(f, cs.Rectangle(-1.0, 1.0, -1.0, 1.0), 0.1)
    with pytest.raises(DomainError):
        cs.harmonicity_residual(f, cs.Rectangle(0.1, 1.0, 0.0, 1.0), 0.1)


@pytest.mark.parametrize("fn", [cs.cauchy_riemann_residual, cs.harmonicity_residual])
def test_measured_order_two(fn):
    f = cs.point_charge_field(2.5)
    order = cs.convergence_order(lambda h: fn(f, UNIT, h), 0.05)
    assert 1.8 <= order <= 2.2


def test_bad_rectangle():
    with pytest.raises(DomainError):
        cs.Rectangle(1.0, 1.0, 0.0, 1.0)


def test_scaled_vacuum_potential():
    assert cs.scaled_vacuum_potential(1.0, 3.5) == 3.5
    assert cs.scaled_vacuum_potential(2.0, 5.0) == 10.0
    with pytest.raises(DomainError):
        cs.scaled_vacuum_potential(0.5, 1.0)


def test_grid_measure_values():
    assert cs.grid_measure(3e-3, 4e-3) == pytest.approx(5e-3, rel=1e-15)
    assert cs.grid_measure(2e-3) == 2e-3
    assert cs.grid_measure(1e-2, 0.0, dim=2) == pytest.approx(1e-4, rel=1e-15)
    assert cs.grid_measure(1e-1, 0.0, dim=3) == pytest.approx(1e-3, rel=1e-15)


@pytest.mark.parametrize("args", [(0.0, 0.0), (-1.0, 0.0), (1.0, -1.0)])
def test_grid_measure_rejects_bad_spacing(args):
    with pytest.raises(DomainError):
        cs.grid_measure(*args)


def test_shell_integral_close_to_analytic():
    # int 1/r dV over a <= r <= b is 2 pi (b^2 - a^2)
    got = cs.shell_potential_integral(1.0, 1.0, 0.5, 1.0, n_cells=96)
    assert got == pytest.approx(2.0 * math.pi * 0.75, rel=2e-2)


def test_shell_integral_linear_in_gamma():
    a = cs.shell_potential_integral(1.0, 2.0, 0.3, 1.0, n_cells=32)
    b = cs.shell_potential_integral(1.25, 2.0, 0.3, 1.0, n_cells=32)
    assert b / a == pytest.approx(1.25, rel=1e-14)


def test_shell_integral_domain():
    with pytest.raises(DomainError):
        cs.shell_potential_integral(1.0, 1.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        cs.shell_potential_integral(0.9, 1.0, 0.1, 1.0)
