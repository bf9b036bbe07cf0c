"""Internal complex space: points xi = r + i r_i, U(1) rotations, complex
potentials and finite-difference analyticity checks.

Analyticity validators work in one internal plane at a time (real coordinate
``a`` against imaginary coordinate ``a_i``). The electrostatic potentials use
cgs Gaussian units; everything else is SI.
"""

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, SingularityError


def _wrap_angle(theta: float) -> float:
    """Map an angle into [-pi, pi)."""
    w = math.fmod(theta + math.pi, 2.0 * math.pi)
    if w < 0:
        w += 2.0 * math.pi
    return w - math.pi


@dataclass(frozen=True)
class InternalComplexPoint:
    """Coordinate with real part (x, y, z) and imaginary part (x_i, y_i, z_i), metres."""

    real: np.ndarray
    imag: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "real", np.asarray(self.real, dtype=float).reshape(3))
        object.__setattr__(self, "imag", np.asarray(self.imag, dtype=float).reshape(3))

    @property
    def xi(self) -> np.ndarray:
        """Per-axis complex variables (xi_x, xi_y, xi_z)."""
        return self.real + 1j * self.imag

    @property
    def complex_length(self) -> complex:
        """l_c = r + i r_i."""
        return complex(np.linalg.norm(self.real), np.linalg.norm(self.imag))


@dataclass(frozen=True)
class RotationAngles:
    theta_x: float = 0.0
    theta_y: float = 0.0
    theta_z: float = 0.0

    def __post_init__(self):
        for name in ("theta_x", "theta_y", "theta_z"):
            object.__setattr__(self, name, _wrap_angle(float(getattr(self, name))))

    def as_array(self) -> np.ndarray:
        return np.array([self.theta_x, self.theta_y, self.theta_z])


def absolute_length(p: InternalComplexPoint) -> float:
    """l = sqrt(r^2 + r_i^2)."""
    return float(np.sqrt(np.sum(p.real**2) + np.sum(p.imag**2)))


def u1_rotate(p: InternalComplexPoint, angles: RotationAngles) -> InternalComplexPoint:
    """Rotate each internal plane (a, a_i) by its own angle."""
    th = angles.as_array()
    c, s = np.cos(th), np.sin(th)
    return InternalComplexPoint(p.real * c - p.imag * s, p.real * s + p.imag * c)


@dataclass(frozen=True)
class ComplexScalarField:
    """A complex function f(xi) = U + iV on one internal plane.

    ``func`` must accept complex ndarrays. ``singular_points`` lists the
    points where ``func`` is undefined.
    """

    func: Callable[[np.ndarray], np.ndarray]
    singular_points: Sequence[complex] = ()
    name: str = ""

    def __call__(self, xi):
        return self.func(xi)


@dataclass(frozen=True)
class Rectangle:
    """Region [x_min, x_max] x [xi_min, xi_max] of one internal plane."""

    x_min: float
    x_max: float
    xi_min: float
    xi_max: float

    def __post_init__(self):
        if not (self.x_max > self.x_min and self.xi_max > self.xi_min):
            raise DomainError("rectangle must have positive extent in both directions")

    def distance_to(self, z: complex) -> float:
        dx = max(self.x_min - z.real, 0.0, z.real - self.x_max)
        dy = max(self.xi_min - z.imag, 0.0, z.imag - self.xi_max)
        return math.hypot(dx, dy)


def sheet_potential(sigma: float, xi):
    """Complex potential -alpha xi of a charged sheet, alpha = 2 pi sigma (cgs).

    On the real axis this is -alpha x, i.e. the x > 0 branch of -alpha|x|;
    the x < 0 branch is +alpha xi. No single analytic function equals
    -alpha|x| on the whole axis.
    """
    alpha = 2.0 * math.pi * sigma
    return -alpha * xi


def point_charge_potential(charge: float, xi):
    """Q / xi (cgs); reduces to Q/r on the real axis."""
    xi_arr = np.asarray(xi)
    if np.any(xi_arr == 0):
        raise SingularityError("point-charge potential is singular at xi = 0")
    out = charge / xi_arr
    return complex(out) if out.ndim == 0 else out


def sheet_field(sigma: float) -> ComplexScalarField:
    return ComplexScalarField(lambda z: sheet_potential(sigma, z), (), "sheet")


def point_charge_field(charge: float) -> ComplexScalarField:
    return ComplexScalarField(lambda z: charge / z, (0j,), "point_charge")


def _grid(region: Rectangle, h: float, f: ComplexScalarField):
    if not h > 0:
        raise DomainError("grid spacing must be positive")
    for z in f.singular_points:
        if region.distance_to(complex(z)) < 2.0 * h:
            raise DomainError(f"region lies within 2h of singular point {z!r}")
    nx = int(round((region.x_max - region.x_min) / h)) + 1
    ny = int(round((region.xi_max - region.xi_min) / h)) + 1
    x = region.x_min + h * np.arange(nx)
    y = region.xi_min + h * np.arange(ny)
    X, Y = np.meshgrid(x, y, indexing="ij")
    return X + 1j * Y


def cauchy_riemann_residual(f: ComplexScalarField, region: Rectangle, h: float) -> float:
    """max |dU/dx - dV/dx_i| + |dU/dx_i + dV/dx| by central differences."""
    z = _grid(region, h, f)
    d_dx = (f(z + h) - f(z - h)) / (2.0 * h)
    d_dy = (f(z + 1j * h) - f(z - 1j * h)) / (2.0 * h)
    res = np.abs(d_dx.real - d_dy.imag) + np.abs(d_dy.real + d_dx.imag)
    return float(np.max(res))


def harmonicity_residual(f: ComplexScalarField, region: Rectangle, h: float) -> float:
    """max |lap U| + max |lap V| with the five-point stencil."""
    z = _grid(region, h, f)
    lap = (f(z + h) + f(z - h) + f(z + 1j * h) + f(z - 1j * h) - 4.0 * f(z)) / (h * h)
    return float(np.max(np.abs(lap.real)) + np.max(np.abs(lap.imag)))


def convergence_order(residual: Callable[[float], float], h: float) -> float:
    """Observed order log2(r(h) / r(h/2))."""
    return math.log2(residual(h) / residual(h / 2.0))


def grid_measure(h_real: float, h_imag: float = 0.0, dim: int = 1) -> float:
    """Line, surface or volume element built from dl = sqrt(dx^2 + dx_i^2).

    ``dim=2`` gives dS = dl_x dl_y and ``dim=3`` gives dV = dl_x dl_y dl_z,
    with the same spacing on every axis.
    """
    if not h_real > 0 or h_imag < 0:
        raise DomainError("spacings must satisfy h_real > 0 and h_imag >= 0")
    if dim not in (1, 2, 3):
        raise DomainError("dim must be 1, 2 or 3")
    return math.hypot(h_real, h_imag) ** dim


def scaled_vacuum_potential(gamma: float, phi0: float) -> float:
    """|Phi| = gamma |Phi_0|, the vacuum-interaction energy seen from a moving frame."""
    if gamma < 1.0:
        raise DomainError(f"gamma must be >= 1, got {gamma!r}")
    return gamma * abs(phi0)


def shell_potential_integral(gamma: float, density: float, r_inner: float, r_outer: float,
                             n_cells: int = 64, coupling: float = 1.0) -> float:
    """Midpoint quadrature of  coupling * gamma * rho / |xi|  over a spherical shell.

    The cube [-r_outer, r_outer]^3 is split into ``n_cells``^3 cells whose
    volume element comes from :func:`grid_measure`; cells with centre
    outside r_inner <= |xi| <= r_outer are dropped.
    """
    if gamma < 1.0:
        raise DomainError(f"gamma must be >= 1, got {gamma!r}")
    if not 0.0 < r_inner < r_outer:
        raise DomainError("need 0 < r_inner < r_outer")
    h = 2.0 * r_outer / n_cells
    c = -r_outer + h * (np.arange(n_cells) + 0.5)
    X, Y, Z = np.meshgrid(c, c, c, indexing="ij")
    r = np.sqrt(X * X + Y * Y + Z * Z)
    mask = (r >= r_inner) & (r <= r_outer)
    dv = grid_measure(h, 0.0, dim=3)
    return float(coupling * gamma * density * np.sum(1.0 / r[mask]) * dv)
