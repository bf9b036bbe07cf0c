"""Fourier wave packets F(x, t) built from spectral amplitudes A(k).

Conventions: symmetric 1/sqrt(2 pi) normalisation,

    F(x, t) = 1/sqrt(2 pi) sum_k A(k) exp(i [k x - omega(k) t]) dk
    G(k, t) = 1/sqrt(2 pi) sum_x F(x, t) exp(-i [k x - omega(k) t]) dx

on uniform grids. When the x and k grids have the same length N and
``dx * dk * N = 2 pi`` the pair is an exact discrete transform and the FFT
is used; otherwise synthesis falls back to the explicit sum, which is also
kept as the reference implementation (``method="direct"``).
"""

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .constants import HBAR
from .errors import DomainError

_GRID_RTOL = 1e-9
_DIRECT_CHUNK = 1 << 20


def uniform_spacing(grid: np.ndarray, name: str = "grid") -> float:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2:
        raise DomainError(f"{name} must be a 1-D array with at least two points")
    steps = np.diff(grid)
    h = (grid[-1] - grid[0]) / (grid.size - 1)
    if h <= 0 or np.max(np.abs(steps - h)) > _GRID_RTOL * abs(h) * grid.size:
        raise DomainError(f"{name} must be uniformly spaced and increasing")
    return float(h)


def centered_grid(n: int, spacing: float) -> np.ndarray:
    """``n`` points spaced ``spacing`` apart, index ``n // 2`` at exactly 0."""
    return spacing * (np.arange(n) - n // 2)


def conjugate_grid(grid: np.ndarray) -> np.ndarray:
    """Centered grid of the same length with spacing 2 pi / (N * spacing)."""
    n = len(grid)
    return centered_grid(n, 2.0 * math.pi / (n * uniform_spacing(grid)))


@dataclass(frozen=True)
class DispersionRelation:
    """omega(k) for propagation in the +x direction.

    Admissible relations satisfy omega >= 0 for k >= 0, omega <= 0 for
    k <= 0, omega(0) = 0, and are continuous.
    """

    omega: Callable[[np.ndarray], np.ndarray]
    tag: str = ""

    def __call__(self, k):
        return self.omega(k)

    def violations(self, k_samples, jump_factor: float = 20.0) -> list:
        """Describe every admissibility condition broken on ``k_samples``."""
        k = np.sort(np.asarray(k_samples, dtype=float))
        w = np.asarray(self.omega(k), dtype=float)
        scale = max(float(np.max(np.abs(w))), np.finfo(float).tiny)
        tol = 1e-12 * scale
        problems = []
        if np.any(w[k > 0] < -tol) or np.any(w[k < 0] > tol):
            problems.append("sign condition (omega >= 0 for k >= 0, <= 0 for k <= 0)")
        w0 = float(np.asarray(self.omega(np.array([0.0])))[0])
        if abs(w0) > tol:
            problems.append(f"omega(0) = {w0!r} != 0")
        jumps = np.abs(np.diff(w))
        if jumps.size >= 3:
            typical = float(np.median(jumps))
            if float(np.max(jumps)) > jump_factor * typical + tol:
                problems.append("discontinuity between adjacent samples")
        return problems

    def validate(self, k_samples):
        problems = self.violations(k_samples)
        if problems:
            raise DomainError(f"inadmissible dispersion {self.tag!r}: " + "; ".join(problems))


def linear_dispersion(c: float) -> DispersionRelation:
    return DispersionRelation(lambda k: c * np.asarray(k, dtype=float), f"linear(c={c!r})")


def free_particle_dispersion(mass: float, hbar: float = HBAR) -> DispersionRelation:
    """omega = hbar k |k| / (2 m): hbar k^2 / 2m for k >= 0, extended oddly to k < 0."""
    return DispersionRelation(
        lambda k: hbar * np.asarray(k, dtype=float) * np.abs(k) / (2.0 * mass),
        f"free_particle(m={mass!r})",
    )


def cubic_dispersion(c: float, beta: float) -> DispersionRelation:
    """omega = c k + beta k^3 (admissible for c, beta >= 0)."""
    return DispersionRelation(
        lambda k: c * np.asarray(k, dtype=float) + beta * np.asarray(k, dtype=float) ** 3,
        f"cubic(c={c!r}, beta={beta!r})",
    )


@dataclass
class SpectralWavePacket:
    """Sampled amplitudes A(k) on a uniform k grid, with a dispersion relation.

    The sample at k = 0, if the grid has one, is set to zero on
    construction (A(0) = 0 costs no generality).
    """

    k_grid: np.ndarray
    amplitudes: np.ndarray
    dispersion: DispersionRelation

    def __post_init__(self):
        self.k_grid = np.asarray(self.k_grid, dtype=float)
        self.amplitudes = np.array(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != self.k_grid.shape:
            raise DomainError("amplitudes and k_grid must have the same shape")
        uniform_spacing(self.k_grid, "k_grid")
        if not np.all(np.isfinite(self.amplitudes)):
            raise DomainError("amplitudes must be finite")
        zero = np.nonzero(self.k_grid == 0.0)[0]
        self.amplitudes[zero] = 0.0
        self.dispersion.validate(self.k_grid)

    @property
    def dk(self) -> float:
        return uniform_spacing(self.k_grid)

    def omega(self) -> np.ndarray:
        return np.asarray(self.dispersion(self.k_grid), dtype=float)

    def norm(self) -> float:
        """sum |A|^2 dk."""
        return float(np.sum(np.abs(self.amplitudes) ** 2) * self.dk)

    def centroid(self) -> float:
        w = np.abs(self.amplitudes) ** 2
        total = float(np.sum(w))
        if total == 0:
            raise DomainError("zero-norm packet has no spectral centroid")
        return float(np.sum(self.k_grid * w) / total)

    def scaled(self, factor: complex) -> "SpectralWavePacket":
        return SpectralWavePacket(self.k_grid, self.amplitudes * factor, self.dispersion)


@dataclass
class PositionWaveFunction:
    x_grid: np.ndarray
    values: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        self.x_grid = np.asarray(self.x_grid, dtype=float)
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != self.x_grid.shape:
            raise DomainError("values and x_grid must have the same shape")

    @property
    def dx(self) -> float:
        return uniform_spacing(self.x_grid, "x_grid")

    def norm(self) -> float:
        """sum |F|^2 dx."""
        return float(np.sum(np.abs(self.values) ** 2) * self.dx)

    def centroid(self) -> float:
        w = np.abs(self.values) ** 2
        total = float(np.sum(w))
        if total == 0:
            raise DomainError("zero wave function has no centroid")
        return float(np.sum(self.x_grid * w) / total)


@dataclass
class MomentumWaveFunction:
    """psi~(P) on the momentum grid P = hbar k."""

    p_grid: np.ndarray
    values: np.ndarray
    hbar: float = field(default=HBAR)

    def norm(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2) * uniform_spacing(self.p_grid, "p_grid"))


def grids_compatible(x_grid, k_grid) -> bool:
    """True when the grids form an exact discrete Fourier pair."""
    if len(x_grid) != len(k_grid):
        return False
    n = len(x_grid)
    prod = uniform_spacing(x_grid, "x_grid") * uniform_spacing(k_grid, "k_grid") * n
    return abs(prod - 2.0 * math.pi) <= 1e-9 * 2.0 * math.pi


def _check_nyquist(x_grid, k_grid):
    dx = uniform_spacing(x_grid, "x_grid")
    kmax = float(np.max(np.abs(k_grid)))
    if kmax * dx > math.pi * (1.0 + 1e-9):
        raise DomainError(f"x spacing {dx!r} does not resolve |k| up to {kmax!r} (need |k| dx <= pi)")


def _direct_sum(src_grid, src_vals, dst_grid, sign: float) -> np.ndarray:
    """sum_j src_vals[j] exp(sign * i * src_grid[j] * dst_grid[m]), chunked over dst."""
    out = np.empty(len(dst_grid), dtype=complex)
    rows = max(1, _DIRECT_CHUNK // max(1, len(src_grid)))
    for start in range(0, len(dst_grid), rows):
        block = dst_grid[start:start + rows]
        phase = np.exp(sign * 1j * np.outer(block, src_grid))
        out[start:start + rows] = phase @ src_vals
    return out


def synthesize(packet: SpectralWavePacket, x_grid, t: float = 0.0, method: str = "auto") -> PositionWaveFunction:
    """F(x, t) by discrete quadrature of the Fourier superposition."""
    x_grid = np.asarray(x_grid, dtype=float)
    _check_nyquist(x_grid, packet.k_grid)
    k = packet.k_grid
    dk = packet.dk
    weighted = packet.amplitudes * np.exp(-1j * packet.omega() * t)
    if method == "auto":
        method = "fft" if grids_compatible(x_grid, k) else "direct"
    if method == "direct":
        vals = _direct_sum(k, weighted, x_grid, +1.0)
    elif method == "fft":
        if not grids_compatible(x_grid, k):
            raise DomainError("FFT synthesis needs conjugate x and k grids")
        n = len(k)
        # k_m x_j = k_0 x_j + m dk x_0 + 2 pi m j / N
        pre = weighted * np.exp(1j * np.arange(n) * dk * x_grid[0])
        vals = n * np.fft.ifft(pre) * np.exp(1j * k[0] * x_grid)
    else:
        raise ValueError(f"unknown method {method!r}")
    return PositionWaveFunction(x_grid, vals * dk / math.sqrt(2.0 * math.pi), t)


def analyze(wavefn: PositionWaveFunction, k_grid, dispersion: DispersionRelation,
            method: str = "fft") -> SpectralWavePacket:
    """Recover G(k) = G(k, t) exp(i omega t) from F(x, t)."""
    k_grid = np.asarray(k_grid, dtype=float)
    if not grids_compatible(wavefn.x_grid, k_grid):
        raise DomainError("x and k grids are not a discrete Fourier pair (need equal length and dx dk N = 2 pi)")
    x = wavefn.x_grid
    dx = wavefn.dx
    if method == "direct":
        g = _direct_sum(x, wavefn.values, k_grid, -1.0)
    elif method == "fft":
        n = len(x)
        pre = wavefn.values * np.exp(-1j * k_grid[0] * x)
        g = np.fft.fft(pre) * np.exp(-1j * np.arange(n) * uniform_spacing(k_grid) * x[0])
    else:
        raise ValueError(f"unknown method {method!r}")
    omega = np.asarray(dispersion(k_grid), dtype=float)
    g = g * dx / math.sqrt(2.0 * math.pi) * np.exp(1j * omega * wavefn.time)
    return SpectralWavePacket(k_grid, g, dispersion)


def relative_l2_error(a: SpectralWavePacket, b: SpectralWavePacket) -> float:
    ref = np.linalg.norm(a.amplitudes)
    diff = np.linalg.norm(a.amplitudes - b.amplitudes)
    return float(diff / ref) if ref > 0 else float(diff)


def parseval_check(packet: SpectralWavePacket, wavefn: PositionWaveFunction):
    """Return ``(norm_k, norm_x, relative_gap)``; the gap is 0 when both norms are 0."""
    nk = packet.norm()
    nx = wavefn.norm()
    scale = max(nk, nx)
    gap = abs(nk - nx) / scale if scale > 0 else 0.0
    return nk, nx, gap


def group_velocity(packet: SpectralWavePacket, rel_step: float = 1e-5) -> float:
    """d omega / dk at the spectral centroid, by central difference."""
    if packet.norm() == 0:
        raise DomainError("zero-norm packet has no group velocity")
    kbar = packet.centroid()
    h = rel_step * max(abs(kbar), packet.dk)
    w = np.asarray(packet.dispersion(np.array([kbar - h, kbar + h])), dtype=float)
    return float((w[1] - w[0]) / (2.0 * h))


def total_energy(packet: SpectralWavePacket, tension: float, v_g: float) -> float:
    """(1/v_g) (S/2) sum |A(k)|^2 k omega(k) dk."""
    if not v_g > 0:
        raise DomainError("group velocity must be positive")
    integrand = np.abs(packet.amplitudes) ** 2 * packet.k_grid * packet.omega()
    return float(np.sum(integrand) * packet.dk * 0.5 * tension / v_g)


def implied_momentum(packet: SpectralWavePacket, tension: float, v_g: float, c: float) -> float:
    """Particle momentum P implied by total energy = P c."""
    return total_energy(packet, tension, v_g) / c


def to_momentum_representation(packet: SpectralWavePacket, hbar: float = HBAR) -> MomentumWaveFunction:
    """P = hbar k and psi~(P) = A(P / hbar) / sqrt(hbar), preserving the norm."""
    return MomentumWaveFunction(hbar * packet.k_grid, packet.amplitudes / math.sqrt(hbar), hbar)


def _weighted_std(grid: np.ndarray, weights: np.ndarray) -> float:
    total = float(np.sum(weights))
    if total == 0:
        raise DomainError("zero-norm distribution")
    p = weights / total
    mean = float(np.sum(grid * p))
    return math.sqrt(float(np.sum((grid - mean) ** 2 * p)))


def uncertainty_product(wavefn: PositionWaveFunction, packet: SpectralWavePacket, hbar: float = HBAR):
    """Return ``(delta_x, delta_p, delta_x * delta_p)`` from |F|^2 and |A|^2.

    Both distributions are normalised before the moments are taken.
    """
    dx_ = _weighted_std(wavefn.x_grid, np.abs(wavefn.values) ** 2)
    dk_ = _weighted_std(packet.k_grid, np.abs(packet.amplitudes) ** 2)
    dp = hbar * dk_
    return dx_, dp, dx_ * dp


def gaussian_packet(k_grid, k0: float, sigma_k: float, dispersion: DispersionRelation,
                    amplitude: float = 1.0) -> SpectralWavePacket:
    """A(k) = a exp(-(k - k0)^2 / (4 sigma_k^2)); |A|^2 has standard deviation sigma_k.

    At t = 0 the packet synthesises to
    F(x) = a sqrt(2) sigma_k exp(-sigma_k^2 x^2) exp(i k0 x).
    """
    k_grid = np.asarray(k_grid, dtype=float)
    amps = amplitude * np.exp(-((k_grid - k0) ** 2) / (4.0 * sigma_k**2))
    return SpectralWavePacket(k_grid, amps, dispersion)


def packet_columns(packet: SpectralWavePacket) -> dict:
    a = packet.amplitudes
    return {"k": packet.k_grid, "re": a.real, "im": a.imag, "abs2": np.abs(a) ** 2}


def wavefunction_columns(wavefn: PositionWaveFunction) -> dict:
    f = wavefn.values
    return {"x": wavefn.x_grid, "re": f.real, "im": f.imag, "abs2": np.abs(f) ** 2}
