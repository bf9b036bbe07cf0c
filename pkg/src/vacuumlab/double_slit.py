"""One-particle double-slit estimates.

Slits sit at y = +D and y = -D, the screen at x = L, so the slit separation
is 2D and the small-angle fringe spacing is lambda L / (2 D).
"""

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .constants import C, HBAR
from .errors import DomainError
from .wavepacket import SpectralWavePacket

FAR_FIELD_RATIO = 10.0
RELATIVISTIC_GAMMA = 10.0


@dataclass(frozen=True)
class SlitScenario:
    D: float
    L: float
    delta_E: float
    gamma: float = 100.0
    wavelength: float = 1e-6

    def __post_init__(self):
        for name in ("D", "L", "delta_E", "wavelength"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")
        if self.gamma < 1.0:
            raise DomainError("gamma must be >= 1")


Coefficient = Callable[[np.ndarray, float], np.ndarray]


@dataclass(frozen=True)
class ModeExpansion:
    """Coefficients A_n(k, D) for n = -n_max..n_max with A_{-n} = A_{+n}.

    Only the non-negative orders are stored (``coefficients[n]`` for
    n = 0..n_max), so the symmetry holds by construction. Use
    :meth:`from_orders` to build one from a full map, which is checked.
    """

    coefficients: Sequence[Coefficient]
    D: float

    def __post_init__(self):
        if len(self.coefficients) < 1:
            raise DomainError("need at least the n = 0 coefficient")
        if not self.D > 0:
            raise DomainError("D must be positive")

    @property
    def n_max(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, n: int) -> Coefficient:
        if abs(n) > self.n_max:
            raise DomainError(f"|n| = {abs(n)} exceeds n_max = {self.n_max}")
        return self.coefficients[abs(n)]

    @classmethod
    def from_orders(cls, orders: dict, D: float, probe_k=None, rtol: float = 1e-12) -> "ModeExpansion":
        """Build from ``{n: A_n}`` covering -n_max..n_max, verifying A_{-n} = A_{+n} on ``probe_k``."""
        n_max = max(abs(n) for n in orders)
        if set(orders) != set(range(-n_max, n_max + 1)):
            raise DomainError("orders must cover every n in [-n_max, n_max]")
        probe = np.linspace(-10.0, 10.0, 41) if probe_k is None else np.asarray(probe_k, dtype=float)
        for n in range(1, n_max + 1):
            a, b = np.asarray(orders[n](probe, D)), np.asarray(orders[-n](probe, D))
            if not np.allclose(a, b, rtol=rtol, atol=0.0):
                raise DomainError(f"A_{{+{n}}} != A_{{-{n}}}: interference would leave the real y axis")
        return cls([orders[n] for n in range(n_max + 1)], D)


def exponential_family(n_max: int, base: Callable[[np.ndarray], np.ndarray], D: float,
                       decay: float = 1.0) -> ModeExpansion:
    """Default family A_n(k, D) = exp(-decay |n|) base(k)."""
    coeffs = [
        (lambda k, D_, w=math.exp(-decay * n): w * np.asarray(base(k), dtype=complex))
        for n in range(n_max + 1)
    ]
    return ModeExpansion(coeffs, D)


def angular_sum(expansion: ModeExpansion, k: np.ndarray, theta: float) -> np.ndarray:
    """sum_n A_n(k, D) e^{i n theta}, paired as A_0 + 2 sum_{n>0} A_n cos(n theta)."""
    k = np.asarray(k, dtype=float)
    total = np.asarray(expansion.coefficients[0](k, expansion.D), dtype=complex).copy()
    for n in range(1, expansion.n_max + 1):
        total += 2.0 * math.cos(n * theta) * np.asarray(expansion.coefficients[n](k, expansion.D))
    return total


def evaluate_mode_sum(expansion: ModeExpansion, packet: SpectralWavePacket, x: float,
                      theta: float, t: float = 0.0) -> complex:
    """phi(x, D, theta, t) = 1/sqrt(2 pi) sum_k [sum_n A_n e^{i n theta}] e^{i(k x - omega t)} dk.

    The packet supplies the k grid and the dispersion relation; the
    1/sqrt(2 pi) factor matches :func:`vacuumlab.wavepacket.synthesize`.
    """
    k = packet.k_grid
    bracket = angular_sum(expansion, k, theta)
    phase = np.exp(1j * (k * x - packet.omega() * t))
    return complex(np.sum(bracket * phase) * packet.dk / math.sqrt(2.0 * math.pi))


def _warn_regime(s: SlitScenario):
    if s.gamma < RELATIVISTIC_GAMMA:
        warnings.warn(
            f"gamma = {s.gamma!r} < {RELATIVISTIC_GAMMA}: small-angle estimate assumes gamma >> 1",
            RuntimeWarning,
            stacklevel=3,
        )


def phi_max(s: SlitScenario) -> float:
    """Maximum angle hbar c / (2 D delta_E) from 2 D sin(phi) ~ v_g dt ~ hbar c / delta_E."""
    _warn_regime(s)
    return HBAR * C / (2.0 * s.D * s.delta_E)


def delta_y(s: SlitScenario) -> tuple:
    """Symmetric pair (+L phi_max, -L phi_max)."""
    _warn_regime(s)
    dy = s.L * HBAR * C / (2.0 * s.D * s.delta_E)
    return dy, -dy


def interference_pattern(s: SlitScenario, y_grid, envelope: bool = True) -> np.ndarray:
    """Normalised two-path intensity |e^{ik r+}/sqrt(r+) + e^{ik r-}/sqrt(r-)|^2 on the screen.

    When ``envelope`` is set, the pattern is multiplied by a Gaussian window
    whose half width at half maximum is |delta_y|.
    """
    if not s.L > FAR_FIELD_RATIO * s.D:
        raise DomainError(f"far field needs L > {FAR_FIELD_RATIO} D")
    y = np.asarray(y_grid, dtype=float)
    k = 2.0 * math.pi / s.wavelength
    r_plus = np.sqrt(s.L**2 + (y - s.D) ** 2)
    r_minus = np.sqrt(s.L**2 + (y + s.D) ** 2)
    amp = np.exp(1j * k * r_plus) / np.sqrt(r_plus) + np.exp(1j * k * r_minus) / np.sqrt(r_minus)
    intensity = np.abs(amp) ** 2
    if envelope:
        half_width = abs(delta_y(s)[0])
        intensity = intensity * np.exp(-math.log(2.0) * (y / half_width) ** 2)
    peak = float(np.max(intensity))
    return intensity / peak if peak > 0 else intensity


def fringe_spacing_estimate(s: SlitScenario) -> float:
    return s.wavelength * s.L / (2.0 * s.D)


def measure_fringe_spacing(y: np.ndarray, intensity: np.ndarray, n_fringes: int = 5) -> float:
    """Mean spacing of the ``n_fringes`` maxima nearest y = 0, refined by parabolic fits."""
    y = np.asarray(y, dtype=float)
    I = np.asarray(intensity, dtype=float)
    inner = np.nonzero((I[1:-1] >= I[:-2]) & (I[1:-1] > I[2:]))[0] + 1
    if inner.size < 2:
        raise DomainError("fewer than two maxima on the grid")
    h = y[1] - y[0]
    peaks = []
    for i in inner:
        a, b, c = I[i - 1], I[i], I[i + 1]
        denom = a - 2.0 * b + c
        peaks.append(y[i] + (0.5 * (a - c) / denom * h if denom != 0 else 0.0))
    peaks = np.array(sorted(peaks, key=abs)[: max(2, n_fringes)])
    peaks.sort()
    return float(np.mean(np.diff(peaks)))


def pattern_metadata(s: SlitScenario) -> dict:
    dy = delta_y(s)
    return {
        "scenario": {"D": s.D, "L": s.L, "delta_E": s.delta_E, "gamma": s.gamma, "wavelength": s.wavelength},
        "phi_max": phi_max(s),
        "delta_y": list(dy),
    }
