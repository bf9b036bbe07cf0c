"""Lorentz boosts of 4-vectors and the special-relativity formulas built on them.

Boosts are applied through the parallel/perpendicular decomposition along the
boost direction rather than a 4x4 matrix::

    t'     = gamma (t - beta . v_par)
    v_par' = gamma (v_par - beta t)
    v_perp' = v_perp
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import C
from .errors import DomainError
from .rng import uniform, unit_vectors

#: components with smaller magnitude are left out of ratio reports
RATIO_EPS = 1e-300


@dataclass(frozen=True)
class FourVector:
    t: float
    spatial: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.spatial, dtype=float).reshape(3)
        object.__setattr__(self, "spatial", s)
        object.__setattr__(self, "t", float(self.t))

    @classmethod
    def null(cls, spatial) -> "FourVector":
        """Null vector with the given spatial part and positive time component."""
        s = np.asarray(spatial, dtype=float)
        return cls(float(np.linalg.norm(s)), s)

    def components(self) -> np.ndarray:
        return np.concatenate(([self.t], self.spatial))

    def interval(self) -> float:
        """Minkowski square t^2 - |spatial|^2."""
        return self.t * self.t - float(self.spatial @ self.spatial)

    def is_null(self, rtol: float = 1e-12) -> bool:
        return abs(self.interval()) <= rtol * self.t * self.t

    def __mul__(self, f: float) -> "FourVector":
        return FourVector(self.t * f, self.spatial * f)

    __rmul__ = __mul__


@dataclass(frozen=True)
class Boost:
    """Pure boost with dimensionless velocity ``beta = v/c`` (``|beta| < 1``)."""

    beta: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        b = np.asarray(self.beta, dtype=float).reshape(3)
        if not np.all(np.isfinite(b)) or float(b @ b) >= 1.0:
            raise DomainError(f"boost speed |beta| must be < 1, got {np.linalg.norm(b)!r}")
        object.__setattr__(self, "beta", b)

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.beta))

    @property
    def gamma(self) -> float:
        return lorentz_factor(self.speed)

    def inverse(self) -> "Boost":
        return Boost(-self.beta)


def lorentz_factor(beta: float) -> float:
    """gamma = 1/sqrt(1 - beta^2)."""
    if not 0.0 <= abs(beta) < 1.0:
        raise DomainError(f"|beta| must be < 1, got {beta!r}")
    return 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))


def boost(v: FourVector, b: Boost) -> FourVector:
    beta = b.speed
    if beta == 0.0:
        return FourVector(v.t, v.spatial.copy())
    n = b.beta / beta
    gamma = b.gamma
    v_par = float(v.spatial @ n)
    v_perp = v.spatial - v_par * n
    t_new = gamma * (v.t - beta * v_par)
    par_new = gamma * (v_par - beta * v.t)
    return FourVector(t_new, v_perp + par_new * n)


@dataclass
class RatioReport:
    """Per-frame, per-component ratios p'_mu / k'_mu.

    ``ratios`` has shape ``(n_frames, 4)``; entries whose ``k'`` component is
    below :data:`RATIO_EPS` are NaN and listed in ``skipped`` as
    ``(frame, component)`` pairs.
    """

    ratios: np.ndarray
    skipped: list

    @property
    def finite(self) -> np.ndarray:
        return self.ratios[np.isfinite(self.ratios)]

    @property
    def mean(self) -> float:
        return float(np.mean(self.finite))

    @property
    def max_relative_spread(self) -> float:
        r = self.finite
        if r.size == 0:
            return 0.0
        return float((r.max() - r.min()) / abs(np.mean(r)))


def ratio_invariance_check(k: FourVector, p: FourVector, boosts, rtol: float = 1e-10) -> RatioReport:
    """Boost ``k`` and ``p`` into every frame and report the component ratios.

    Both vectors must be null and ``p`` must be a positive multiple of ``k``
    (parallel spatial parts); otherwise :class:`DomainError` is raised.
    """
    for name, vec in (("k", k), ("p", p)):
        if vec.t <= 0 or not vec.is_null(rtol):
            raise DomainError(f"{name} must be a future-pointing null vector")
    ks, ps = k.spatial, p.spatial
    cross = np.linalg.norm(np.cross(ks, ps))
    if cross > rtol * np.linalg.norm(ks) * np.linalg.norm(ps) or float(ks @ ps) <= 0:
        raise DomainError("p must be parallel to k")

    boosts = list(boosts)
    ratios = np.full((len(boosts), 4), np.nan)
    skipped = []
    for i, b in enumerate(boosts):
        kc = boost(k, b).components()
        pc = boost(p, b).components()
        for mu in range(4):
            if abs(kc[mu]) < RATIO_EPS:
                skipped.append((i, mu))
                continue
            ratios[i, mu] = pc[mu] / kc[mu]
    return RatioReport(ratios, skipped)


def random_boosts(rng, n: int, max_speed: float = 0.99) -> list:
    """``n`` boosts with isotropic directions and speeds uniform in [0, max_speed)."""
    dirs = unit_vectors(rng, n)
    speeds = uniform(rng, 0.0, max_speed, n)
    return [Boost(d * s) for d, s in zip(dirs, speeds)]


def generic_boosts(rng, n: int, k: FourVector, max_speed: float = 0.99,
                   min_fraction: float = 1e-3, max_tries: int = 100_000) -> list:
    """Random boosts in which no component of ``k`` nearly vanishes.

    A candidate is rejected when some boosted component satisfies
    ``|k'_mu| < min_fraction * k'_0``. Near-zero components amplify the
    rounding of the inputs in any component ratio.
    """
    out = []
    tries = 0
    while len(out) < n:
        tries += 1
        if tries > max_tries:
            raise DomainError("could not draw enough generic boosts")
        (b,) = random_boosts(rng, 1, max_speed)
        kc = boost(k, b).components()
        if np.min(np.abs(kc)) >= min_fraction * kc[0]:
            out.append(b)
    return out


def time_dilation(beta: float, t_proper: float) -> float:
    """Moving-clock reading ``t_proper * sqrt(1 - beta^2)`` seen by the rest observer."""
    if not 0.0 <= beta < 1.0:
        raise DomainError(f"beta must lie in [0, 1), got {beta!r}")
    return t_proper * math.sqrt((1.0 - beta) * (1.0 + beta))


def length_contraction(beta: float, length_proper: float) -> float:
    if not 0.0 <= beta < 1.0:
        raise DomainError(f"beta must lie in [0, 1), got {beta!r}")
    return length_proper * math.sqrt((1.0 - beta) * (1.0 + beta))


def relativistic_energy(mass: float, momentum: float) -> float:
    """E = sqrt(M^2 c^4 + p^2 c^2) in joules."""
    if mass < 0 or momentum < 0:
        raise DomainError("mass and momentum must be non-negative")
    return math.hypot(mass * C * C, momentum * C)


def momentum_from_beta(mass: float, beta: float) -> float:
    """p = M gamma beta c."""
    return mass * lorentz_factor(beta) * beta * C
