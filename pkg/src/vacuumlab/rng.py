"""Seeded random streams for property sweeps.

All randomness goes through NumPy's PCG64 bit generator (PCG XSL-RR 128/64)
seeded with ``SeedSequence(seed)``. Only two derived draws are used, both
defined on top of raw 64-bit outputs so they are easy to reproduce elsewhere:

* uniform doubles: ``(next_uint64 >> 11) * 2**-53`` (``Generator.random``)
* standard normals: Box-Muller on pairs of those uniforms (cosine branch)

NumPy's ziggurat normal sampler is deliberately avoided.
"""

import numpy as np


def make_rng(seed: int = 0) -> np.random.Generator:
    if seed < 0:
        raise ValueError("seed must be a non-negative integer")
    return np.random.Generator(np.random.PCG64(seed))


def uniform(rng: np.random.Generator, low=0.0, high=1.0, size=None):
    u = rng.random(size)
    return low + (high - low) * u


def normal(rng: np.random.Generator, size=None):
    n = 1 if size is None else int(np.prod(size))
    u1 = rng.random(n)
    u2 = rng.random(n)
    # 1 - u1 lies in (0, 1], so the log is finite
    z = np.sqrt(-2.0 * np.log1p(-u1)) * np.cos(2.0 * np.pi * u2)
    if size is None:
        return float(z[0])
    return z.reshape(size)


def unit_vectors(rng: np.random.Generator, n: int, dim: int = 3) -> np.ndarray:
    v = normal(rng, (n, dim))
    return v / np.linalg.norm(v, axis=1, keepdims=True)
