"""One-dimensional vacuum-electron chain.

Sites of mass ``m_e`` at spacing ``d`` are joined by springs of constant ``K``.
The equation of motion

    m_e q''_k = K (q_{k+1} - 2 q_k + q_{k-1})

is the same whether the masses and the potential are both taken negative
(with a maximum-action principle) or both positive, so the positive form is
integrated. Velocity-Verlet is used throughout.

Derived continuum quantities: tension ``S = K d``, line density
``rho = m_e / d`` and wave speed ``c_model = sqrt(S / rho) = d sqrt(K / m_e)``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .constants import C, H, M_E
from .errors import ConfigurationError, DomainError, MeasurementError
from .io import write_csv

BOUNDARIES = ("periodic", "fixed")
DEFAULT_CFL = 0.5


@dataclass(frozen=True)
class LatticeConfig:
    n_sites: int
    d: float
    m_e: float
    K: float
    boundary: str = "periodic"

    def __post_init__(self):
        if int(self.n_sites) != self.n_sites or self.n_sites < 3:
            raise ConfigurationError("n_sites must be an integer >= 3")
        if not (self.d > 0 and self.m_e > 0 and self.K > 0):
            raise ConfigurationError("d, m_e and K must be positive")
        if self.boundary not in BOUNDARIES:
            raise ConfigurationError(f"boundary must be one of {BOUNDARIES}")
        object.__setattr__(self, "n_sites", int(self.n_sites))

    @property
    def tension(self) -> float:
        return self.K * self.d

    @property
    def density(self) -> float:
        return self.m_e / self.d

    @property
    def c_model(self) -> float:
        return propagation_speed(self)

    @property
    def omega0(self) -> float:
        """sqrt(K / m_e)."""
        return math.sqrt(self.K / self.m_e)

    @property
    def length(self) -> float:
        return self.n_sites * self.d

    def positions(self) -> np.ndarray:
        return self.d * np.arange(self.n_sites)

    def default_dt(self) -> float:
        return DEFAULT_CFL * self.d / self.c_model

    @classmethod
    def calibrated(cls, n_sites: int = 1024, d: float = 1e-15, boundary: str = "periodic"):
        """Electron-mass chain whose wave speed equals the vacuum speed of light."""
        K = M_E * C * C / (d * d)
        return cls(n_sites=n_sites, d=d, m_e=M_E, K=K, boundary=boundary)


@dataclass
class LatticeState:
    q: np.ndarray
    q_dot: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        self.q = np.array(self.q, dtype=float)
        self.q_dot = np.array(self.q_dot, dtype=float)
        if self.q.shape != self.q_dot.shape or self.q.ndim != 1:
            raise DomainError("q and q_dot must be 1-D arrays of equal length")

    @classmethod
    def zeros(cls, config: LatticeConfig) -> "LatticeState":
        return cls(np.zeros(config.n_sites), np.zeros(config.n_sites), 0.0)

    def copy(self) -> "LatticeState":
        return LatticeState(self.q.copy(), self.q_dot.copy(), self.time)


@dataclass(frozen=True)
class WaveTrainSpec:
    """Sinusoidal wave train of amplitude A and wavelength lambda."""

    amplitude: float
    wavelength: float

    def __post_init__(self):
        if not self.amplitude > 0:
            raise DomainError("amplitude must be positive")
        if not self.wavelength > 0:
            raise DomainError("wavelength must be positive")

    @property
    def k(self) -> float:
        return 2.0 * math.pi / self.wavelength

    def frequency(self, config: LatticeConfig) -> float:
        """nu = c_model / lambda."""
        return config.c_model / self.wavelength

    def omega(self, config: LatticeConfig) -> float:
        return config.c_model * self.k

    def check(self, config: LatticeConfig):
        if not self.wavelength > 2.0 * config.d:
            raise DomainError("wavelength must exceed 2d to be resolved on the lattice")


def _check(state: LatticeState, config: LatticeConfig):
    if state.q.shape[0] != config.n_sites:
        raise DomainError(f"state has {state.q.shape[0]} sites, config expects {config.n_sites}")


def _laplacian(q: np.ndarray, boundary: str, out: np.ndarray) -> np.ndarray:
    """q_{k+1} - 2 q_k + q_{k-1}; fixed ends are tied to zero-displacement walls."""
    np.multiply(q, -2.0, out=out)
    out[1:] += q[:-1]
    out[:-1] += q[1:]
    if boundary == "periodic":
        out[0] += q[-1]
        out[-1] += q[0]
    return out


def forces(q: np.ndarray, config: LatticeConfig) -> np.ndarray:
    return config.K * _laplacian(q, config.boundary, np.empty_like(q))


def check_dt(dt: float, config: LatticeConfig):
    limit = config.d / config.c_model
    if not 0 < dt < limit:
        raise ConfigurationError(f"dt={dt!r} violates the stability bound 0 < dt < d/c_model = {limit!r}")


def step(state: LatticeState, config: LatticeConfig, dt: float | None = None, n_steps: int = 1,
         sign: int = 1, observe=None) -> LatticeState:
    """Advance ``n_steps`` velocity-Verlet steps and return the new state.

    ``sign=-1`` integrates with negative mass and negative spring constant
    (the vacuum-electron convention); the acceleration coefficient
    ``(sign K) / (sign m_e)`` is then bitwise the same as for ``sign=+1``.

    ``observe(i, q, q_dot)`` is called after every step when given; the
    arrays are live buffers and must be copied if kept.
    """
    _check(state, config)
    if dt is None:
        dt = config.default_dt()
    check_dt(dt, config)
    if n_steps < 1:
        raise ConfigurationError("n_steps must be >= 1")
    if sign not in (1, -1):
        raise ConfigurationError("sign must be +1 or -1")

    coef = (sign * config.K) / (sign * config.m_e)
    half = 0.5 * dt
    q = state.q.copy()
    v = state.q_dot.copy()
    lap = np.empty_like(q)
    a = coef * _laplacian(q, config.boundary, lap)
    for i in range(n_steps):
        v += half * a
        q += dt * v
        np.multiply(_laplacian(q, config.boundary, lap), coef, out=a)
        v += half * a
        if observe is not None:
            observe(i, q, v)
    return LatticeState(q, v, state.time + n_steps * dt)


def lattice_energy(state: LatticeState, config: LatticeConfig) -> float:
    """E = 1/2 sum m_e q_dot^2 + 1/2 sum K (q_{k-1} - q_k)^2."""
    _check(state, config)
    q = state.q
    kinetic = 0.5 * config.m_e * float(np.dot(state.q_dot, state.q_dot))
    diffs = np.diff(q)
    pot = float(np.dot(diffs, diffs))
    if config.boundary == "periodic":
        pot += (q[0] - q[-1]) ** 2
    else:
        pot += q[0] ** 2 + q[-1] ** 2
    return kinetic + 0.5 * config.K * pot


def shadow_energy(state: LatticeState, config: LatticeConfig, dt: float) -> float:
    """Energy conserved exactly by velocity-Verlet on this linear chain.

    E_dt = E - dt^2 / (8 m_e) * sum F_k^2, which tends to ``lattice_energy``
    as dt -> 0. The plain energy oscillates by O((omega dt)^2) around it
    without drifting.
    """
    f = forces(state.q, config)
    return lattice_energy(state, config) - dt * dt / (8.0 * config.m_e) * float(np.dot(f, f))


def energy_drift(config: LatticeConfig, state: LatticeState, n_steps: int, dt: float | None = None):
    """Run ``n_steps`` and return ``(relative_shadow_drift, max_relative_energy_excursion)``."""
    if dt is None:
        dt = config.default_dt()
    e0 = lattice_energy(state, config)
    s0 = shadow_energy(state, config, dt)
    if e0 == 0:
        return 0.0, 0.0
    worst = [0.0]

    def observe(i, q, v):
        e = lattice_energy(LatticeState(q, v), config)
        worst[0] = max(worst[0], abs(e - e0) / e0)

    final = step(state, config, dt, n_steps, observe=observe)
    drift = abs(shadow_energy(final, config, dt) - s0) / s0
    return drift, worst[0]


def propagation_speed(config: LatticeConfig) -> float:
    """c_model = sqrt(S / rho) = d sqrt(K / m_e)."""
    return config.d * math.sqrt(config.K / config.m_e)


def discrete_dispersion(config: LatticeConfig, k) -> np.ndarray:
    """Exact lattice relation omega(k) = 2 sqrt(K/m_e) |sin(k d / 2)|."""
    return 2.0 * config.omega0 * np.abs(np.sin(np.asarray(k) * config.d / 2.0))


def mode_wavenumber(config: LatticeConfig, mode_index: int) -> float:
    return 2.0 * math.pi * mode_index / (config.n_sites * config.d)


def standing_mode(config: LatticeConfig, mode_index: int, amplitude: float = 1.0) -> LatticeState:
    """Cosine standing wave of the given periodic mode, at rest."""
    k = mode_wavenumber(config, mode_index)
    return LatticeState(amplitude * np.cos(k * config.positions()), np.zeros(config.n_sites))


def traveling_wave(config: LatticeConfig, spec: WaveTrainSpec) -> LatticeState:
    """Right-moving q = A sin(k x - omega t) at t = 0 with the lattice frequency."""
    spec.check(config)
    k = spec.k
    x = config.positions()
    w = float(discrete_dispersion(config, k))
    return LatticeState(spec.amplitude * np.sin(k * x), -spec.amplitude * w * np.cos(k * x))


def gaussian_pulse(config: LatticeConfig, width: float, center: float | None = None,
                   amplitude: float = 1.0) -> LatticeState:
    """Right-moving Gaussian pulse: q = g(x - x_c), q_dot = -c_model g'(x - x_c).

    On a periodic lattice the pulse is wrapped so the profile is continuous.
    """
    x = config.positions()
    if center is None:
        center = 0.5 * config.length
    u = x - center
    if config.boundary == "periodic":
        u = (u + 0.5 * config.length) % config.length - 0.5 * config.length
    g = amplitude * np.exp(-0.5 * (u / width) ** 2)
    return LatticeState(g, config.c_model * u / width**2 * g)


def _zero_crossing_frequency(t: np.ndarray, a: np.ndarray) -> float:
    s = np.signbit(a)
    idx = np.nonzero(s[1:] != s[:-1])[0]
    if idx.size < 3:
        raise MeasurementError("series too short: fewer than one full oscillation period")
    t0, t1, a0, a1 = t[idx], t[idx + 1], a[idx], a[idx + 1]
    crossings = t0 - a0 * (t1 - t0) / (a1 - a0)
    half_periods = crossings.size - 1
    return math.pi * half_periods / (crossings[-1] - crossings[0])


def measured_dispersion(config: LatticeConfig, mode_index: int, sim_time: float,
                        dt: float | None = None) -> float:
    """Simulate one standing mode and measure its angular frequency.

    The mode amplitude (projection of q on the mode shape) is recorded
    every step and the frequency is taken from interpolated zero crossings.
    The default step is 0.05 d/c_model so the integrator's own frequency
    error, about (omega dt)^2 / 24, stays below 5e-4.
    """
    if config.boundary != "periodic":
        raise DomainError("dispersion measurement needs a periodic lattice")
    if not 1 <= mode_index < config.n_sites / 2:
        raise DomainError(f"mode_index must satisfy 1 <= m < n_sites/2, got {mode_index}")
    if dt is None:
        dt = 0.05 * config.d / config.c_model
    n_steps = int(math.ceil(sim_time / dt))
    if n_steps < 2:
        raise MeasurementError("sim_time shorter than two time steps")
    state = standing_mode(config, mode_index)
    shape = state.q.copy()
    norm = float(shape @ shape)
    t = dt * np.arange(n_steps + 1)
    amp = np.empty(n_steps + 1)
    amp[0] = 1.0

    def observe(i, q, v):
        amp[i + 1] = float(q @ shape) / norm

    step(state, config, dt, n_steps, observe=observe)
    return _zero_crossing_frequency(t, amp)


def pulse_displacement(q0: np.ndarray, q1: np.ndarray) -> float:
    """Circular shift (in sites, within [0, n)) maximising the cross-correlation of q1 with q0."""
    n = q0.size
    corr = np.fft.irfft(np.fft.rfft(q1) * np.conj(np.fft.rfft(q0)), n)
    i = int(np.argmax(corr))
    ym, y0, yp = corr[(i - 1) % n], corr[i], corr[(i + 1) % n]
    denom = ym - 2.0 * y0 + yp
    frac = 0.5 * (ym - yp) / denom if denom != 0 else 0.0
    return (i + frac) % n


def measured_pulse_speed(config: LatticeConfig, width_sites: float = 20.0,
                         travel_fraction: float = 0.5, dt: float | None = None) -> float:
    """Launch a Gaussian pulse and measure its speed by cross-correlation.

    The pulse travels ``travel_fraction`` of the ring so the shift is
    unambiguous. ``width_sites`` of 20 keeps the dominant k d near 0.05.
    """
    if config.boundary != "periodic":
        raise DomainError("pulse-speed measurement needs a periodic lattice")
    if not 0 < travel_fraction < 1:
        raise DomainError("travel_fraction must lie in (0, 1)")
    if dt is None:
        dt = config.default_dt()
    state = gaussian_pulse(config, width_sites * config.d)
    n_steps = int(round(travel_fraction * config.length / config.c_model / dt))
    final = step(state, config, dt, n_steps)
    shift = pulse_displacement(state.q, final.q)
    return shift * config.d / (final.time - state.time)


def energy_flux(q: np.ndarray, q_dot: np.ndarray, config: LatticeConfig) -> np.ndarray:
    """Power carried rightward across each bond (k, k+1).

    Site k pulls on k+1 with force K (q_k - q_{k+1}); the bond velocity is
    the mean of the two site velocities.
    """
    q_next = np.roll(q, -1)
    v_next = np.roll(q_dot, -1)
    return config.K * (q - q_next) * 0.5 * (q_dot + v_next)


def measured_average_power(config: LatticeConfig, spec: WaveTrainSpec, n_periods: float = 20.0,
                           dt: float | None = None, samples_per_period: int = 40) -> float:
    """Time- and bond-averaged energy flux of a traveling wave train on a periodic ring."""
    if config.boundary != "periodic":
        raise DomainError("power measurement needs a periodic lattice")
    spec.check(config)
    waves = config.length / spec.wavelength
    if abs(waves - round(waves)) > 1e-9 * waves:
        raise DomainError("ring length must hold a whole number of wavelengths")
    if dt is None:
        dt = config.default_dt()
    state = traveling_wave(config, spec)
    period = spec.wavelength / config.c_model
    n_steps = int(math.ceil(n_periods * period / dt))
    every = max(1, int(period / dt / samples_per_period))
    acc = []

    def observe(i, q, v):
        if (i + 1) % every == 0:
            acc.append(float(np.mean(energy_flux(q, v, config))))

    acc.append(float(np.mean(energy_flux(state.q, state.q_dot, config))))
    step(state, config, dt, n_steps, observe=observe)
    return float(np.mean(acc))


def average_power(spec: WaveTrainSpec, config: LatticeConfig) -> float:
    """<P> = 1/2 k omega S A^2 with omega = c_model k."""
    k = spec.k
    return 0.5 * k * spec.omega(config) * config.tension * spec.amplitude**2


def energy_per_wavelength(spec: WaveTrainSpec, config: LatticeConfig) -> float:
    """E_lambda = <P> / nu = 2 pi^2 S A^2 / lambda."""
    return 2.0 * math.pi**2 * config.tension * spec.amplitude**2 / spec.wavelength


def photon_momentum(spec: WaveTrainSpec, config: LatticeConfig) -> float:
    """p_lambda = (1/lambda) 2 pi^2 c_model A^2 (m_e / d)."""
    return 2.0 * math.pi**2 * config.c_model * spec.amplitude**2 * config.density / spec.wavelength


def planck_constant_model(config: LatticeConfig, amplitude: float) -> float:
    """p_lambda * lambda = 2 pi^2 m_e c_model A^2 / d."""
    if not amplitude > 0:
        raise DomainError("amplitude must be positive")
    return 2.0 * math.pi**2 * config.m_e * config.c_model * amplitude**2 / config.d


def calibrated_amplitude(config: LatticeConfig, h: float = H) -> float:
    """Amplitude that makes the chain constant equal ``h``: sqrt(h d / (2 pi^2 m_e c_model))."""
    return math.sqrt(h * config.d / (2.0 * math.pi**2 * config.m_e * config.c_model))


def interaction_time(wavelength: float) -> float:
    """dt ~ lambda / c = 1 / nu."""
    if not wavelength > 0:
        raise DomainError("wavelength must be positive")
    return wavelength / C


def max_energy_transfer(frequency: float) -> float:
    """Upper bound h nu on the energy handed to a bound electron."""
    if not frequency > 0:
        raise DomainError("frequency must be positive")
    return H * frequency


def snapshot_columns(state: LatticeState) -> dict:
    return {
        "site_index": np.arange(state.q.size),
        "q": state.q,
        "q_dot": state.q_dot,
    }


def snapshot_metadata(state: LatticeState, config: LatticeConfig) -> dict:
    return {
        "config": {
            "n_sites": config.n_sites,
            "d": config.d,
            "m_e": config.m_e,
            "K": config.K,
            "boundary": config.boundary,
        },
        "time": state.time,
    }


def write_snapshot(path, state: LatticeState, config: LatticeConfig, extra: dict | None = None):
    meta = snapshot_metadata(state, config)
    if extra:
        meta.update(extra)
    return write_csv(path, snapshot_columns(state), meta)
