"""Embedded invariant suite run by ``vacuumlab check`` and by scenario reports."""

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import complex_space as cs
from . import double_slit as ds
from . import lattice as lat
from . import lorentz as lz
from . import wavepacket as wp
from .constants import EV, H, HBAR
from .rng import make_rng, normal, uniform


@dataclass
class CheckResult:
    name: str
    passed: bool
    value: float
    threshold: float
    reason: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}: value={self.value:.3e} threshold={self.threshold:.3e}"
        return text + (f" ({self.reason})" if self.reason else "")

    def as_dict(self) -> dict:
        return asdict(self)


def below(name: str, value: float, threshold: float, reason_code: str) -> CheckResult:
    ok = bool(np.isfinite(value) and value < threshold)
    return CheckResult(name, ok, float(value), float(threshold), "" if ok else reason_code)


def within(name: str, value: float, low: float, high: float, reason_code: str) -> CheckResult:
    ok = bool(low <= value <= high)
    return CheckResult(name, ok, float(value), float(high), "" if ok else reason_code)


def check_null_preservation(seed: int = 0, n: int = 100) -> CheckResult:
    rng = make_rng(seed)
    worst = 0.0
    for b in lz.random_boosts(rng, n):
        v = lz.FourVector.null(normal(rng, 3))
        w = lz.boost(v, b)
        worst = max(worst, abs(w.interval()) / (w.t * w.t))
    return below("lorentz.null_preservation", worst, 1e-12, "NULL_NOT_PRESERVED")


def check_ratio_invariance(seed: int = 0, n: int = 100) -> CheckResult:
    rng = make_rng(seed)
    k = lz.FourVector.null(normal(rng, 3) * 1e7)
    report = lz.ratio_invariance_check(k, HBAR * k, lz.generic_boosts(rng, n, k))
    return below("lorentz.ratio_invariance", report.max_relative_spread, 1e-12, "RATIO_SPREAD")


def check_u1_invariance(seed: int = 0, n: int = 1000) -> CheckResult:
    rng = make_rng(seed)
    worst = 0.0
    for _ in range(n):
        p = cs.InternalComplexPoint(normal(rng, 3), normal(rng, 3))
        ang = cs.RotationAngles(*uniform(rng, -math.pi, math.pi, 3))
        l0 = cs.absolute_length(p)
        worst = max(worst, abs(cs.absolute_length(cs.u1_rotate(p, ang)) - l0) / l0)
    return below("complex_space.u1_invariance", worst, 1e-12, "LENGTH_NOT_INVARIANT")


def check_analyticity_order(h: float = 0.05) -> list:
    region = cs.Rectangle(1.0, 2.0, 1.0, 2.0)
    f = cs.point_charge_field(1.0)
    cr = cs.convergence_order(lambda s: cs.cauchy_riemann_residual(f, region, s), h)
    lap = cs.convergence_order(lambda s: cs.harmonicity_residual(f, region, s), h)
    return [
        within("complex_space.cauchy_riemann_order", cr, 1.8, 2.2, "ORDER_OUT_OF_RANGE"),
        within("complex_space.laplacian_order", lap, 1.8, 2.2, "ORDER_OUT_OF_RANGE"),
    ]


def check_lattice_energy(seed: int = 0, n_sites: int = 256, n_steps: int = 10_000) -> CheckResult:
    cfg = lat.LatticeConfig(n_sites, 0.01, 1.0, 1.0)
    rng = make_rng(seed)
    state = lat.LatticeState(normal(rng, n_sites), normal(rng, n_sites))
    drift, _ = lat.energy_drift(cfg, state, n_steps)
    return below("lattice.energy_drift", drift, 1e-6, "ENERGY_DRIFT")


def check_lattice_dispersion(modes=(4, 16, 40, 63)) -> CheckResult:
    cfg = lat.LatticeConfig(128, 0.01, 1.0, 1.0)
    worst = 0.0
    for m in modes:
        w = float(lat.discrete_dispersion(cfg, lat.mode_wavenumber(cfg, m)))
        measured = lat.measured_dispersion(cfg, m, 6 * 2 * math.pi / w)
        worst = max(worst, abs(measured / w - 1.0))
    return below("lattice.dispersion", worst, 5e-3, "DISPERSION_MISMATCH")


def check_planck_constancy() -> CheckResult:
    cfg = lat.LatticeConfig.calibrated(n_sites=1024)
    a = lat.calibrated_amplitude(cfg)
    vals = [
        lat.photon_momentum(lat.WaveTrainSpec(a, 2 * cfg.d * m), cfg) * 2 * cfg.d * m
        for m in (10, 20, 40, 80)
    ]
    err = max(abs(v / H - 1.0) for v in vals)
    return below("lattice.planck_constant", err, 1e-12, "PLANCK_MISMATCH")


def check_fourier(seed: int = 0, n_packets: int = 5, n: int = 1024) -> list:
    rng = make_rng(seed)
    x = wp.centered_grid(n, 0.01)
    k = wp.conjugate_grid(x)
    disp = wp.linear_dispersion(1.0)
    worst_rt = worst_gap = 0.0
    for _ in range(n_packets):
        amps = (normal(rng, n) + 1j * normal(rng, n)) * np.exp(-((k / (0.25 * k.max())) ** 2))
        packet = wp.SpectralWavePacket(k, amps, disp)
        psi = wp.synthesize(packet, x, uniform(rng, 0.0, 1.0))
        worst_rt = max(worst_rt, wp.relative_l2_error(packet, wp.analyze(psi, k, disp)))
        worst_gap = max(worst_gap, wp.parseval_check(packet, psi)[2])
    return [
        below("wavepacket.round_trip", worst_rt, 1e-10, "ROUND_TRIP"),
        below("wavepacket.parseval", worst_gap, 1e-10, "PARSEVAL_GAP"),
    ]


def check_min_uncertainty(n: int = 512) -> CheckResult:
    sigma_x = 1.0
    x = wp.centered_grid(n, 12.0 * sigma_x / n)
    k = wp.conjugate_grid(x)
    sigma_k = 1.0 / (2.0 * sigma_x)
    packet = wp.gaussian_packet(k, 40.0 * sigma_k, sigma_k, wp.free_particle_dispersion(1.0, HBAR))
    _, _, prod = wp.uncertainty_product(wp.synthesize(packet, x), packet)
    return below("wavepacket.min_uncertainty", abs(prod / (HBAR / 2) - 1.0), 1e-6, "UNCERTAINTY")


def check_slit_evenness() -> CheckResult:
    s = ds.SlitScenario(1e-3, 1.0, 1e-3 * EV, 100.0, 1e-6)
    y = 1e-6 * (np.arange(4001) - 2000)
    inten = ds.interference_pattern(s, y)
    return below("double_slit.evenness", float(np.max(np.abs(inten - inten[::-1]))), 1e-12, "PATTERN_NOT_EVEN")


def run_all() -> list:
    results = [
        check_null_preservation(),
        check_ratio_invariance(),
        check_u1_invariance(),
        *check_analyticity_order(),
        check_lattice_energy(),
        check_lattice_dispersion(),
        check_planck_constancy(),
        *check_fourier(),
        check_min_uncertainty(),
        check_slit_evenness(),
    ]
    return results
