"""Scenario definitions: parameter schemas and runners for the CLI.

Each runner takes the effective parameters, a seed and an output directory,
writes CSV files (see :mod:`vacuumlab.io`) and returns ``(files, checks)``.
Outputs depend only on (parameters, seed).
"""

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import complex_space as cs
from . import double_slit as ds
from . import lattice as lat
from . import lorentz as lz
from . import wavepacket as wp
from .checks import CheckResult, below, within
from .constants import EV, H, HBAR, M_E
from .errors import ConfigurationError
from .io import write_csv
from .rng import make_rng, normal


@dataclass(frozen=True)
class Param:
    type: type
    default: object = None
    help: str = ""
    required: bool = False
    choices: tuple = ()


@dataclass
class Scenario:
    name: str
    description: str
    params: dict
    runner: object = field(repr=False, default=None)
    missing: object = field(repr=False, default=None)

    def missing_parameters(self, params) -> list:
        """Names of parameters that must be supplied but were not."""
        names = [k for k, p in self.params.items() if p.required and params.get(k) is None]
        return names + (list(self.missing(params)) if self.missing else [])


def _meta(name, params, seed, **extra):
    meta = {"scenario": name, "parameters": dict(sorted(params.items())), "seed": seed}
    meta.update(extra)
    return meta


# ---------------------------------------------------------------- lorentz

def run_lorentz(params, seed, out: Path):
    rng = make_rng(seed)
    k = lz.FourVector.null(normal(rng, 3) * params["k_scale"])
    p = HBAR * k
    boosts = lz.generic_boosts(rng, params["n_boosts"], k, params["max_speed"])
    report = lz.ratio_invariance_check(k, p, boosts)
    beta = np.array([b.beta for b in boosts])
    r = report.ratios
    f1 = write_csv(
        out / "lorentz_ratios.csv",
        {
            "frame": np.arange(len(boosts)),
            "beta_x": beta[:, 0], "beta_y": beta[:, 1], "beta_z": beta[:, 2],
            "ratio_t": r[:, 0], "ratio_x": r[:, 1], "ratio_y": r[:, 2], "ratio_z": r[:, 3],
        },
        _meta("lorentz", params, seed, k=k.components(), hbar=HBAR),
    )

    speeds = np.linspace(0.0, params["max_speed"], params["n_kinematics"])
    mass = params["mass"]
    td = np.array([lz.time_dilation(b, 1.0) for b in speeds])
    lc = np.array([lz.length_contraction(b, 1.0) for b in speeds])
    mom = np.array([lz.momentum_from_beta(mass, b) for b in speeds])
    energy = np.array([lz.relativistic_energy(mass, pm) for pm in mom])
    rest = mass * lz.C**2
    mass_shell = np.abs((energy**2 - (mom * lz.C) ** 2) / rest**2 - 1.0)
    f2 = write_csv(
        out / "lorentz_kinematics.csv",
        {"beta": speeds, "time_dilation": td, "length_contraction": lc,
         "momentum": mom, "energy": energy, "mass_shell_residual": mass_shell},
        _meta("lorentz", params, seed),
    )
    null_worst = max(abs(lz.boost(k, b).interval()) / lz.boost(k, b).t ** 2 for b in boosts)
    checks = [
        below("ratio_spread", report.max_relative_spread, 1e-12, "RATIO_SPREAD"),
        below("null_preservation", null_worst, 1e-12, "NULL_NOT_PRESERVED"),
        below("mass_shell", float(np.max(mass_shell)), 1e-12, "MASS_SHELL"),
    ]
    return [f1, f2], checks


# ------------------------------------------------------------------ space

def run_space(params, seed, out: Path):
    region = cs.Rectangle(params["x_min"], params["x_max"], params["xi_min"], params["xi_max"])
    fields = {
        "point_charge": cs.point_charge_field(params["charge"]),
        "sheet": cs.sheet_field(params["sigma"]),
        "conj": cs.ComplexScalarField(np.conj, (), "conj"),
        "abs2": cs.ComplexScalarField(lambda z: (np.abs(z) ** 2).astype(complex), (), "abs2"),
    }
    hs = params["h"] / 2.0 ** np.arange(params["levels"])
    cols = {"h": hs}
    for name, f in fields.items():
        cols[f"cr_{name}"] = np.array([cs.cauchy_riemann_residual(f, region, h) for h in hs])
        cols[f"lap_{name}"] = np.array([cs.harmonicity_residual(f, region, h) for h in hs])
    cr_order = float(np.log2(cols["cr_point_charge"][-2] / cols["cr_point_charge"][-1]))
    lap_order = float(np.log2(cols["lap_point_charge"][-2] / cols["lap_point_charge"][-1]))
    f1 = write_csv(out / "space_residuals.csv", cols,
                   _meta("space", params, seed, cr_order=cr_order, lap_order=lap_order))
    checks = [
        within("cauchy_riemann_order", cr_order, 1.8, 2.2, "ORDER_OUT_OF_RANGE"),
        within("laplacian_order", lap_order, 1.8, 2.2, "ORDER_OUT_OF_RANGE"),
        below("sheet_cr_roundoff", float(np.max(cols["cr_sheet"])), 1e-9, "SHEET_NOT_ANALYTIC"),
        CheckResult("conj_control", bool(np.min(cols["cr_conj"]) > 1.0),
                    float(np.min(cols["cr_conj"])), 1.0,
                    "" if np.min(cols["cr_conj"]) > 1.0 else "CONTROL_TOO_SMALL"),
    ]
    return [f1], checks


# ---------------------------------------------------------------- lattice

def _lattice_missing(params) -> list:
    if params["preset"] == "calibrated":
        return []
    return [k for k in ("K", "m_e", "d") if params[k] is None]


def _lattice_config(params) -> tuple:
    if params["preset"] == "calibrated":
        d = params["d"] if params["d"] is not None else 1e-15
        cfg = lat.LatticeConfig.calibrated(params["n_sites"], d)
        amp = params["amplitude"] if params["amplitude"] is not None else lat.calibrated_amplitude(cfg)
        return cfg, amp
    missing = _lattice_missing(params)
    if missing:
        raise ConfigurationError(f"lattice scenario needs {', '.join(missing)} unless --preset calibrated")
    cfg = lat.LatticeConfig(params["n_sites"], params["d"], params["m_e"], params["K"])
    amp = params["amplitude"] if params["amplitude"] is not None else 0.1 * cfg.d
    return cfg, amp


def run_lattice(params, seed, out: Path):
    cfg, amp = _lattice_config(params)
    dt = params["dt_factor"] * cfg.d / cfg.c_model
    if params["init"] == "wave":
        spec = lat.WaveTrainSpec(amp, params["wavelength_sites"] * cfg.d)
        state = lat.traveling_wave(cfg, spec)
    else:
        rng = make_rng(seed)
        state = lat.LatticeState(amp * normal(rng, cfg.n_sites), amp * cfg.omega0 * normal(rng, cfg.n_sites))
    every = params["record_every"]
    steps = params["steps"]
    rows = {"step": [0], "time": [0.0], "energy": [lat.lattice_energy(state, cfg)],
            "shadow_energy": [lat.shadow_energy(state, cfg, dt)]}

    def observe(i, q, v):
        if (i + 1) % every == 0 or i + 1 == steps:
            s = lat.LatticeState(q, v)
            rows["step"].append(i + 1)
            rows["time"].append((i + 1) * dt)
            rows["energy"].append(lat.lattice_energy(s, cfg))
            rows["shadow_energy"].append(lat.shadow_energy(s, cfg, dt))

    final = lat.step(state, cfg, dt, steps, observe=observe)
    shadow = np.array(rows["shadow_energy"])
    drift = float(abs(shadow[-1] - shadow[0]) / shadow[0])
    planck = lat.planck_constant_model(cfg, amp)
    derived = {"c_model": cfg.c_model, "dt": dt, "tension": cfg.tension, "density": cfg.density,
               "amplitude": amp, "planck_constant_model": planck}
    f1 = write_csv(out / "lattice_energy.csv", rows, _meta("lattice", params, seed, derived=derived))
    f2 = lat.write_snapshot(out / "lattice_snapshot.csv", final, cfg, _meta("lattice", params, seed))
    checks = [below("energy_drift", drift, 1e-6, "ENERGY_DRIFT")]
    if params["preset"] == "calibrated" and params["amplitude"] is None:
        checks.append(below("planck_constant", abs(planck / H - 1.0), 1e-12, "PLANCK_MISMATCH"))
    return [f1, f2], checks


# ----------------------------------------------------------------- packet

def run_packet(params, seed, out: Path):
    n = params["n_points"]
    sigma_x = params["sigma_x"]
    x = wp.centered_grid(n, params["range_sigmas"] * sigma_x / n)
    k = wp.conjugate_grid(x)
    sigma_k = 1.0 / (2.0 * sigma_x)
    k0 = params["k0_sigmas"] * sigma_k
    disp = wp.free_particle_dispersion(params["mass"])
    packet = wp.gaussian_packet(k, k0, sigma_k, disp)
    v_g = wp.group_velocity(packet)
    t_max = params["travel_sigmas"] * sigma_x / v_g
    times = np.linspace(0.0, t_max, params["n_times"])

    meta = _meta("packet", params, seed, group_velocity=v_g, hbar=HBAR)
    files = [write_csv(out / "packet_spectrum.csv", wp.packet_columns(packet), meta)]
    summary = {"time": [], "centroid": [], "delta_x": [], "delta_p": [], "product": [], "parseval_gap": []}
    for i, t in enumerate(times):
        psi = wp.synthesize(packet, x, float(t))
        dx_, dp, prod = wp.uncertainty_product(psi, packet)
        summary["time"].append(float(t))
        summary["centroid"].append(psi.centroid())
        summary["delta_x"].append(dx_)
        summary["delta_p"].append(dp)
        summary["product"].append(prod)
        summary["parseval_gap"].append(wp.parseval_check(packet, psi)[2])
        files.append(write_csv(out / f"packet_x_{i:03d}.csv", wp.wavefunction_columns(psi),
                               dict(meta, time=float(t))))
    files.append(write_csv(out / "packet_summary.csv", summary, meta))

    c = summary["centroid"]
    drift_speed = (c[-1] - c[0]) / (times[-1] - times[0]) if len(times) > 1 else v_g
    checks = [
        below("min_uncertainty", abs(summary["product"][0] / (HBAR / 2) - 1.0), 1e-6, "UNCERTAINTY"),
        below("parseval", max(summary["parseval_gap"]), 1e-10, "PARSEVAL_GAP"),
        below("group_velocity", abs(drift_speed / v_g - 1.0), 1e-2, "GROUP_VELOCITY"),
    ]
    return files, checks


# ------------------------------------------------------------------ slits

def run_slits(params, seed, out: Path):
    s = ds.SlitScenario(params["D"], params["L"], params["delta_e_ev"] * EV, params["gamma"],
                        params["wavelength"])
    half = params["n_points"] // 2
    y = params["y_max"] / half * (np.arange(2 * half + 1) - half)
    inten = ds.interference_pattern(s, y)
    pm = ds.pattern_metadata(s)
    meta = _meta("slits", params, seed, geometry=pm.pop("scenario"), **pm)
    f1 = write_csv(out / "slits_pattern.csv", {"y": y, "intensity": inten}, meta)
    evenness = float(np.max(np.abs(inten - inten[::-1])))
    checks = [below("evenness", evenness, 1e-12, "PATTERN_NOT_EVEN")]
    expected = ds.fringe_spacing_estimate(s)
    if expected >= 10 * (y[1] - y[0]):
        measured = ds.measure_fringe_spacing(y, inten)
        checks.append(below("fringe_spacing", abs(measured / expected - 1.0), 1e-2, "FRINGE_SPACING"))
    return [f1], checks


SCENARIOS = {
    "lorentz": Scenario("lorentz", "component ratios p'/k' under random boosts; dilation/contraction table", {
        "n_boosts": Param(int, 100, "number of random boosts"),
        "max_speed": Param(float, 0.99, "largest |beta|"),
        "k_scale": Param(float, 1e7, "scale of the random wave vector, 1/m"),
        "n_kinematics": Param(int, 21, "rows in the kinematics table"),
        "mass": Param(float, 1.0, "mass for the energy-momentum table, kg"),
    }, run_lorentz),
    "space": Scenario("space", "Cauchy-Riemann and Laplacian residuals under grid refinement", {
        "charge": Param(float, 1.0, "point charge Q (cgs)"),
        "sigma": Param(float, 1.0 / (2.0 * math.pi), "sheet charge density (cgs)"),
        "h": Param(float, 0.1, "coarsest grid spacing"),
        "levels": Param(int, 4, "number of halvings"),
        "x_min": Param(float, 1.0), "x_max": Param(float, 2.0),
        "xi_min": Param(float, 1.0), "xi_max": Param(float, 2.0),
    }, run_space),
    "lattice": Scenario("lattice", "velocity-Verlet run of the vacuum-electron chain; energy series and snapshot", {
        "n_sites": Param(int, 1024, "number of sites"),
        "K": Param(float, None, "spring constant, N/m"),
        "m_e": Param(float, None, "site mass, kg"),
        "d": Param(float, None, "site spacing, m"),
        "steps": Param(int, 10_000, "number of time steps"),
        "dt_factor": Param(float, lat.DEFAULT_CFL, "dt in units of d / c_model"),
        "preset": Param(str, "custom", "parameter preset", choices=("custom", "calibrated")),
        "init": Param(str, "wave", "initial state", choices=("wave", "random")),
        "wavelength_sites": Param(float, 64.0, "wave-train wavelength in sites"),
        "amplitude": Param(float, None, "wave amplitude, m (calibrated preset: Planck-calibrated)"),
        "record_every": Param(int, 100, "steps between energy samples"),
    }, run_lattice, _lattice_missing),
    "packet": Scenario("packet", "Gaussian free-particle packet: spectrum, x snapshots, uncertainty", {
        "n_points": Param(int, 1024, "grid points"),
        "sigma_x": Param(float, 1e-9, "position spread, m"),
        "range_sigmas": Param(float, 24.0, "x-grid width in units of sigma_x"),
        "k0_sigmas": Param(float, 40.0, "carrier wavenumber in units of sigma_k"),
        "mass": Param(float, M_E, "particle mass, kg"),
        "n_times": Param(int, 5, "number of snapshots"),
        "travel_sigmas": Param(float, 4.0, "centroid travel over the run, in sigma_x"),
    }, run_packet),
    "slits": Scenario("slits", "two-path interference pattern with phi_max / delta_y envelope", {
        "D": Param(float, 1e-3, "slit half-separation, m"),
        "L": Param(float, 1.0, "screen distance, m"),
        "delta_e_ev": Param(float, 1e-3, "energy uncertainty, eV"),
        "gamma": Param(float, 100.0, "relativistic factor"),
        "wavelength": Param(float, 1e-6, "wavelength, m"),
        "n_points": Param(int, 20_001, "screen samples"),
        "y_max": Param(float, 5e-3, "half width of the screen window, m"),
    }, run_slits),
}
