"""Measure lattice mode frequencies and compare with 2 sqrt(K/m) |sin(kd/2)| and c k."""

import argparse
import math

import numpy as np

from vacuumlab import lattice as lat
from vacuumlab.io import write_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-sites", type=int, default=1024)
    ap.add_argument("--modes", type=int, default=16, help="number of modes, log-spaced up to N/2 - 1")
    ap.add_argument("--periods", type=float, default=6.0)
    ap.add_argument("--out", default="dispersion_sweep.csv")
    args = ap.parse_args()

    cfg = lat.LatticeConfig(args.n_sites, 0.01, 1.0, 1.0)
    modes = np.unique(np.geomspace(1, cfg.n_sites // 2 - 1, args.modes).astype(int))
    rows = {"mode": [], "kd": [], "omega_measured": [], "omega_lattice": [], "omega_continuum": []}
    for m in modes:
        k = lat.mode_wavenumber(cfg, int(m))
        w = float(lat.discrete_dispersion(cfg, k))
        measured = lat.measured_dispersion(cfg, int(m), args.periods * 2 * math.pi / w)
        rows["mode"].append(int(m))
        rows["kd"].append(k * cfg.d)
        rows["omega_measured"].append(measured)
        rows["omega_lattice"].append(w)
        rows["omega_continuum"].append(cfg.c_model * k)
        print(f"m={m:5d} kd={k * cfg.d:.4f} measured/lattice-1={measured / w - 1:+.2e} "
              f"lattice/continuum-1={w / (cfg.c_model * k) - 1:+.2e}")
    write_csv(args.out, rows, {"n_sites": cfg.n_sites, "d": cfg.d, "K": cfg.K, "m_e": cfg.m_e})
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
