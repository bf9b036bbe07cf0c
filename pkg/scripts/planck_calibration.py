"""Print the wave amplitude that makes the chain constant equal h, for a range of spacings d."""

import argparse

from vacuumlab import lattice as lat
from vacuumlab.constants import H


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=float, nargs="+", default=[1e-18, 1e-17, 1e-16, 1e-15, 1e-14])
    args = ap.parse_args()
    print(f"{'d [m]':>12} {'A [m]':>24} {'A/sqrt(d)':>24} {'p*lambda/h - 1':>16}")
    for d in args.d:
        cfg = lat.LatticeConfig.calibrated(64, d)
        a = lat.calibrated_amplitude(cfg)
        err = lat.planck_constant_model(cfg, a) / H - 1.0
        print(f"{d:12.3e} {a!r:>24} {a / d**0.5!r:>24} {err:16.2e}")


if __name__ == "__main__":
    main()
