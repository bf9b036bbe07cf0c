"""Run every CLI scenario with default parameters into one output tree."""

import argparse
import sys
from pathlib import Path

from vacuumlab.cli import main as cli_main
from vacuumlab.scenarios import SCENARIOS

EXTRA = {"lattice": ["--preset", "calibrated"]}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results")
    ap.add_argument("--seed", default="0")
    args = ap.parse_args()
    failures = 0
    for name in SCENARIOS:
        print(f"== {name}")
        code = cli_main(["run", name, "--out", str(Path(args.out) / name), "--seed", args.seed, *EXTRA.get(name, [])])
        failures += code != 0
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
