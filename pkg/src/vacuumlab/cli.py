"""Command-line scenario runner.

    vacuumlab list
    vacuumlab check
    vacuumlab run <scenario> [--config cfg.json] [--out DIR] [--seed N] [--<param> VALUE ...]

Exit codes: 0 success, 1 an embedded check failed, 2 usage, 3 I/O,
4 numerical domain error.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .checks import run_all
from .errors import VacuumLabError
from .scenarios import SCENARIOS

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_DOMAIN = 4


class UsageError(Exception):
    pass


@dataclass
class ScenarioConfig:
    scenario: str
    parameters: dict
    output_path: Path
    seed: int = 0


@dataclass
class RunReport:
    scenario: str
    duration: float
    files: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "duration_s": self.duration,
            "files": [str(f) for f in self.files],
            "checks": [c.as_dict() for c in self.checks],
            "passed": self.passed,
        }


def flag_name(key: str) -> str:
    return "--" + key.replace("_", "-")


def _coerce(key: str, value, spec):
    if value is None:
        return None
    try:
        if spec.type is int:
            if isinstance(value, float) and not value.is_integer():
                raise ValueError
            if isinstance(value, bool):
                raise ValueError
            out = int(value)
        elif spec.type is float:
            if isinstance(value, bool):
                raise ValueError
            out = float(value)
        else:
            out = str(value)
    except (TypeError, ValueError):
        raise UsageError(f"parameter {key!r}: cannot interpret {value!r} as {spec.type.__name__}") from None
    if spec.choices and out not in spec.choices:
        raise UsageError(f"parameter {key!r} must be one of {', '.join(spec.choices)}")
    return out


def _load_file(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError(f"config {path} must hold a JSON object")
    return data


def _parse_seed(value) -> int:
    try:
        seed = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"seed must be a non-negative integer, got {value!r}") from None
    if seed < 0 or (isinstance(value, float) and not value.is_integer()):
        raise UsageError(f"seed must be a non-negative integer, got {value!r}")
    return seed


def parse_config(scenario: str, tokens=(), config_path=None, out=None, seed=None) -> ScenarioConfig:
    """Merge defaults, a JSON file and ``--param value`` tokens (in that order of precedence).

    The file may hold scenario parameters plus optional ``seed`` and ``out``
    keys. Unknown keys, unknown flags and missing required values raise
    :class:`UsageError`.
    """
    if scenario not in SCENARIOS:
        raise UsageError(f"unknown scenario {scenario!r}; choose from {', '.join(SCENARIOS)}")
    schema = SCENARIOS[scenario].params
    params = {k: p.default for k, p in schema.items()}
    file_seed, file_out = 0, "results"

    if config_path is not None:
        data = _load_file(config_path)
        if data.get("scenario", scenario) != scenario:
            raise UsageError(f"config is for scenario {data['scenario']!r}, not {scenario!r}")
        for key, value in data.items():
            if key == "scenario":
                continue
            if key == "seed":
                file_seed = _parse_seed(value)
            elif key == "out":
                file_out = str(value)
            elif key in schema:
                params[key] = _coerce(key, value, schema[key])
            else:
                raise UsageError(f"unknown key {key!r} for scenario {scenario!r}")

    flags = {flag_name(k): k for k in schema}
    tokens = list(tokens)
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        name, eq, inline = tok.partition("=")
        if name not in flags:
            raise UsageError(f"unknown option {name!r} for scenario {scenario!r}")
        if eq:
            value = inline
            i += 1
        else:
            if i + 1 >= len(tokens):
                raise UsageError(f"option {name} needs a value")
            value = tokens[i + 1]
            i += 2
        key = flags[name]
        params[key] = _coerce(key, value, schema[key])

    missing = SCENARIOS[scenario].missing_parameters(params)
    if missing:
        raise UsageError(f"missing required parameter(s) {', '.join(flag_name(k) for k in missing)}")

    return ScenarioConfig(
        scenario=scenario,
        parameters=params,
        output_path=Path(out if out is not None else file_out),
        seed=_parse_seed(seed) if seed is not None else file_seed,
    )


def run_scenario(config: ScenarioConfig) -> RunReport:
    """Execute one scenario; data files are deterministic in (parameters, seed).

    Wall-clock duration goes only into ``report.json``, never into data files.
    """
    out = Path(config.output_path)
    out.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    files, checks = SCENARIOS[config.scenario].runner(dict(config.parameters), config.seed, out)
    report = RunReport(config.scenario, time.perf_counter() - start, list(files), list(checks))
    path = out / "report.json"
    path.write_text(json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    report.files.append(path)
    return report


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vacuumlab", description="Vacuum-lattice numerical laboratory.",
                                     allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="list scenarios and their parameters")
    sub.add_parser("check", help="run the embedded invariant suite")
    run = sub.add_parser("run", help="run a scenario", allow_abbrev=False)
    run.add_argument("scenario")
    run.add_argument("--config", default=None, help="JSON file with parameters")
    run.add_argument("--out", default=None, help="output directory (default: results)")
    run.add_argument("--seed", default=None, help="non-negative integer seed (default 0)")
    return parser


def _list(stream) -> int:
    for name, sc in SCENARIOS.items():
        print(f"{name}: {sc.description}", file=stream)
        for key, p in sc.params.items():
            extra = f" {{{'|'.join(p.choices)}}}" if p.choices else ""
            print(f"  {flag_name(key)} ({p.type.__name__}, default {p.default!r}){extra} {p.help}".rstrip(),
                  file=stream)
    return EXIT_OK


def _check(stream) -> int:
    results = run_all()
    for r in results:
        print(r.line(), file=stream)
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args, rest = parser.parse_known_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command != "run":
        if rest:
            print(f"vacuumlab: unexpected arguments {' '.join(rest)}", file=sys.stderr)
            return EXIT_USAGE
        return _list(sys.stdout) if args.command == "list" else _check(sys.stdout)

    try:
        config = parse_config(args.scenario, rest, args.config, args.out, args.seed)
    except UsageError as exc:
        print(f"vacuumlab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run_scenario(config)
    except VacuumLabError as exc:
        print(f"vacuumlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"vacuumlab: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO

    for f in report.files:
        print(f)
    for c in report.checks:
        print(c.line())
    print(f"duration {report.duration:.3f} s")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
