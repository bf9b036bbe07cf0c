"""CSV export with a one-line JSON metadata header.

File layout::

    # {"config": {...}, ...}
    col_a,col_b
    1.0,2.5

UTF-8, ``\\n`` line endings, floats written with ``repr`` so every value
round-trips exactly. Metadata keys are sorted so that identical inputs give
identical bytes.
"""

import json
import math
from pathlib import Path

import numpy as np


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        if math.isnan(x) or math.isinf(x):
            return repr(x)
        return x
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, Path):
        return str(obj)
    return obj


def format_value(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))


def dumps_metadata(metadata: dict) -> str:
    return json.dumps(_jsonable(metadata), sort_keys=True, separators=(",", ":"))


def write_csv(path, columns: dict, metadata: dict) -> Path:
    """Write equal-length ``columns`` (name -> sequence) under a metadata line."""
    path = Path(path)
    names = list(columns)
    data = [np.asarray(columns[n]) for n in names]
    lengths = {len(d) for d in data}
    if len(lengths) > 1:
        raise ValueError(f"column lengths differ: {sorted(lengths)}")
    lines = ["# " + dumps_metadata(metadata), ",".join(names)]
    for row in zip(*data):
        lines.append(",".join(format_value(v) for v in row))
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    return path


def read_csv(path):
    """Return ``(metadata, columns)`` from a file written by :func:`write_csv`."""
    with open(path, encoding="utf-8") as fh:
        first = fh.readline()
        if not first.startswith("# "):
            raise ValueError(f"{path}: missing metadata header")
        metadata = json.loads(first[2:])
        names = fh.readline().strip().split(",")
        rows = [line.strip().split(",") for line in fh if line.strip()]
    columns = {n: np.array([float(r[i]) for r in rows]) for i, n in enumerate(names)}
    return metadata, columns
