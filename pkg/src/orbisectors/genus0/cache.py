"""Advisory JSON cache of the open and closed trace tables.

The file holds one entry per ``(n, cycle type)``; loading it only pre-fills
the in-memory tables, and rebuilding a table yields byte-identical JSON.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from ..admissible import partitions
from ..algebra import LPoly
from . import counting, trees

CACHE_FILE = "trace_table.json"
ENV_VAR = "SECTOR_CACHE_DIR"


def build_table(n_values) -> dict:
    table = {"open": [], "closed": []}
    for n in sorted(n_values):
        for t in partitions(n):
            table["open"].append({"n": n, "type": list(t), "poly": counting.trace_open(n, t).to_json()})
            table["closed"].append({"n": n, "type": list(t), "poly": trees.trace_closed_type(n, t).to_json()})
    return table


def snapshot() -> dict:
    """The entries currently held in memory, in the same layout as :func:`build_table`."""
    table = {}
    for kind, source in (("open", counting.OPEN_TABLE), ("closed", trees.CLOSED_TABLE)):
        table[kind] = [
            {"n": sum(t), "type": list(t), "poly": source[t].to_json()}
            # same order as partitions(): by n, then reverse lexicographic
            for t in sorted(source, key=lambda t: (sum(t), [-x for x in t]))
        ]
    return table


def dumps(table: dict) -> str:
    return json.dumps(table, indent=1, sort_keys=True) + "\n"


def cache_path(directory=None) -> Path | None:
    directory = directory or os.environ.get(ENV_VAR)
    if not directory:
        return None
    return Path(directory) / CACHE_FILE


def load(path) -> int:
    """Pre-fill the trace tables from ``path``; returns the number of entries."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    count = 0
    for kind, target in (("open", counting.OPEN_TABLE), ("closed", trees.CLOSED_TABLE)):
        for entry in data.get(kind, []):
            target[tuple(entry["type"])] = LPoly.from_json(entry["poly"])
            count += 1
    return count


def save(path, n_values) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(build_table(n_values)), encoding="utf-8", newline="\n")


def clear_memory() -> None:
    counting.OPEN_TABLE.clear()
    trees.CLOSED_TABLE.clear()
