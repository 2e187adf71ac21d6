"""Machine-readable experiment reports with a stable, versioned schema.

Every numeric claim in a report is recomputed from the artifact being
reported on; nothing is copied from expectations.  Timings are included
for humans and excluded from any determinism guarantee.
"""

from __future__ import annotations

import json
import time
from pathlib import Path

from . import __version__

SCHEMA_VERSION = 1


def new_report(command: str, parameters: dict, seed: int | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "oddbook",
        "tool_version": __version__,
        "command": command,
        "parameters": parameters,
        "seed": seed,
        "checks": [],
        "counts": {},
        "timings_ms": {},
    }


def add_check(report: dict, name: str, ok: bool, **details) -> None:
    entry = {"name": name, "pass": bool(ok)}
    if details:
        entry["details"] = details
    report["checks"].append(entry)


def all_checks_pass(report: dict) -> bool:
    return all(c["pass"] for c in report["checks"])


def write_json(path: str | Path, payload: dict) -> None:
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=False) + "\n")


class Timer:
    """Context manager recording wall time into report['timings_ms']."""

    def __init__(self, report: dict, name: str):
        self.report = report
        self.name = name

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        elapsed = (time.perf_counter() - self.start) * 1000.0
        self.report["timings_ms"][self.name] = round(elapsed, 3)
        return False
