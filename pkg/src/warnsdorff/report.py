"""Serialization: move-number grids, JSON report documents and CSV dumps."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass
from typing import IO, Any, Dict, Iterable, List, Optional, Tuple

from .census import CensusSummary
from .heuristic import Tour

SCHEMA_VERSION = "1"
CSV_HEADER = ("rank", "order", "failures")

Grid = List[List[int]]


def tour_grid(tour: Tour) -> Grid:
    """Visit-step matrix: 1-based step for visited squares, 0 elsewhere."""
    n = tour.size
    grid = [[0] * n for _ in range(n)]
    for step, (r, c) in enumerate(tour.path, 1):
        grid[r][c] = step
    return grid


def render_grid(tour: Tour) -> str:
    n = tour.size
    width = len(str(n * n))
    return "".join(
        " ".join(f"{v:>{width}}" for v in row) + "\n" for row in tour_grid(tour)
    )


def parse_grid(text: str) -> Grid:
    rows = [[int(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("grid is not square")
    return rows


@dataclass
class ReportDocument:
    command: str
    parameters: Dict[str, Any]
    results: Dict[str, Any]
    timing: Optional[Dict[str, float]] = None
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        d = asdict(self)
        if d["timing"] is None:
            del d["timing"]
        return json.dumps(d, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        d = json.loads(text)
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema_version')!r}")
        return cls(
            command=d["command"],
            parameters=d["parameters"],
            results=d["results"],
            timing=d.get("timing"),
            schema_version=d["schema_version"],
        )


def tour_results(tour: Tour) -> Dict[str, Any]:
    return {
        "length": tour.length,
        "hamiltonian": tour.hamiltonian,
        "closed": tour.closed,
        "final_square": list(tour.last),
        "path": [list(sq) for sq in tour.path],
        "grid": tour_grid(tour),
    }


def tour_report(tour: Tour, timing: Optional[Dict[str, float]] = None) -> ReportDocument:
    return ReportDocument(
        command="tour",
        parameters={
            "start": list(tour.start),
            "order": str(tour.order),
            "policy": tour.policy.value,
            "size": tour.size,
        },
        results=tour_results(tour),
        timing=timing,
    )


def census_report(
    summary: CensusSummary, timing: Optional[Dict[str, float]] = None
) -> ReportDocument:
    results: Dict[str, Any] = summary.to_dict()
    if summary.size != 8:
        results["note"] = f"extrapolation: no published reference values for n={summary.size}"
    return ReportDocument(
        command="census",
        parameters={"order": "all", "policy": summary.policy.value, "size": summary.size},
        results=results,
        timing=timing,
    )


def write_census_csv(out: IO[str], rows: Iterable[Tuple[int, str, int]]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row)
