"""Benchmark harness: size-reduction and runtime measurements.

Sweeps catalog size and dimension count over seeded synthetic data,
recording per-stage set sizes and wall-clock times. Dimensions are always
the first `d` of the schema in declaration order, so a given `d` means the
same dimension set across runs. Results on random data vary by seed; plans
therefore carry several seeds and the summary reports mean and spread.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass
from pathlib import Path
from statistics import mean, pstdev
from typing import Any, Sequence

from .catalog import DEFAULT_DIMENSIONS, DimensionSpec, generate_synthetic
from .electre import DEFAULT_CUT_LEVEL, compute_solution, default_settings
from .errors import ParseError, SchemaError
from .skyline import DimensionView, compute_skyline_bnl

__all__ = [
    "ExperimentPlan",
    "ExperimentRow",
    "ExperimentReport",
    "plan_from_dict",
    "load_plan",
    "run_experiment",
    "emit_report",
    "summarize",
]

REPORT_HEADER = ["n", "d", "seed", "filtered", "skyline", "final", "t_skyline_ms", "t_electre_ms"]


@dataclass(frozen=True)
class ExperimentPlan:
    """Grid of (size, dimension count, seed) cells to measure."""

    sizes: tuple[int, ...]
    dim_counts: tuple[int, ...]
    seeds: tuple[int, ...]
    cut_level: float | None = None

    def __post_init__(self):
        if not self.sizes or not self.seeds or not self.dim_counts:
            raise ValueError("plan needs at least one size, one dimension count, and one seed")
        if any(n < 1 for n in self.sizes):
            raise ValueError(f"sizes must be >= 1 (got {self.sizes})")
        if any(d < 1 for d in self.dim_counts):
            raise ValueError(f"dimension counts must be >= 1 (got {self.dim_counts})")


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    d: int
    seed: int
    filtered: int
    skyline: int
    final: int
    t_skyline_ms: float
    t_electre_ms: float


@dataclass(frozen=True)
class ExperimentReport:
    rows: tuple[ExperimentRow, ...]


def plan_from_dict(obj: Any) -> ExperimentPlan:
    """Parse a plan JSON object: {"sizes": [...], "dims": [...],
    "seeds": [...], "cut_level"?: number}."""
    if not isinstance(obj, dict):
        raise SchemaError("plan must be a JSON object")
    unknown = obj.keys() - {"sizes", "dims", "seeds", "cut_level"}
    if unknown:
        raise SchemaError(f"plan has unknown field {sorted(unknown)[0]!r}")
    for key in ("sizes", "dims", "seeds"):
        value = obj.get(key)
        if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
            raise SchemaError(f"plan field {key!r} must be an array of integers")
    cut = obj.get("cut_level")
    if cut is not None and (isinstance(cut, bool) or not isinstance(cut, (int, float))):
        raise SchemaError("plan field 'cut_level' must be a number")
    return ExperimentPlan(
        sizes=tuple(obj["sizes"]),
        dim_counts=tuple(obj["dims"]),
        seeds=tuple(obj["seeds"]),
        cut_level=float(cut) if cut is not None else None,
    )


def load_plan(path: str | Path) -> ExperimentPlan:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    return plan_from_dict(obj)


def run_experiment(
    plan: ExperimentPlan,
    schema: Sequence[DimensionSpec] = DEFAULT_DIMENSIONS,
) -> ExperimentReport:
    """One row per (n, d, seed): generate, skyline the whole catalog, refine
    with span-default thresholds and equal weights. Set sizes are exact and
    reproducible per seed; only the timing columns vary between runs."""
    schema = tuple(schema)
    if max(plan.dim_counts) > len(schema):
        raise ValueError(
            f"plan asks for {max(plan.dim_counts)} dimensions, schema has {len(schema)}"
        )
    rows = []
    for n in sorted(set(plan.sizes)):
        for seed in plan.seeds:
            catalog = generate_synthetic(n, schema, seed)
            for d in sorted(set(plan.dim_counts)):
                view = DimensionView.from_schema(schema, [s.id for s in schema[:d]])
                t0 = time.perf_counter()
                skyline = compute_skyline_bnl(catalog.services, view)
                t1 = time.perf_counter()
                settings = default_settings(
                    skyline,
                    view,
                    cut_level=plan.cut_level if plan.cut_level is not None else DEFAULT_CUT_LEVEL,
                )
                final = compute_solution(skyline, settings, view)
                t2 = time.perf_counter()
                rows.append(
                    ExperimentRow(
                        n=n,
                        d=d,
                        seed=seed,
                        filtered=n,
                        skyline=len(skyline),
                        final=len(final),
                        t_skyline_ms=(t1 - t0) * 1000.0,
                        t_electre_ms=(t2 - t1) * 1000.0,
                    )
                )
    rows.sort(key=lambda r: (r.n, r.d, r.seed))
    return ExperimentReport(rows=tuple(rows))


def emit_report(report: ExperimentReport, path: str | Path) -> None:
    """Write the report as CSV (stable row order: n, then d, then seed) and
    a companion <path>.summary.json aggregating over seeds."""
    path = Path(path)
    rows = sorted(report.rows, key=lambda r: (r.n, r.d, r.seed))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(REPORT_HEADER)
        for r in rows:
            writer.writerow(
                [r.n, r.d, r.seed, r.filtered, r.skyline, r.final,
                 f"{r.t_skyline_ms:.3f}", f"{r.t_electre_ms:.3f}"]
            )
    summary_path = path.with_name(path.name + ".summary.json")
    with open(summary_path, "w", encoding="utf-8") as fh:
        json.dump(summarize(report), fh, indent=2, sort_keys=True)
        fh.write("\n")


def summarize(report: ExperimentReport) -> dict:
    """Per (n, d) cell: mean and population standard deviation over seeds
    for set sizes and stage timings."""
    cells: dict[tuple[int, int], list[ExperimentRow]] = {}
    for r in report.rows:
        cells.setdefault((r.n, r.d), []).append(r)
    out = {}
    for (n, d), rows in sorted(cells.items()):
        out[f"n={n},d={d}"] = {
            "seeds": len(rows),
            "skyline": _mean_std([r.skyline for r in rows]),
            "final": _mean_std([r.final for r in rows]),
            "t_skyline_ms": _mean_std([r.t_skyline_ms for r in rows]),
            "t_electre_ms": _mean_std([r.t_electre_ms for r in rows]),
        }
    return out


def _mean_std(values: list[float]) -> dict[str, float]:
    return {"mean": float(mean(values)), "std": float(pstdev(values))}
