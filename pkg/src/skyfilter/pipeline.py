"""End-to-end selection pipeline.

A query separates requirements into fixed categorical predicates and
dimensions to optimize. The pipeline filters the catalog on the fixed
part, computes the skyline over the optimized dimensions, translates
importance levels into criterion weights, resolves thresholds (query
overrides win over caller-supplied defaults, which win over span-based
defaults computed from the skyline), runs the outranking refinement, and
returns all three stages with sizes and timings.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path
from typing import Any, Mapping, Sequence

from .catalog import Catalog, CloudService, filter_fixed, service_to_dict
from .electre import (
    DEFAULT_CUT_LEVEL,
    CriterionConfig,
    ElectreSettings,
    compute_solution,
    span_thresholds,
)
from .errors import ParseError, QueryValidationError
from .skyline import DimensionView, compute_skyline_bnl

__all__ = [
    "Importance",
    "importance_to_weight",
    "ThresholdOverride",
    "Query",
    "SelectionResult",
    "resolve_settings",
    "run_query",
    "query_from_dict",
    "query_to_dict",
    "load_query",
    "result_to_dict",
    "settings_to_dict",
]


class Importance(IntEnum):
    """Five-level importance scale; the numeric value is the raw weight."""

    NOT_IMPORTANT = 1
    SLIGHTLY_IMPORTANT = 2
    MODERATELY_IMPORTANT = 3
    VERY_IMPORTANT = 4
    EXTREMELY_IMPORTANT = 5

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, value: Any) -> "Importance":
        """Accept a level name ("very_important", "Very Important", ...) or
        its integer value 1..5."""
        if isinstance(value, Importance):
            return value
        if isinstance(value, bool):
            raise ValueError(f"not an importance level: {value!r}")
        if isinstance(value, int):
            try:
                return cls(value)
            except ValueError:
                raise ValueError(f"importance must be 1..5 (got {value})") from None
        if isinstance(value, str):
            token = value.strip().lower().replace("-", "_").replace(" ", "_")
            for level in cls:
                if token == level.name.lower():
                    return level
            raise ValueError(f"not an importance level: {value!r}")
        raise ValueError(f"not an importance level: {value!r}")


def importance_to_weight(level: Importance) -> float:
    """Linear 1–5 mapping; only weight ratios matter downstream."""
    return float(Importance(level).value)


@dataclass(frozen=True)
class ThresholdOverride:
    """Partial per-criterion threshold override; None fields keep the
    value from the next precedence level. v_veto may be math.inf."""

    q_ind: float | None = None
    p_pref: float | None = None
    v_veto: float | None = None

    def __post_init__(self):
        for name in ("q_ind", "p_pref"):
            value = getattr(self, name)
            if value is not None and not (math.isfinite(value) and value >= 0):
                raise ValueError(f"{name} must be a finite number >= 0 (got {value})")
        if self.v_veto is not None and (math.isnan(self.v_veto) or self.v_veto <= 0):
            raise ValueError(f"v_veto must be > 0, or infinite for no veto (got {self.v_veto})")


@dataclass(frozen=True)
class Query:
    """Fixed predicates plus dimensions to optimize with importance levels,
    and optional outranking overrides."""

    fixed: dict[str, str] = field(default_factory=dict)
    optimize: tuple[tuple[str, Importance], ...] = ()
    cut_level: float | None = None
    thresholds: dict[str, ThresholdOverride] = field(default_factory=dict)

    def __post_init__(self):
        if not self.optimize:
            raise QueryValidationError("optimize", "at least one dimension must be optimized")
        ids = [dim for dim, _ in self.optimize]
        if len(set(ids)) != len(ids):
            raise QueryValidationError("optimize", f"repeated dimension in optimize: {ids}")
        for dim, level in self.optimize:
            if not isinstance(level, Importance):
                raise QueryValidationError(
                    f"optimize.{dim}", f"importance must be an Importance level (got {level!r})"
                )
        if self.cut_level is not None and not (0.5 < self.cut_level <= 1.0):
            raise QueryValidationError(
                "electre.cut_level", f"cut_level must lie in (0.5, 1] (got {self.cut_level})"
            )
        extra = self.thresholds.keys() - set(ids)
        if extra:
            raise QueryValidationError(
                f"electre.criteria.{sorted(extra)[0]}",
                "threshold override for a dimension that is not optimized",
            )

    @property
    def dimension_ids(self) -> tuple[str, ...]:
        return tuple(dim for dim, _ in self.optimize)


@dataclass(frozen=True)
class SelectionResult:
    """Staged query output: counts, surviving services per stage, wall-clock
    timings in milliseconds, and the fully resolved settings."""

    filtered_count: int
    skyline_count: int
    final_count: int
    skyline: tuple[CloudService, ...]
    final: tuple[CloudService, ...]
    timings_ms: dict[str, float]
    settings_used: ElectreSettings


def _parse_number(value: Any, field_path: str, allow_null: bool = False) -> float | None:
    if value is None and allow_null:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise QueryValidationError(field_path, f"expected a number (got {value!r})")
    return float(value)


def query_from_dict(obj: Any) -> Query:
    """Parse the query JSON shape:

    {"fixed": {attr: value, ...},
     "optimize": [{"dim": str, "importance": str}, ...],
     "electre": {"cut_level": number?,
                 "criteria": {dim: {"q": num?, "p": num?, "v": num|null?}, ...}?}}

    Only "optimize" is required. A null "v" disables the veto for that
    criterion. Violations raise QueryValidationError carrying the field path.
    """
    if not isinstance(obj, dict):
        raise QueryValidationError("", "query must be a JSON object")
    unknown = obj.keys() - {"fixed", "optimize", "electre"}
    if unknown:
        raise QueryValidationError(sorted(unknown)[0], "unknown query field")

    fixed_raw = obj.get("fixed", {})
    if not isinstance(fixed_raw, dict):
        raise QueryValidationError("fixed", "must be an object of attribute: value")
    fixed = {}
    for attr, value in fixed_raw.items():
        if not isinstance(value, str):
            raise QueryValidationError(f"fixed.{attr}", "required value must be a string")
        fixed[str(attr)] = value

    optimize_raw = obj.get("optimize")
    if not isinstance(optimize_raw, list) or not optimize_raw:
        raise QueryValidationError("optimize", "must be a non-empty array")
    optimize = []
    for i, entry in enumerate(optimize_raw):
        path = f"optimize[{i}]"
        if not isinstance(entry, dict) or "dim" not in entry:
            raise QueryValidationError(path, 'each entry must be {"dim": ..., "importance": ...}')
        dim = entry["dim"]
        if not isinstance(dim, str) or not dim:
            raise QueryValidationError(f"{path}.dim", "dimension id must be a non-empty string")
        try:
            level = Importance.parse(entry.get("importance", Importance.MODERATELY_IMPORTANT))
        except ValueError as exc:
            raise QueryValidationError(f"{path}.importance", str(exc)) from None
        unknown = entry.keys() - {"dim", "importance"}
        if unknown:
            raise QueryValidationError(f"{path}.{sorted(unknown)[0]}", "unknown field")
        optimize.append((dim, level))

    cut_level = None
    thresholds: dict[str, ThresholdOverride] = {}
    electre_raw = obj.get("electre")
    if electre_raw is not None:
        if not isinstance(electre_raw, dict):
            raise QueryValidationError("electre", "must be an object")
        unknown = electre_raw.keys() - {"cut_level", "criteria"}
        if unknown:
            raise QueryValidationError(f"electre.{sorted(unknown)[0]}", "unknown field")
        if "cut_level" in electre_raw:
            cut_level = _parse_number(electre_raw["cut_level"], "electre.cut_level")
        criteria_raw = electre_raw.get("criteria", {})
        if not isinstance(criteria_raw, dict):
            raise QueryValidationError("electre.criteria", "must be an object keyed by dimension")
        for dim, spec in criteria_raw.items():
            path = f"electre.criteria.{dim}"
            if not isinstance(spec, dict):
                raise QueryValidationError(path, 'must be {"q": ..., "p": ..., "v": ...}')
            unknown = spec.keys() - {"q", "p", "v"}
            if unknown:
                raise QueryValidationError(f"{path}.{sorted(unknown)[0]}", "unknown field")
            q = _parse_number(spec["q"], f"{path}.q") if "q" in spec else None
            p = _parse_number(spec["p"], f"{path}.p") if "p" in spec else None
            v = _parse_number(spec["v"], f"{path}.v", allow_null=True) if "v" in spec else None
            if "v" in spec and spec["v"] is None:
                v = math.inf  # a JSON null for v means "no veto"
            for name, value in (("q", q), ("p", p)):
                if value is not None and (not math.isfinite(value) or value < 0):
                    raise QueryValidationError(f"{path}.{name}", "must be a finite number >= 0")
            if v is not None and (math.isnan(v) or v <= 0):
                raise QueryValidationError(f"{path}.v", "must be > 0, or null for no veto")
            thresholds[str(dim)] = ThresholdOverride(q_ind=q, p_pref=p, v_veto=v)

    return Query(fixed=fixed, optimize=tuple(optimize), cut_level=cut_level, thresholds=thresholds)


def query_to_dict(query: Query) -> dict:
    """Inverse of query_from_dict, canonical field spelling."""
    obj: dict[str, Any] = {
        "fixed": dict(query.fixed),
        "optimize": [
            {"dim": dim, "importance": level.label} for dim, level in query.optimize
        ],
    }
    electre: dict[str, Any] = {}
    if query.cut_level is not None:
        electre["cut_level"] = query.cut_level
    if query.thresholds:
        criteria = {}
        for dim, ov in query.thresholds.items():
            spec = {}
            if ov.q_ind is not None:
                spec["q"] = ov.q_ind
            if ov.p_pref is not None:
                spec["p"] = ov.p_pref
            if ov.v_veto is not None:
                spec["v"] = None if math.isinf(ov.v_veto) else ov.v_veto
            criteria[dim] = spec
        electre["criteria"] = criteria
    if electre:
        obj["electre"] = electre
    return obj


def load_query(path: str | Path) -> Query:
    """Read a query JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    return query_from_dict(obj)


def resolve_settings(
    query: Query,
    skyline: Sequence[CloudService],
    defaults: Mapping[str, ThresholdOverride] | None = None,
    default_cut_level: float | None = None,
    reinforced_veto: bool = False,
) -> ElectreSettings:
    """Build the effective settings for one query.

    Weights come from the importance levels. Thresholds resolve per field:
    query override, then `defaults` (e.g. a catalog-side config), then the
    span-based default over the skyline (the outranking input set).
    """
    defaults = defaults or {}
    criteria = []
    for dim, level in query.optimize:
        span_q, span_p, span_v = span_thresholds([svc.dims[dim] for svc in skyline])
        base = defaults.get(dim, ThresholdOverride())
        override = query.thresholds.get(dim, ThresholdOverride())
        q = override.q_ind if override.q_ind is not None else (
            base.q_ind if base.q_ind is not None else span_q)
        p = override.p_pref if override.p_pref is not None else (
            base.p_pref if base.p_pref is not None else span_p)
        v = override.v_veto if override.v_veto is not None else (
            base.v_veto if base.v_veto is not None else span_v)
        try:
            criteria.append(
                CriterionConfig(
                    dimension_id=dim,
                    weight=importance_to_weight(level),
                    q_ind=q,
                    p_pref=p,
                    v_veto=v,
                )
            )
        except ValueError as exc:
            raise QueryValidationError(f"electre.criteria.{dim}", str(exc)) from None
    cut = query.cut_level
    if cut is None:
        cut = default_cut_level if default_cut_level is not None else DEFAULT_CUT_LEVEL
    try:
        return ElectreSettings(
            criteria=tuple(criteria), cut_level=cut, reinforced_veto=reinforced_veto
        )
    except ValueError as exc:
        raise QueryValidationError("electre", str(exc)) from None


def run_query(
    catalog: Catalog,
    query: Query,
    defaults: Mapping[str, ThresholdOverride] | None = None,
    default_cut_level: float | None = None,
    reinforced_veto: bool = False,
) -> SelectionResult:
    """Filter, skyline, refine; deterministic for a given catalog and query.

    An empty filtered set is not an error: skyline and final are then empty
    too. Unknown fixed attributes raise UnknownAttributeError; unknown
    optimize dimensions raise MissingDimensionError.
    """
    t0 = time.perf_counter()
    filtered = filter_fixed(catalog, query.fixed)
    t1 = time.perf_counter()
    view = DimensionView.from_schema(catalog, query.dimension_ids)
    skyline = compute_skyline_bnl(filtered, view)
    t2 = time.perf_counter()
    settings = resolve_settings(
        query, skyline,
        defaults=defaults,
        default_cut_level=default_cut_level,
        reinforced_veto=reinforced_veto,
    )
    final = compute_solution(skyline, settings, view) if skyline else []
    t3 = time.perf_counter()
    return SelectionResult(
        filtered_count=len(filtered),
        skyline_count=len(skyline),
        final_count=len(final),
        skyline=tuple(skyline),
        final=tuple(final),
        timings_ms={
            "filter": (t1 - t0) * 1000.0,
            "skyline": (t2 - t1) * 1000.0,
            "electre": (t3 - t2) * 1000.0,
            "total": (t3 - t0) * 1000.0,
        },
        settings_used=settings,
    )


def settings_to_dict(settings: ElectreSettings) -> dict:
    """JSON-ready settings; an infinite veto serializes as null."""
    return {
        "cut_level": settings.cut_level,
        "reinforced_veto": settings.reinforced_veto,
        "criteria": [
            {
                "dim": c.dimension_id,
                "weight": c.weight,
                "q": c.q_ind,
                "p": c.p_pref,
                "v": None if math.isinf(c.v_veto) else c.v_veto,
            }
            for c in settings.criteria
        ],
    }


def result_to_dict(result: SelectionResult, catalog: Catalog | None = None) -> dict:
    """JSON-ready staged result with services inlined."""
    return {
        "filtered_count": result.filtered_count,
        "skyline_count": result.skyline_count,
        "final_count": result.final_count,
        "skyline": [service_to_dict(svc, catalog) for svc in result.skyline],
        "final": [service_to_dict(svc, catalog) for svc in result.final],
        "timings_ms": dict(result.timings_ms),
        "settings_used": settings_to_dict(result.settings_used),
    }


