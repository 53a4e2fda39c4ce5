"""ELECTRE IS outranking over a skyline set.

Each criterion carries a weight and indifference / preference / veto
thresholds in the dimension's native units. "p outranks q" holds when the
weighted share of criteria on which p is not meaningfully worse than q
reaches the cut level, and no single criterion opposes p by at least its
veto threshold. Every alternative outranked by any other member of the
input set is eliminated; eliminated alternatives keep their eliminating
power, so the result does not depend on processing order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .catalog import CloudService, Sense
from .errors import MissingDimensionError, ZeroWeightError
from .skyline import DimensionView, view_matrix

__all__ = [
    "CriterionConfig",
    "ElectreSettings",
    "DEFAULT_CUT_LEVEL",
    "span_thresholds",
    "default_settings",
    "partial_concordance",
    "global_concordance",
    "veto_ok",
    "compute_solution",
]

# With the span-fraction thresholds below and equal weights, the cut level
# controls how many discordant criteria an eliminator may have. 0.91 keeps
# the refinement meaningful on large high-dimensional inputs (roughly the
# "one small concession" regime: values at or below 0.90 allow a fully
# discordant criterion and collapse the final set to almost nothing).
DEFAULT_CUT_LEVEL = 0.91

# Scale-free threshold defaults, as fractions of a criterion's observed
# value span over the input set.
INDIFFERENCE_SPAN_FRACTION = 0.01
PREFERENCE_SPAN_FRACTION = 0.05
VETO_SPAN_FRACTION = 0.60


@dataclass(frozen=True)
class CriterionConfig:
    """Weight and thresholds for one criterion. `v_veto` may be infinity,
    meaning the criterion never vetoes."""

    dimension_id: str
    weight: float
    q_ind: float
    p_pref: float
    v_veto: float

    def __post_init__(self):
        if not (math.isfinite(self.weight) and self.weight >= 0):
            raise ValueError(f"criterion {self.dimension_id!r}: weight must be finite and >= 0")
        if not (0 <= self.q_ind <= self.p_pref):
            raise ValueError(
                f"criterion {self.dimension_id!r}: need 0 <= q_ind <= p_pref "
                f"(got q={self.q_ind}, p={self.p_pref})"
            )
        if not (self.v_veto > self.p_pref):
            raise ValueError(
                f"criterion {self.dimension_id!r}: need v_veto > p_pref "
                f"(got p={self.p_pref}, v={self.v_veto})"
            )


@dataclass(frozen=True)
class ElectreSettings:
    """Criteria plus the global concordance cut level.

    `reinforced_veto` enables the cut-level-dependent veto tightening of
    classical ELECTRE IS; the default is the plain rule "disadvantage >=
    v_veto raises a veto".
    """

    criteria: tuple[CriterionConfig, ...]
    cut_level: float = DEFAULT_CUT_LEVEL
    reinforced_veto: bool = False

    def __post_init__(self):
        if not self.criteria:
            raise ValueError("settings must configure at least one criterion")
        ids = [c.dimension_id for c in self.criteria]
        if len(set(ids)) != len(ids):
            raise ValueError(f"settings repeat a criterion: {ids}")
        if not (0.5 < self.cut_level <= 1.0):
            raise ValueError(f"cut_level must lie in (0.5, 1] (got {self.cut_level})")


def span_thresholds(values: Sequence[float]) -> tuple[float, float, float]:
    """Default (q_ind, p_pref, v_veto) from the observed value span.

    A zero span (all values equal, or empty input) disables the veto and
    makes the criterion a pure indifference test.
    """
    if len(values) == 0:
        return 0.0, 0.0, math.inf
    span = float(max(values) - min(values))
    if span == 0.0:
        return 0.0, 0.0, math.inf
    return (
        INDIFFERENCE_SPAN_FRACTION * span,
        PREFERENCE_SPAN_FRACTION * span,
        VETO_SPAN_FRACTION * span,
    )


def default_settings(
    services: Sequence[CloudService],
    view: DimensionView,
    weights: Sequence[float] | None = None,
    cut_level: float = DEFAULT_CUT_LEVEL,
) -> ElectreSettings:
    """Span-based default settings over `services`, one criterion per view
    dimension. `weights` follows view order and defaults to all ones."""
    if weights is None:
        weights = [1.0] * len(view.pairs)
    if len(weights) != len(view.pairs):
        raise ValueError("weights must match the view's dimensions")
    criteria = []
    for (dim_id, _), weight in zip(view.pairs, weights):
        values = [svc.dims[dim_id] for svc in services]
        q, p, v = span_thresholds(values)
        criteria.append(CriterionConfig(dim_id, float(weight), q, p, v))
    return ElectreSettings(criteria=tuple(criteria), cut_level=cut_level)


def _disadvantage(a: float, b: float, sense: Sense) -> float:
    return b - a if sense is Sense.MAX else a - b


def partial_concordance(a: float, b: float, sense: Sense, cfg: CriterionConfig) -> float:
    """Per-criterion support in [0, 1] for "a is at least as good as b".

    Full support while a's disadvantage stays within q_ind, none once it
    reaches p_pref, linear in between. With p_pref == q_ind the function
    degenerates to a step at q_ind.
    """
    delta = _disadvantage(a, b, sense)
    if delta <= cfg.q_ind:
        return 1.0
    if delta >= cfg.p_pref:
        return 0.0
    return (cfg.p_pref - delta) / (cfg.p_pref - cfg.q_ind)


def _aligned_criteria(
    settings: ElectreSettings, view: DimensionView
) -> list[tuple[CriterionConfig, Sense]]:
    by_id = {c.dimension_id: c for c in settings.criteria}
    extra = by_id.keys() - set(view.ids)
    if extra:
        raise ValueError(f"criterion for dimension {sorted(extra)[0]!r} not in view")
    aligned = []
    for dim_id, sense in view.pairs:
        if dim_id not in by_id:
            raise MissingDimensionError(f"no criterion configured for dimension {dim_id!r}")
        aligned.append((by_id[dim_id], sense))
    return aligned


def _total_weight(criteria: Sequence[CriterionConfig]) -> float:
    total = 0.0
    for cfg in criteria:
        total += cfg.weight
    if total == 0.0:
        raise ZeroWeightError("all criterion weights are zero")
    return total


def global_concordance(
    p: CloudService, q: CloudService, settings: ElectreSettings, view: DimensionView
) -> float:
    """Weighted mean of the partial concordances of p against q."""
    aligned = _aligned_criteria(settings, view)
    total = _total_weight([cfg for cfg, _ in aligned])
    num = 0.0
    for cfg, sense in aligned:
        num += cfg.weight * partial_concordance(
            p.dims[cfg.dimension_id], q.dims[cfg.dimension_id], sense, cfg
        )
    return num / total


def veto_ok(
    p: CloudService, q: CloudService, settings: ElectreSettings, view: DimensionView
) -> bool:
    """True iff no criterion vetoes "p outranks q".

    Plain rule: a veto is raised when p's disadvantage reaches v_veto. In
    reinforced mode the effective threshold drops to v_veto - q_ind * eta,
    where eta in [0, 1] grows as the global concordance falls toward the
    cut level (eta is clipped; it is 0 whenever the formula leaves [0, 1]
    territory, which only happens outside the regime where the assertion
    can pass anyway).
    """
    aligned = _aligned_criteria(settings, view)
    if settings.reinforced_veto:
        total = _total_weight([cfg for cfg, _ in aligned])
        conc = global_concordance(p, q, settings, view)
    for cfg, sense in aligned:
        if math.isinf(cfg.v_veto):
            continue
        delta = _disadvantage(p.dims[cfg.dimension_id], q.dims[cfg.dimension_id], sense)
        if settings.reinforced_veto:
            w_norm = cfg.weight / total
            denom = 1.0 - settings.cut_level - w_norm
            if denom <= 0.0:
                eta = 0.0
            else:
                eta = min(1.0, max(0.0, (1.0 - conc - w_norm) / denom))
            threshold = cfg.v_veto - cfg.q_ind * eta
        else:
            threshold = cfg.v_veto
        if delta >= threshold:
            return False
    return True


def compute_solution(
    skyline: Sequence[CloudService], settings: ElectreSettings, view: DimensionView
) -> list[CloudService]:
    """Eliminate every alternative outranked by another member of `skyline`.

    p outranks q iff global_concordance(p, q) >= cut_level and veto_ok(p, q).
    All assertions are evaluated against the original input, so the result
    is independent of input order; mutually outranking pairs (e.g. exact
    duplicates) eliminate each other, possibly leaving an empty result.
    Survivors keep their input order.
    """
    services = list(skyline)
    n = len(services)
    if n == 0:
        return []
    aligned = _aligned_criteria(settings, view)
    total = _total_weight([cfg for cfg, _ in aligned])
    x = view_matrix(services, view)  # sign-normalized: disadvantage = x[p] - x[q]
    cut = settings.cut_level
    eliminated = np.zeros(n, dtype=bool)
    # Block the p-axis so pairwise temporaries stay around ~30 MB.
    block = max(1, 4_000_000 // n)
    for start in range(0, n, block):
        stop = min(start + block, n)
        conc = np.zeros((stop - start, n))
        vetoed = np.zeros((stop - start, n), dtype=bool)
        for j, (cfg, _) in enumerate(aligned):
            delta = np.subtract.outer(x[start:stop, j], x[:, j])
            if cfg.p_pref == cfg.q_ind:
                pc = np.where(delta <= cfg.q_ind, 1.0, 0.0)
            else:
                pc = np.clip((cfg.p_pref - delta) / (cfg.p_pref - cfg.q_ind), 0.0, 1.0)
            conc += cfg.weight * pc
            if not settings.reinforced_veto and not math.isinf(cfg.v_veto):
                vetoed |= delta >= cfg.v_veto
        conc /= total
        if settings.reinforced_veto:
            for j, (cfg, _) in enumerate(aligned):
                if math.isinf(cfg.v_veto):
                    continue
                delta = np.subtract.outer(x[start:stop, j], x[:, j])
                w_norm = cfg.weight / total
                denom = 1.0 - cut - w_norm
                if denom <= 0.0:
                    threshold = cfg.v_veto
                else:
                    eta = np.clip((1.0 - conc - w_norm) / denom, 0.0, 1.0)
                    threshold = cfg.v_veto - cfg.q_ind * eta
                vetoed |= delta >= threshold
        outranks = (conc >= cut) & ~vetoed
        outranks[np.arange(stop - start), np.arange(start, stop)] = False
        eliminated |= outranks.any(axis=0)
    return [svc for svc, out in zip(services, eliminated) if not out]
