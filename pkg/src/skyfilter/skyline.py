"""Pareto-dominance comparison and skyline computation.

The skyline of a set of services, under a view of (dimension, sense)
pairs, is the subset not dominated by any other member: no other service
is at least as good everywhere and strictly better somewhere.

`compute_skyline_bnl` is the production block-nested-loops algorithm;
`compute_skyline_naive` is a deliberately literal O(n^2) transcription of
the definition, kept as an independent test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .catalog import Catalog, CloudService, DimensionSpec, Sense
from .errors import MissingDimensionError

__all__ = [
    "Dominance",
    "DimensionView",
    "compare",
    "compute_skyline_bnl",
    "compute_skyline_naive",
]


class Dominance(Enum):
    DOMINATES = "dominates"
    DOMINATED_BY = "dominated_by"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class DimensionView:
    """Ordered selection of (dimension id, sense) pairs for one query."""

    pairs: tuple[tuple[str, Sense], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("view must select at least one dimension")
        ids = [dim for dim, _ in self.pairs]
        if len(set(ids)) != len(ids):
            raise ValueError(f"view repeats a dimension: {ids}")

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(dim for dim, _ in self.pairs)

    @property
    def senses(self) -> tuple[Sense, ...]:
        return tuple(sense for _, sense in self.pairs)

    @classmethod
    def from_schema(
        cls, schema: Sequence[DimensionSpec] | Catalog, ids: Iterable[str] | None = None
    ) -> "DimensionView":
        """Build a view from a schema (or catalog), taking senses from the
        dimension specs. `ids` defaults to the full schema order."""
        dims = schema.dimensions if isinstance(schema, Catalog) else tuple(schema)
        by_id = {spec.id: spec for spec in dims}
        if ids is None:
            ids = [spec.id for spec in dims]
        pairs = []
        for dim_id in ids:
            if dim_id not in by_id:
                raise MissingDimensionError(f"dimension {dim_id!r} not in catalog schema")
            pairs.append((dim_id, by_id[dim_id].sense))
        return cls(pairs=tuple(pairs))


def compare(p: CloudService, q: CloudService, view: DimensionView) -> Dominance:
    """Pairwise dominance of p against q over the view's dimensions."""
    better = worse = 0
    for dim_id, sense in view.pairs:
        a = _dim_value(p, dim_id)
        b = _dim_value(q, dim_id)
        if a == b:
            continue
        a_better = a > b if sense is Sense.MAX else a < b
        if a_better:
            better += 1
        else:
            worse += 1
    if better and not worse:
        return Dominance.DOMINATES
    if worse and not better:
        return Dominance.DOMINATED_BY
    if not better and not worse:
        return Dominance.EQUAL
    return Dominance.INCOMPARABLE


def _dim_value(svc: CloudService, dim_id: str) -> float:
    try:
        return svc.dims[dim_id]
    except KeyError:
        raise MissingDimensionError(
            f"service {svc.id!r} lacks dimension {dim_id!r}"
        ) from None


def view_matrix(services: Sequence[CloudService], view: DimensionView) -> np.ndarray:
    """(n, d) float matrix of the view's values, sign-flipped on maximize
    dimensions so that smaller is uniformly better."""
    flip = np.array([-1.0 if s is Sense.MAX else 1.0 for s in view.senses])
    rows = np.empty((len(services), len(view.pairs)), dtype=np.float64)
    ids = view.ids
    for i, svc in enumerate(services):
        for j, dim_id in enumerate(ids):
            rows[i, j] = _dim_value(svc, dim_id)
    return rows * flip


def compute_skyline_bnl(
    services: Sequence[CloudService], view: DimensionView
) -> list[CloudService]:
    """Skyline via block-nested loops.

    A window of mutually non-dominated tuples is kept in memory. Each
    incoming tuple is dropped if some window tuple dominates it; otherwise
    it evicts every window tuple it dominates and is appended. Exact
    duplicates dominate nothing and are all retained. Output order is the
    admission order of the surviving tuples.
    """
    services = list(services)
    if not services:
        return []
    x = view_matrix(services, view)
    n = len(services)
    window = np.empty_like(x)
    window_idx: list[int] = []
    size = 0
    for i in range(n):
        row = x[i]
        if size:
            w = window[:size]
            # window tuple dominates the incoming row?
            if bool(np.any((w <= row).all(axis=1) & (w < row).any(axis=1))):
                continue
            # incoming row dominates window tuples?
            beaten = (w >= row).all(axis=1) & (w > row).any(axis=1)
            if bool(beaten.any()):
                keep = ~beaten
                kept = int(keep.sum())
                window[:kept] = w[keep]
                window_idx = [idx for idx, k in zip(window_idx, keep) if k]
                size = kept
        window[size] = row
        window_idx.append(i)
        size += 1
    return [services[i] for i in window_idx]


def compute_skyline_naive(
    services: Sequence[CloudService], view: DimensionView
) -> list[CloudService]:
    """Skyline by the definition: keep s iff no other service dominates s.

    Materializes the full pairwise dominance relation, so O(n^2 d) time and
    memory; intended as a test oracle, not for large inputs.
    """
    services = list(services)
    if not services:
        return []
    x = view_matrix(services, view)
    le_all = (x[:, None, :] <= x[None, :, :]).all(axis=2)
    lt_any = (x[:, None, :] < x[None, :, :]).any(axis=2)
    dominates = le_all & lt_any  # [t, s]: t dominates s
    keep = ~dominates.any(axis=0)
    return [svc for svc, k in zip(services, keep) if k]
