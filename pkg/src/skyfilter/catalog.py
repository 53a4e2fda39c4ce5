"""Cloud-service catalog: data model, JSONL/CSV persistence, synthetic
generation, and fixed-requirement filtering.

A catalog couples a schema (ordered numeric dimensions plus categorical
fixed attributes) with a list of service records. Catalogs are immutable
after construction and safe to share between threads.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DuplicateIdError,
    ParseError,
    SchemaError,
    UnknownAttributeError,
)

__all__ = [
    "Sense",
    "DimensionSpec",
    "CloudService",
    "Catalog",
    "DEFAULT_DIMENSIONS",
    "FIXED_ATTRIBUTES",
    "FIXED_VALUE_POOLS",
    "load_catalog",
    "save_catalog",
    "load_schema",
    "generate_synthetic",
    "filter_fixed",
]


class Sense(str, Enum):
    """Direction in which a numeric dimension improves."""

    MIN = "minimize"
    MAX = "maximize"


@dataclass(frozen=True)
class DimensionSpec:
    """One numeric dimension: identity, optimization sense, and the value
    range used by the synthetic generator."""

    id: str
    sense: Sense
    range_lo: float
    range_hi: float
    description: str = ""

    def __post_init__(self):
        if not self.id:
            raise SchemaError("dimension id must be non-empty")
        if not (self.range_lo < self.range_hi):
            raise SchemaError(
                f"dimension {self.id!r}: range_lo must be < range_hi "
                f"(got {self.range_lo} .. {self.range_hi})"
            )


# Categorical attributes every service record carries.
FIXED_ATTRIBUTES: tuple[str, ...] = (
    "provider",
    "service_model",
    "os_series",
    "os_distribution",
    "cpu_manufacturer",
    "cpu_range",
    "industry",
    "category",
)

# Value pools the synthetic generator draws fixed attributes from. The
# loader accepts any string; this vocabulary only shapes generated data.
FIXED_VALUE_POOLS: dict[str, tuple[str, ...]] = {
    "provider": ("Microsoft", "IBM", "Amazon", "Google", "Salesforce", "Oracle"),
    "service_model": ("IaaS", "PaaS", "SaaS"),
    "os_series": ("Windows", "Mac", "Unix", "Linux"),
    "os_distribution": (
        "Windows XP",
        "Windows Vista",
        "Windows 7",
        "Linux",
        "Mac OS X",
        "Solaris",
    ),
    "cpu_manufacturer": ("Intel", "IBM", "AMD", "ARM"),
    "cpu_range": ("Pentium", "Intel 64", "Xeon", "Opteron"),
    "industry": ("General", "Education", "Healthcare", "Finance", "Government"),
    "category": ("General", "CRM", "E-procurement", "Analytics", "Storage"),
}

# Built-in ten-dimension schema. Ranges drive the synthetic generator;
# senses drive dominance and concordance. Values are treated as unitless.
DEFAULT_DIMENSIONS: tuple[DimensionSpec, ...] = (
    DimensionSpec("storage_space", Sense.MAX, 0.14, 4000.0, "provisioned storage volume"),
    DimensionSpec("bandwidth", Sense.MAX, 0.0, 10.0, "network throughput"),
    DimensionSpec("latency", Sense.MIN, 0.0, 10000.0, "network round-trip delay"),
    DimensionSpec("portability", Sense.MAX, 0.03, 400.0, "ratio of supported to required operating systems"),
    DimensionSpec("risk_certifications", Sense.MAX, 0.0, 400.0, "count of provider risk-management certifications"),
    DimensionSpec("data_loss", Sense.MIN, 0.0, 9000.0, "count of recorded data-loss incidents"),
    DimensionSpec("acquisition_cost", Sense.MIN, 1.0, 20000.0, "one-off migration cost"),
    DimensionSpec("ongoing_cost", Sense.MIN, 0.1, 2000.0, "recurring usage cost"),
    DimensionSpec("response_time", Sense.MIN, 0.0, 40.0, "mean response time relative to the contracted maximum"),
    DimensionSpec("availability", Sense.MIN, 0.0, 1000.0, "downtime fraction of total use time"),
)


@dataclass(frozen=True)
class CloudService:
    """One catalog record: categorical fixed attributes plus one finite
    numeric value per schema dimension."""

    id: str
    name: str
    fixed: dict[str, str]
    dims: dict[str, float]


@dataclass(frozen=True)
class Catalog:
    """Immutable collection of services conforming to a shared schema."""

    dimensions: tuple[DimensionSpec, ...]
    fixed_attributes: tuple[str, ...] = FIXED_ATTRIBUTES
    services: tuple[CloudService, ...] = ()

    def dimension(self, dim_id: str) -> DimensionSpec:
        for spec in self.dimensions:
            if spec.id == dim_id:
                return spec
        raise SchemaError(f"dimension {dim_id!r} not in catalog schema")

    @property
    def dimension_ids(self) -> tuple[str, ...]:
        return tuple(spec.id for spec in self.dimensions)

    def __len__(self) -> int:
        return len(self.services)


def validate_catalog(catalog: Catalog) -> None:
    """Check every service against the catalog schema.

    Raises SchemaError on missing/extra/non-finite fields and
    DuplicateIdError on repeated ids.
    """
    dim_ids = set(catalog.dimension_ids)
    attr_names = set(catalog.fixed_attributes)
    seen: set[str] = set()
    for svc in catalog.services:
        if svc.id in seen:
            raise DuplicateIdError(f"duplicate service id {svc.id!r}")
        seen.add(svc.id)
        _validate_service(svc, dim_ids, attr_names)


def _validate_service(svc: CloudService, dim_ids: set[str], attr_names: set[str]) -> None:
    if not isinstance(svc.id, str) or not svc.id:
        raise SchemaError(f"service id must be a non-empty string (got {svc.id!r})")
    missing = attr_names - svc.fixed.keys()
    if missing:
        raise SchemaError(f"service {svc.id!r}: missing fixed attribute {sorted(missing)[0]!r}")
    extra = svc.fixed.keys() - attr_names
    if extra:
        raise SchemaError(f"service {svc.id!r}: unknown fixed attribute {sorted(extra)[0]!r}")
    for attr, value in svc.fixed.items():
        if not isinstance(value, str):
            raise SchemaError(f"service {svc.id!r}: fixed attribute {attr!r} must be a string")
    missing = dim_ids - svc.dims.keys()
    if missing:
        raise SchemaError(f"service {svc.id!r}: missing dimension {sorted(missing)[0]!r}")
    extra = svc.dims.keys() - dim_ids
    if extra:
        raise SchemaError(f"service {svc.id!r}: unknown dimension {sorted(extra)[0]!r}")
    for dim, value in svc.dims.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError(f"service {svc.id!r}: dimension {dim!r} must be a number")
        if not math.isfinite(value):
            raise SchemaError(f"service {svc.id!r}: dimension {dim!r} must be finite (got {value})")


def _infer_format(path: Path, fmt: str | None) -> str:
    if fmt is None:
        fmt = path.suffix.lstrip(".").lower()
    if fmt not in ("jsonl", "csv"):
        raise ValueError(f"unsupported catalog format {fmt!r} (expected 'jsonl' or 'csv')")
    return fmt


def load_catalog(
    path: str | Path,
    fmt: str | None = None,
    schema: Sequence[DimensionSpec] = DEFAULT_DIMENSIONS,
) -> Catalog:
    """Load and validate a catalog from a JSONL or CSV file.

    `fmt` defaults to the file extension. Records must carry exactly the
    schema's dimensions; any violation raises SchemaError, malformed rows
    raise ParseError with their line number, repeated ids DuplicateIdError.
    """
    path = Path(path)
    fmt = _infer_format(path, fmt)
    dimensions = tuple(schema)
    if fmt == "jsonl":
        services = _read_jsonl(path)
    else:
        services = _read_csv(path, dimensions)
    catalog = Catalog(dimensions=dimensions, services=tuple(services))
    validate_catalog(catalog)
    return catalog


def save_catalog(catalog: Catalog, path: str | Path, fmt: str | None = None) -> None:
    """Write a catalog to JSONL or CSV, preserving numeric values exactly
    (shortest decimal text that round-trips)."""
    path = Path(path)
    fmt = _infer_format(path, fmt)
    if fmt == "jsonl":
        with open(path, "w", encoding="utf-8") as fh:
            for svc in catalog.services:
                fh.write(json.dumps(service_to_dict(svc, catalog), ensure_ascii=False))
                fh.write("\n")
    else:
        header = ["id", "name", *catalog.fixed_attributes, *catalog.dimension_ids]
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for svc in catalog.services:
                row = [svc.id, svc.name]
                row += [svc.fixed[a] for a in catalog.fixed_attributes]
                row += [repr(float(svc.dims[d])) for d in catalog.dimension_ids]
                writer.writerow(row)


def service_to_dict(svc: CloudService, catalog: Catalog | None = None) -> dict:
    """JSON-ready dict for one service, with keys in schema order when a
    catalog is given."""
    if catalog is None:
        fixed = dict(svc.fixed)
        dims = {k: float(v) for k, v in svc.dims.items()}
    else:
        fixed = {a: svc.fixed[a] for a in catalog.fixed_attributes}
        dims = {d: float(svc.dims[d]) for d in catalog.dimension_ids}
    return {"id": svc.id, "name": svc.name, "fixed": fixed, "dims": dims}


def service_from_dict(obj: dict) -> CloudService:
    """Inverse of service_to_dict; structural errors raise SchemaError."""
    if not isinstance(obj, dict):
        raise SchemaError("service record must be a JSON object")
    for key in ("id", "name", "fixed", "dims"):
        if key not in obj:
            raise SchemaError(f"service record missing field {key!r}")
    if not isinstance(obj["fixed"], dict) or not isinstance(obj["dims"], dict):
        raise SchemaError("service record fields 'fixed' and 'dims' must be objects")
    dims: dict[str, float] = {}
    for dim, value in obj["dims"].items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError(f"dimension {dim!r}: value must be a number (got {value!r})")
        dims[dim] = float(value)
    return CloudService(
        id=obj["id"],
        name=obj["name"],
        fixed={str(k): v for k, v in obj["fixed"].items()},
        dims=dims,
    )


def _read_jsonl(path: Path) -> list[CloudService]:
    services = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", line=lineno) from exc
            services.append(service_from_dict(obj))
    return services


def _read_csv(path: Path, dimensions: tuple[DimensionSpec, ...]) -> list[CloudService]:
    expected = ["id", "name", *FIXED_ATTRIBUTES, *(d.id for d in dimensions)]
    services = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("missing header row", line=1) from None
        if header != expected:
            raise ParseError(
                f"unexpected header {header!r}; expected {expected!r}", line=1
            )
        n_fixed = len(FIXED_ATTRIBUTES)
        for row in reader:
            lineno = reader.line_num
            if not row:
                continue
            if len(row) != len(expected):
                raise ParseError(
                    f"expected {len(expected)} cells, got {len(row)}", line=lineno
                )
            fixed = dict(zip(FIXED_ATTRIBUTES, row[2 : 2 + n_fixed]))
            dims = {}
            for spec, cell in zip(dimensions, row[2 + n_fixed :]):
                try:
                    dims[spec.id] = float(cell)
                except ValueError:
                    raise ParseError(
                        f"dimension {spec.id!r}: not a number: {cell!r}", line=lineno
                    ) from None
            services.append(CloudService(id=row[0], name=row[1], fixed=fixed, dims=dims))
    return services


def load_schema(path: str | Path) -> tuple[DimensionSpec, ...]:
    """Load a dimension schema from a JSON file.

    Expected shape: {"dimensions": [{"id": str, "sense": "minimize"|"maximize",
    "lo": number, "hi": number, "description"?: str}, ...]}.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(obj, dict) or not isinstance(obj.get("dimensions"), list):
        raise SchemaError("schema file must be an object with a 'dimensions' list")
    specs = []
    for i, entry in enumerate(obj["dimensions"]):
        if not isinstance(entry, dict):
            raise SchemaError(f"dimensions[{i}] must be an object")
        try:
            sense = Sense(entry.get("sense"))
        except ValueError:
            raise SchemaError(
                f"dimensions[{i}]: sense must be 'minimize' or 'maximize'"
            ) from None
        for key in ("id", "lo", "hi"):
            if key not in entry:
                raise SchemaError(f"dimensions[{i}] missing field {key!r}")
        specs.append(
            DimensionSpec(
                id=str(entry["id"]),
                sense=sense,
                range_lo=float(entry["lo"]),
                range_hi=float(entry["hi"]),
                description=str(entry.get("description", "")),
            )
        )
    ids = [s.id for s in specs]
    if len(set(ids)) != len(ids):
        raise SchemaError("schema contains repeated dimension ids")
    if not specs:
        raise SchemaError("schema must declare at least one dimension")
    return tuple(specs)


def generate_synthetic(
    n: int,
    schema: Sequence[DimensionSpec] = DEFAULT_DIMENSIONS,
    seed: int = 0,
) -> Catalog:
    """Generate `n` services with dimension values drawn independently and
    uniformly within each dimension's range, and fixed attributes drawn
    uniformly from the built-in value pools. Deterministic per seed."""
    if n < 1:
        raise ValueError(f"n must be >= 1 (got {n})")
    dimensions = tuple(schema)
    rng = np.random.default_rng(seed)
    columns = {
        spec.id: rng.uniform(spec.range_lo, spec.range_hi, n) for spec in dimensions
    }
    attr_picks = {
        attr: rng.integers(0, len(FIXED_VALUE_POOLS[attr]), n)
        for attr in FIXED_ATTRIBUTES
    }
    services = []
    for i in range(n):
        fixed = {
            attr: FIXED_VALUE_POOLS[attr][attr_picks[attr][i]]
            for attr in FIXED_ATTRIBUTES
        }
        dims = {spec.id: float(columns[spec.id][i]) for spec in dimensions}
        services.append(
            CloudService(
                id=f"svc-{i + 1:06d}",
                name=f"{fixed['provider']} {fixed['category']} {i + 1}",
                fixed=fixed,
                dims=dims,
            )
        )
    return Catalog(dimensions=dimensions, services=tuple(services))


def filter_fixed(
    catalog: Catalog, predicates: Mapping[str, str]
) -> list[CloudService]:
    """Return the services whose fixed attributes match every predicate,
    compared case-insensitively. Preserves catalog order; an empty
    predicate map matches everything."""
    for attr in predicates:
        if attr not in catalog.fixed_attributes:
            raise UnknownAttributeError(f"unknown fixed attribute {attr!r}")
    wanted = {attr: value.casefold() for attr, value in predicates.items()}
    return [
        svc
        for svc in catalog.services
        if all(svc.fixed[attr].casefold() == value for attr, value in wanted.items())
    ]
