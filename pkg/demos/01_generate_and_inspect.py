"""Generate a synthetic service catalog and look around.

Run from the repo root:  python3 demos/01_generate_and_inspect.py
"""

import collections
import tempfile
from pathlib import Path

from skyfilter import DEFAULT_DIMENSIONS, generate_synthetic, load_catalog, save_catalog

# Every service gets 8 categorical attributes (provider, service model, ...)
# and one numeric value per schema dimension, drawn uniformly from the
# dimension's range. The seed pins everything.
catalog = generate_synthetic(500, seed=42)

print(f"services: {len(catalog)}")
print("schema:")
for spec in DEFAULT_DIMENSIONS:
    print(f"  {spec.id:<20} {spec.sense.value:<8} range [{spec.range_lo}, {spec.range_hi}]")

svc = catalog.services[0]
print(f"\nfirst service: {svc.id} ({svc.name})")
print(f"  fixed: {svc.fixed}")
print("  dims:", {k: round(v, 2) for k, v in svc.dims.items()})

providers = collections.Counter(s.fixed["provider"] for s in catalog.services)
print(f"\nprovider spread: {dict(providers)}")

# Catalogs round-trip through JSONL (exact floats via repr) and CSV.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "catalog.jsonl"
    save_catalog(catalog, path)
    again = load_catalog(path)
    assert again == catalog
    print(f"\nJSONL round trip: {path.stat().st_size} bytes, catalogs equal")
