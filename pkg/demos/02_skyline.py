"""Pareto filtering: keep every service no other one beats outright.

Run from the repo root:  python3 demos/02_skyline.py
"""

from skyfilter import (
    Dominance,
    DimensionView,
    compare,
    compute_skyline_bnl,
    generate_synthetic,
)

catalog = generate_synthetic(2000, seed=7)

# A view picks which dimensions matter and remembers their direction.
view = DimensionView.from_schema(catalog, ["latency", "ongoing_cost", "availability"])

a, b = catalog.services[0], catalog.services[1]
print(f"{a.id} vs {b.id}: {compare(a, b, view).name}")
assert compare(a, a, view) is Dominance.EQUAL

skyline = compute_skyline_bnl(catalog.services, view)
print(f"\nskyline over {view.ids}: {len(skyline)} of {len(catalog)} services")
for svc in skyline[:5]:
    vals = {d: round(svc.dims[d], 2) for d in view.ids}
    print(f"  {svc.id}  {vals}")
print("  ...")

# Survivors come out in catalog order, and nothing in the skyline
# dominates anything else in it.
ids = [s.id for s in skyline]
assert ids == sorted(ids)
for p in skyline[:50]:
    for q in skyline[:50]:
        assert compare(p, q, view) is not Dominance.DOMINATES or p is q

# More dimensions -> more trade-offs -> a larger skyline.
for d in (1, 2, 4, 6, 8, 10):
    v = DimensionView.from_schema(catalog, catalog.dimension_ids[:d])
    print(f"d={d:<2} skyline size {len(compute_skyline_bnl(catalog.services, v))}")
