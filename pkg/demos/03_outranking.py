"""Refining a skyline with outranking: thresholds, weights, cut level.

The skyline only removes services that lose everywhere. Outranking also
removes near-duplicates and lopsided trade-offs: p eliminates q when a
weighted majority of criteria back p (concordance >= the cut level) and
q has no single overwhelming advantage (no veto).

Run from the repo root:  python3 demos/03_outranking.py
"""

from skyfilter import (
    DimensionView,
    compute_skyline_bnl,
    compute_solution,
    default_settings,
    generate_synthetic,
    global_concordance,
    span_thresholds,
)

catalog = generate_synthetic(5000, seed=11)
view = DimensionView.from_schema(catalog, catalog.dimension_ids[:6])
skyline = compute_skyline_bnl(catalog.services, view)
print(f"skyline: {len(skyline)} of {len(catalog)}")

# Thresholds default to fractions of each criterion's span over the
# skyline: 1% indifferent, 5% fully preferred, 60% veto.
q, p, v = span_thresholds([s.dims["latency"] for s in skyline])
print(f"latency thresholds: indifference {q:.2f}, preference {p:.2f}, veto {v:.2f}")

settings = default_settings(skyline, view)  # equal weights, cut 0.91
final = compute_solution(skyline, settings, view)
print(f"final: {len(final)} services ({len(final) / len(skyline):.0%} of the skyline)")

a, b = skyline[0], skyline[1]
print(f"\nconcordance C({a.id}, {b.id}) = {global_concordance(a, b, settings, view):.3f}")
print(f"concordance C({b.id}, {a.id}) = {global_concordance(b, a, settings, view):.3f}")

# The cut level is the knob: demand a larger backing majority and fewer
# eliminations go through, so more services survive.
print("\ncut level sweep:")
for cut in (0.85, 0.91, 0.95, 1.0):
    st = default_settings(skyline, view, cut_level=cut)
    kept = len(compute_solution(skyline, st, view))
    print(f"  cut {cut:.2f} -> {kept:>4} of {len(skyline)}")

# Weights shift who eliminates whom. Double weight on latency:
weights = [4.0 if dim == "latency" else 1.0 for dim in view.ids]
st = default_settings(skyline, view, weights=weights)
final_latency = compute_solution(skyline, st, view)
print(f"\nlatency-heavy weights: {len(final_latency)} survivors")
best = min(final_latency, key=lambda s: s.dims["latency"])
print(f"  lowest latency among them: {best.id} at {best.dims['latency']:.1f}")
