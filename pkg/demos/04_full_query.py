"""One query end to end: fixed requirements, importance levels, overrides.

Run from the repo root:  python3 demos/04_full_query.py
"""

import json

from skyfilter import generate_synthetic, query_from_dict, result_to_dict, run_query

catalog = generate_synthetic(10_000, seed=3)

# The query separates hard requirements (exact categorical matches) from
# soft ones (dimensions to optimize, each with an importance level that
# becomes its criterion weight).
query = query_from_dict({
    "fixed": {"service_model": "IaaS", "os_series": "Linux"},
    "optimize": [
        {"dim": "latency", "importance": "extremely_important"},
        {"dim": "ongoing_cost", "importance": "very_important"},
        {"dim": "availability", "importance": "moderately_important"},
        {"dim": "data_loss", "importance": "slightly_important"},
    ],
    # optional knobs; a null veto would disable that criterion's veto
    "electre": {"cut_level": 0.88, "criteria": {"latency": {"q": 5.0}}},
})

result = run_query(catalog, query)
print(f"filtered {result.filtered_count} -> skyline {result.skyline_count} "
      f"-> final {result.final_count}")
print("timings (ms):", {k: round(v, 1) for k, v in result.timings_ms.items()})

print("\nresolved criteria:")
for c in result.settings_used.criteria:
    print(f"  {c.dimension_id:<14} weight {c.weight:.0f}  q={c.q_ind:.2f} "
          f"p={c.p_pref:.2f} v={c.v_veto:.2f}")

print("\ntop of the final set:")
for svc in result.final[:5]:
    print(f"  {svc.id}  latency={svc.dims['latency']:.1f} "
          f"cost={svc.dims['ongoing_cost']:.1f}")

# result_to_dict gives the same JSON the HTTP endpoint returns.
payload = result_to_dict(result, catalog)
print(f"\nresult JSON: {len(json.dumps(payload))} bytes, "
      f"keys {sorted(payload.keys())}")
