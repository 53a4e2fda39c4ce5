"""Measure how hard each stage cuts as size and dimensionality grow.

Run from the repo root:  python3 demos/05_benchmark.py
(takes ~20 s; bump the plan for the full-size version)
"""

import tempfile
from pathlib import Path

from skyfilter.bench import emit_report, plan_from_dict, run_experiment, summarize

plan = plan_from_dict({
    "sizes": [2000, 8000],
    "dims": [2, 4, 6, 8, 10],
    "seeds": [1, 2, 3],
})

report = run_experiment(plan)

# The skyline alone keeps growing with d; the outranking stage is what
# keeps the final set usable at high dimension counts.
print(f"{'n':>6} {'d':>3} {'skyline':>12} {'final':>12} {'final/n':>8}")
summary = summarize(report)
for n in plan.sizes:
    for d in plan.dim_counts:
        cell = summary[f"n={n},d={d}"]
        sky, fin = cell["skyline"]["mean"], cell["final"]["mean"]
        print(f"{n:>6} {d:>3} {sky:>8.0f} +-{cell['skyline']['std']:<4.0f}"
              f"{fin:>8.0f} +-{cell['final']['std']:<4.0f}{fin / n:>8.1%}")

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "report.csv"
    emit_report(report, out)
    lines = out.read_text().splitlines()
    print(f"\nwrote {out.name}: {len(lines)} lines, header: {lines[0]}")
    print(f"plus {out.name}.summary.json with per-(n,d) means over seeds")
