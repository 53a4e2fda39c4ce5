import numpy as np
import pytest

from skyfilter import DimensionView, generate_synthetic

# One line per acceptance criterion in the terminal summary, keyed by the
# test function implementing it.
ACCEPTANCE_LABELS = {
    "test_criterion_1_skyline_oracle_equivalence":
        "1. skyline oracle equivalence (1000 instances, BNL == naive)",
    "test_criterion_2_neutral_electre_identity":
        "2. neutral-settings outranking is the identity (200 skylines)",
    "test_criterion_3_subset_staging":
        "3. staging: final subset of skyline subset of filtered",
    "test_criterion_4_weight_scale_invariance":
        "4. weight scale invariance (k in {0.5, 3, 10})",
    "test_criterion_5_trend_band":
        "5. 50k trend band: skyline growth d2..d7, d10 reduction ratios",
    "test_criterion_6_degenerate_dimension":
        "6. single continuous dimension: skyline and final both size 1",
    "test_criterion_7_performance":
        "7. performance: 50k x 10 under 60 s, subquadratic doubling",
    "test_criterion_8_superset_monotonicity":
        "8. appending a dimension never evicts a skyline member",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            name = getattr(rep, "nodeid", "").rsplit("::", 1)[-1]
            base = name.split("[")[0]
            if base in ACCEPTANCE_LABELS:
                verdict = "PASS" if status == "passed" else "FAIL"
                lines.append((ACCEPTANCE_LABELS[base], verdict))
    if lines:
        terminalreporter.section("acceptance criteria")
        for label, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {label}")


@pytest.fixture(scope="session")
def catalog_200():
    return generate_synthetic(200, seed=20)


@pytest.fixture(scope="session")
def catalog_1000():
    return generate_synthetic(1000, seed=21)


@pytest.fixture()
def rng():
    return np.random.default_rng(1234)


def view_over(catalog, d):
    """First d schema dimensions as a view."""
    return DimensionView.from_schema(catalog.dimensions, [s.id for s in catalog.dimensions[:d]])
