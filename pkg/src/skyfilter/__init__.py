"""Multi-criteria cloud-service selection: fixed-requirement filtering,
Pareto (skyline) computation via block-nested loops, and ELECTRE IS
outranking refinement, with a synthetic-catalog generator, benchmark
harness, CLI, and HTTP API."""

from .catalog import (
    DEFAULT_DIMENSIONS,
    FIXED_ATTRIBUTES,
    FIXED_VALUE_POOLS,
    Catalog,
    CloudService,
    DimensionSpec,
    Sense,
    filter_fixed,
    generate_synthetic,
    load_catalog,
    load_schema,
    save_catalog,
)
from .electre import (
    DEFAULT_CUT_LEVEL,
    CriterionConfig,
    ElectreSettings,
    compute_solution,
    default_settings,
    global_concordance,
    partial_concordance,
    span_thresholds,
    veto_ok,
)
from .errors import (
    DuplicateIdError,
    MissingDimensionError,
    ParseError,
    QueryValidationError,
    SchemaError,
    SkyfilterError,
    UnknownAttributeError,
    ZeroWeightError,
)
from .pipeline import (
    Importance,
    Query,
    SelectionResult,
    ThresholdOverride,
    importance_to_weight,
    load_query,
    query_from_dict,
    query_to_dict,
    resolve_settings,
    result_to_dict,
    run_query,
    settings_to_dict,
)
from .skyline import (
    DimensionView,
    Dominance,
    compare,
    compute_skyline_bnl,
    compute_skyline_naive,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # catalog
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
    # skyline
    "Dominance",
    "DimensionView",
    "compare",
    "compute_skyline_bnl",
    "compute_skyline_naive",
    # electre
    "CriterionConfig",
    "ElectreSettings",
    "DEFAULT_CUT_LEVEL",
    "span_thresholds",
    "default_settings",
    "partial_concordance",
    "global_concordance",
    "veto_ok",
    "compute_solution",
    # pipeline
    "Importance",
    "importance_to_weight",
    "ThresholdOverride",
    "Query",
    "SelectionResult",
    "resolve_settings",
    "run_query",
    "load_query",
    "query_from_dict",
    "query_to_dict",
    "result_to_dict",
    "settings_to_dict",
    # errors
    "SkyfilterError",
    "ParseError",
    "SchemaError",
    "DuplicateIdError",
    "UnknownAttributeError",
    "MissingDimensionError",
    "ZeroWeightError",
    "QueryValidationError",
]
