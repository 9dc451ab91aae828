from rlw._core import (
    Algebra,
    analyze,
    boolean_algebra,
    catalog_counts,
    completion,
    filters,
    from_json,
    goedel_chain,
    lukasiewicz_chain,
    min_neighborhoods,
    prime_filters,
    product,
    quotient,
    validate_errors,
    zltrl_count,
)

__all__ = [
    "Algebra",
    "analyze",
    "boolean_algebra",
    "catalog_counts",
    "completion",
    "filters",
    "from_json",
    "goedel_chain",
    "lukasiewicz_chain",
    "min_neighborhoods",
    "prime_filters",
    "product",
    "quotient",
    "validate_errors",
    "zltrl_count",
]
