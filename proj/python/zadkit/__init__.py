"""Decision procedures for zero-action-determined modules and
zero-product-determined algebras, presented by structure constants."""

from ._core import (
    Algebra,
    Module,
    ZadkitError,
    check_zad,
    check_zpd,
    crosscheck,
    cyclic_group_table,
    direct_sum,
    group_algebra,
    load_algebra,
    load_module,
    matrix_algebra,
    oracle,
    path_algebra,
    poly_quotient,
    regular_module,
    replay,
    symmetric3_table,
    triangular_algebra,
    validate,
)

__all__ = [
    "Algebra",
    "Module",
    "ZadkitError",
    "check_zad",
    "check_zpd",
    "crosscheck",
    "cyclic_group_table",
    "direct_sum",
    "group_algebra",
    "load_algebra",
    "load_module",
    "matrix_algebra",
    "oracle",
    "path_algebra",
    "poly_quotient",
    "regular_module",
    "replay",
    "symmetric3_table",
    "triangular_algebra",
    "validate",
]
