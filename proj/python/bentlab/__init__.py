"""Exact verification toolkit for ternary bent functions and carry inequalities.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from bentlab._core import (
    Field,
    awc_solve,
    build_field,
    carry_graph_prove,
    classify,
    genwi_check,
    is_planar,
    monomial_degree,
    monomial_table,
    periods,
    uniform_periods_predict,
    walsh_spectrum,
    weight,
    wtinequ_scan,
    __version__,
)

__all__ = [
    "Field",
    "awc_solve",
    "build_field",
    "carry_graph_prove",
    "classify",
    "genwi_check",
    "is_planar",
    "monomial_degree",
    "monomial_table",
    "periods",
    "uniform_periods_predict",
    "walsh_spectrum",
    "weight",
    "wtinequ_scan",
    "__version__",
]
