"""Exact intersection numbers, cones and scenario checks on moduli-space models."""

from ._core import (
    IntersectLabError,
    check_scenario,
    class_vector,
    cusp_count,
    dual_cone,
    group_order,
    integrate,
    is_extremal,
    membership,
    normal_form,
    pairing_table,
    sp_pairing_row,
    spaces,
    unique_relation,
)

__all__ = [
    "IntersectLabError",
    "check_scenario",
    "class_vector",
    "cusp_count",
    "dual_cone",
    "group_order",
    "integrate",
    "is_extremal",
    "membership",
    "normal_form",
    "pairing_table",
    "sp_pairing_row",
    "spaces",
    "unique_relation",
]
