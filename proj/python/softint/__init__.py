"""Soft int-groups over finite groups: Python bindings to the C++ core."""

from ._softint import (
    CRITERIA,
    Error,
    Group,
    ParseError,
    SoftSet,
    check_theorem,
    cli,
    distinct_conjugates,
    enumerate_int_groups,
    fixture,
    format_soft_set,
    is_int_group,
    is_normal,
    level_structure,
    normalizer,
    parse_soft_set,
    run_suite,
    soft_image,
    soft_intersection,
    soft_preimage,
    soft_product,
    soft_union,
    theorem_ids,
)

__all__ = [
    "CRITERIA",
    "Error",
    "Group",
    "ParseError",
    "SoftSet",
    "check_theorem",
    "cli",
    "distinct_conjugates",
    "enumerate_int_groups",
    "fixture",
    "format_soft_set",
    "is_int_group",
    "is_normal",
    "level_structure",
    "normalizer",
    "parse_soft_set",
    "run_suite",
    "soft_image",
    "soft_intersection",
    "soft_preimage",
    "soft_product",
    "soft_union",
    "theorem_ids",
]
