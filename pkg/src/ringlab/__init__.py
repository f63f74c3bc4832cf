"""Exhaustive clean / nil-clean classification of finite rings."""

from .classes import CLASS_NAMES, TABLE_CLASSES, class_profile, csnc_deciders, ncuc_deciders
from .core import FiniteRing, derived_sets, read_ring_table, validate_tables, write_ring_table
from .elements import classify_element, element_counts, lift_idempotent
from .expr import build, canonical, parse_ring_expr, to_string
from .laws import check_laws

__all__ = [
    "CLASS_NAMES", "TABLE_CLASSES", "FiniteRing", "build", "canonical", "check_laws",
    "class_profile", "classify_element", "csnc_deciders", "derived_sets",
    "element_counts", "lift_idempotent", "ncuc_deciders", "parse_ring_expr",
    "read_ring_table", "to_string", "validate_tables", "write_ring_table",
]
