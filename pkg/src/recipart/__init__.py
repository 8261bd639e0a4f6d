"""recipart: exact search and proof machinery for reciprocal partitions.

A *representation* of an integer m (for a power d, default 2) is a set of
distinct positive integers whose reciprocals sum to exactly 1 and whose
d-th powers sum to exactly m. This package finds such representations by
exhaustive bounded search, sweeps ranges into verifiable table files, and
checks the translation-based induction arguments that turn finite sweeps
into statements about all sufficiently large integers.
"""

from .exact_arith import Fraction, ceil_recip, frac_sub_unit, iroot_floor, rational_root_floor
from .search_core import (
    DEFAULT_CONSTRAINTS,
    Representation,
    SearchConstraints,
    SearchStats,
    bounds_for_min,
    brute_force_oracle,
    construct,
    is_representation,
    max_cardinality,
)

__all__ = [
    "Fraction",
    "ceil_recip",
    "frac_sub_unit",
    "iroot_floor",
    "rational_root_floor",
    "DEFAULT_CONSTRAINTS",
    "Representation",
    "SearchConstraints",
    "SearchStats",
    "bounds_for_min",
    "brute_force_oracle",
    "construct",
    "is_representation",
    "max_cardinality",
]

__version__ = "0.1.0"
