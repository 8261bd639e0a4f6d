"""Exact rational helpers and integer root extraction.

Everything here is integer or rational arithmetic with no floating point
anywhere: these values drive search pruning decisions, where a rounding
error would silently turn an exhaustive search into a lossy one.

The rational type is the standard library ``fractions.Fraction``, which
already guarantees what we need (always reduced, positive denominator,
``Fraction(0) == 0/1``).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

__all__ = [
    "Fraction",
    "frac_sub_unit",
    "ceil_recip",
    "iroot_floor",
    "rational_root_floor",
]


def frac_sub_unit(s: Fraction, x: int) -> Fraction:
    """Return ``s - 1/x`` exactly, in lowest terms.

    A negative result is legal; callers treat it as a pruning signal.
    """
    if x < 1:
        raise ValueError(f"unit denominator must be >= 1, got {x}")
    return s - Fraction(1, x)


def ceil_recip(s: Fraction) -> int:
    """Return ``ceil(1/s)`` for s > 0, using only integer arithmetic."""
    if s <= 0:
        raise ValueError(f"ceil_recip requires s > 0, got {s}")
    return -(-s.denominator // s.numerator)


def iroot_floor(n: int, r: int) -> int:
    """Return ``floor(n ** (1/r))`` exactly: the unique v with v**r <= n < (v+1)**r.

    Uses ``math.isqrt`` for r == 2 and an all-integer Newton iteration
    otherwise, followed by an exact correction step, so the result never
    depends on floating point.
    """
    if n < 0:
        raise ValueError(f"iroot_floor requires n >= 0, got {n}")
    if r < 1:
        raise ValueError(f"iroot_floor requires r >= 1, got {r}")
    if r == 1 or n == 0:
        return n if r == 1 else 0
    if r == 2:
        return isqrt(n)
    if n.bit_length() <= r:
        return 1
    # Newton iteration seeded strictly above the root; descends to the floor.
    v = 1 << -(-n.bit_length() // r)
    while True:
        w = ((r - 1) * v + n // v ** (r - 1)) // r
        if w >= v:
            break
        v = w
    # Exact correction: never trust the iterate without the power check.
    while v ** r > n:
        v -= 1
    while (v + 1) ** r <= n:
        v += 1
    return v


def rational_root_floor(n: int, s: Fraction, r: int) -> int:
    """Return ``floor((n/s) ** (1/r))``: the largest v >= 0 with v**r * num(s) <= n * den(s).

    All comparisons are exact; s must be positive.
    """
    if s <= 0:
        raise ValueError(f"rational_root_floor requires s > 0, got {s}")
    if n < 0:
        raise ValueError(f"rational_root_floor requires n >= 0, got {n}")
    p, q = s.numerator, s.denominator
    # v**r <= n*q/p  iff  v**r <= floor(n*q/p), since v**r is an integer.
    v = iroot_floor(n * q // p, r)
    while v ** r * p > n * q:
        v -= 1
    while (v + 1) ** r * p <= n * q:
        v += 1
    return v
