"""Backtracking search for representations.

A representation of m (for power d) is a set of distinct positive integers
whose reciprocals sum to exactly 1 and whose d-th powers sum to exactly m.
``construct`` runs a depth-first search over the minimum element, bounded on
both sides by exact power-mean inequalities, so a ``None`` answer is a
certificate that no representation exists under the given constraints.

``brute_force_oracle`` is a deliberately independent subset-enumeration
checker used by the test suite to validate ``construct`` on small inputs;
it shares no search logic with the main algorithm.
"""

from __future__ import annotations

import sys
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Optional

from .exact_arith import ceil_recip, iroot_floor, rational_root_floor

__all__ = [
    "Representation",
    "SearchConstraints",
    "SearchStats",
    "DEFAULT_CONSTRAINTS",
    "bounds_for_min",
    "max_cardinality",
    "construct",
    "is_representation",
    "brute_force_oracle",
]


@dataclass(frozen=True)
class Representation:
    """A strictly increasing tuple of positive integers."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if not elems:
            raise ValueError("a representation is nonempty")
        prev = 0
        for x in elems:
            if not isinstance(x, int) or x <= prev:
                raise ValueError(
                    f"elements must be strictly increasing positive integers, got {elems}"
                )
            prev = x

    def reciprocal_sum(self) -> Fraction:
        return sum((Fraction(1, x) for x in self.elements), Fraction(0))

    def power_sum(self, d: int = 2) -> int:
        return sum(x**d for x in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in self.elements) + "}"


@dataclass(frozen=True)
class SearchConstraints:
    """Search restrictions: minimum element t, forbidden set, power d."""

    t: int = 1
    avoid: frozenset[int] = frozenset()
    d: int = 2

    def __post_init__(self) -> None:
        object.__setattr__(self, "avoid", frozenset(self.avoid))
        if self.t < 1:
            raise ValueError(f"t must be >= 1, got {self.t}")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if any(not isinstance(a, int) or a < 1 for a in self.avoid):
            raise ValueError(f"avoid must contain positive integers, got {self.avoid}")


DEFAULT_CONSTRAINTS = SearchConstraints()


@dataclass
class SearchStats:
    """Instrumentation filled in by ``construct`` when passed in."""

    nodes: int = 0
    max_depth: int = 0


def bounds_for_min(t: int, s: Fraction, n: int, d: int) -> tuple[int, int]:
    """Inclusive candidate range [L, U] for the minimum element.

    L comes from ``1/x <= sum of reciprocals`` and the floor t; U from the
    power-mean bound (n/s)^(1/(d+1)) and the crude x^d <= n. The range may
    be empty (L > U), which means the branch is dead.
    """
    s = Fraction(s)
    if s <= 0:
        raise ValueError(f"bounds_for_min requires s > 0, got {s}")
    if n < 1:
        raise ValueError(f"bounds_for_min requires n >= 1, got {n}")
    if t < 1 or d < 1:
        raise ValueError(f"bounds_for_min requires t >= 1 and d >= 1, got t={t} d={d}")
    lo = max(ceil_recip(s), t)
    hi = min(rational_root_floor(n, s, d + 1), iroot_floor(n, d))
    return lo, hi


def max_cardinality(s: Fraction, n: int, d: int) -> int:
    """Largest possible size of a set with reciprocal sum s and d-power sum n.

    This is floor(s * (n/s)^(1/(d+1))). Clearing the radical: a size k is
    feasible only if k^(d+1) * den(s)^d <= n * num(s)^d, so we return the
    largest such integer.
    """
    s = Fraction(s)
    if s <= 0 or n < 1 or d < 1:
        raise ValueError(f"max_cardinality requires s > 0, n >= 1, d >= 1, got {s}, {n}, {d}")
    p, q = s.numerator, s.denominator
    rhs = n * p**d
    c = iroot_floor(rhs // q**d, d + 1)
    while c ** (d + 1) * q**d > rhs:
        c -= 1
    while (c + 1) ** (d + 1) * q**d <= rhs:
        c += 1
    return c


def _search(t, S, n, d, e, lcm_all, unit, hsum, qsum, avoid, acc, limit, stats):
    # Exact integer state: S is the remaining reciprocal sum scaled by
    # lcm_all (so S > 0 here), n is the remaining power sum (> 0).
    if stats is not None:
        stats.nodes += 1
    lo = -(-lcm_all // S)
    if t > lo:
        lo = t
    hi = isqrt(n) if d == 2 else iroot_floor(n, d)
    if lo > hi:
        return False
    qbase = qsum[lo - 1]
    hbase = hsum[lo - 1]
    # The reciprocal mass reachable within power budget n is maximized by
    # the consecutive run lo, lo+1, ..., r: swapping any element for a
    # smaller unused one raises the mass and lowers the cost.
    r = bisect_right(qsum, n + qbase) - 1
    if r > hi:
        r = hi
    if hsum[r] - hbase < S:
        return False
    # Dually, the cheapest way to reach mass S is the same consecutive run;
    # if even that overshoots the power budget, the branch is dead.
    j = bisect_left(hsum, S + hbase)
    if n < qsum[j] - qbase:
        return False
    nl = n * lcm_all
    for x in range(lo, hi + 1):
        if x**e * S > nl:
            break
        if x in avoid:
            continue
        n2 = n - x**d
        S2 = S - unit[x]
        if S2 == 0:
            if n2 == 0:
                acc.append(x)
                return True
            continue
        if n2 == 0:
            continue
        acc.append(x)
        if len(acc) > limit:
            raise AssertionError(
                f"search depth {len(acc)} exceeded cardinality bound {limit}"
            )
        if stats is not None and len(acc) > stats.max_depth:
            stats.max_depth = len(acc)
        if _search(x + 1, S2, n2, d, e, lcm_all, unit, hsum, qsum, avoid, acc, limit, stats):
            return True
        acc.pop()
    return False


def _search_reduced(t, sn, sd, n, d, e, avoid, acc, limit, stats):
    # Table-free twin of _search keeping s as a reduced fraction sn/sd;
    # used when the candidate range is too wide to precompute lcm tables.
    if stats is not None:
        stats.nodes += 1
    lo = -(-sd // sn)
    if t > lo:
        lo = t
    hi = isqrt(n) if d == 2 else iroot_floor(n, d)
    nsd = n * sd
    for x in range(lo, hi + 1):
        if x**e * sn > nsd:
            break
        if x in avoid:
            continue
        n2 = n - x**d
        num = sn * x - sd
        if num == 0:
            if n2 == 0:
                acc.append(x)
                return True
            continue
        if n2 == 0:
            continue
        den = sd * x
        g = gcd(num, den)
        acc.append(x)
        if len(acc) > limit:
            raise AssertionError(
                f"search depth {len(acc)} exceeded cardinality bound {limit}"
            )
        if stats is not None and len(acc) > stats.max_depth:
            stats.max_depth = len(acc)
        if _search_reduced(x + 1, num // g, den // g, n2, d, e, avoid, acc, limit, stats):
            return True
        acc.pop()
    return False


# Above this many candidate elements the per-search lcm tables would cost
# O(maxx^2) bits of memory, so fall back to reduced-fraction arithmetic.
_TABLE_ENGINE_MAX_ELEMENT = 10_000


def construct(
    cons: SearchConstraints,
    s: Fraction | int,
    n: int,
    stats: Optional[SearchStats] = None,
) -> Optional[Representation]:
    """Find a set Y with min Y >= cons.t, Y disjoint from cons.avoid,
    reciprocal sum exactly s and d-power sum exactly n; None if none exists.

    Candidates for each position are explored in ascending order, so the
    result is deterministic. A None return means the search space was
    exhausted.
    """
    s = Fraction(s)
    if s <= 0 or n <= 0:
        return None
    d = cons.d
    maxx = iroot_floor(n, d)
    if maxx < cons.t:
        return None
    limit = max_cardinality(s, n, d)
    if limit + 64 > sys.getrecursionlimit():
        sys.setrecursionlimit(limit + 256)
    acc: list[int] = []
    if maxx <= _TABLE_ENGINE_MAX_ELEMENT:
        # Scale all reciprocal arithmetic to a common integer denominator.
        lcm_all = lcm(*range(1, maxx + 1), s.denominator)
        S0 = s.numerator * (lcm_all // s.denominator)
        unit = [0] * (maxx + 1)
        hsum = [0] * (maxx + 1)
        qsum = [0] * (maxx + 2)
        for x in range(1, maxx + 1):
            unit[x] = lcm_all // x
            hsum[x] = hsum[x - 1] + unit[x]
            qsum[x] = qsum[x - 1] + x**d
        qsum[maxx + 1] = qsum[maxx] + (maxx + 1) ** d
        found = _search(
            cons.t, S0, n, d, d + 1, lcm_all, unit, hsum, qsum, cons.avoid, acc, limit, stats
        )
    else:
        found = _search_reduced(
            cons.t, s.numerator, s.denominator, n, d, d + 1, cons.avoid, acc, limit, stats
        )
    if not found:
        return None
    rep = Representation(tuple(acc))
    # Certify before handing out; any engine bug becomes a loud failure.
    if rep.reciprocal_sum() != s or rep.power_sum(d) != n:
        raise AssertionError(f"search returned an uncertified set {rep} for s={s}, n={n}")
    return rep


def is_representation(
    xs: Representation | Iterable[int],
    m: int,
    cons: SearchConstraints = DEFAULT_CONSTRAINTS,
) -> bool:
    """True iff xs is a valid representation of m under the constraints."""
    elems = tuple(xs.elements) if isinstance(xs, Representation) else tuple(sorted(xs))
    if not elems:
        return False
    prev = 0
    for x in elems:
        if not isinstance(x, int) or x <= prev:
            return False
        prev = x
    if elems[0] < cons.t:
        return False
    if any(x in cons.avoid for x in elems):
        return False
    if sum((Fraction(1, x) for x in elems), Fraction(0)) != 1:
        return False
    return sum(x**cons.d for x in elems) == m


def brute_force_oracle(
    m: int,
    cons: SearchConstraints = DEFAULT_CONSTRAINTS,
    max_root: int = 24,
) -> Optional[Representation]:
    """Independent oracle: enumerate subsets of {t..floor(m^(1/d))} \\ avoid.

    Only subsets whose d-th powers already exceed m (or can no longer reach
    it) are cut, which cannot exclude any valid representation; reciprocal
    sums are checked with exact Fractions only once the power sum matches.
    Intentionally shares nothing with ``construct`` beyond integer roots.
    """
    if m < 1:
        return None
    d = cons.d
    hi = iroot_floor(m, d)
    if hi > max_root:
        raise ValueError(f"brute_force_oracle guard: floor(m^(1/d)) = {hi} > {max_root}")
    cands = [x for x in range(cons.t, hi + 1) if x not in cons.avoid]
    powers = [x**d for x in cands]
    remaining = [0] * (len(cands) + 1)
    for i in range(len(cands) - 1, -1, -1):
        remaining[i] = remaining[i + 1] + powers[i]

    chosen: list[int] = []

    def subsets(i: int, deficit: int) -> bool:
        if deficit == 0:
            return bool(chosen) and sum(
                (Fraction(1, x) for x in chosen), Fraction(0)
            ) == 1
        if i == len(cands) or remaining[i] < deficit:
            return False
        if powers[i] <= deficit:
            chosen.append(cands[i])
            if subsets(i + 1, deficit - powers[i]):
                return True
            chosen.pop()
        return subsets(i + 1, deficit)

    if subsets(0, m):
        return Representation(tuple(chosen))
    return None
