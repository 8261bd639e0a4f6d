# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the d=2 search engine in search_core.

Semantics are identical to search_core._search (same candidate order, same
pruning rules, so the same representation is found first); only the inner
loop is compiled. The remaining-reciprocal state S stays an arbitrary
precision Python int, everything else runs on C integers. Callers guarantee
n < 2**40 so x**3 and the power prefix sums fit comfortably in 64 bits.
"""

from cpython.exc cimport PyErr_CheckSignals
from libc.stdlib cimport free, malloc


cdef inline long long c_isqrt(long long n):
    # float-seeded, then corrected exactly; the result never trusts the seed
    cdef long long r = <long long> ((<double> n) ** 0.5)
    while r > 0 and r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef long long _signal_countdown = 65536


cdef int _rec(long long t, object S, long long n,
              object lcm_all, list unit, list hsum,
              long long* qsum, unsigned char* avoid_mask,
              long long* acc, int depth, int limit) except -1:
    global _signal_countdown
    cdef long long lo, hi, r, x, n2, xc
    cdef int sub
    cdef Py_ssize_t jl, jr, jm
    cdef object S2, hl, nl, target

    _signal_countdown -= 1
    if _signal_countdown <= 0:
        _signal_countdown = 65536
        if PyErr_CheckSignals() != 0:
            return -1

    hi = c_isqrt(n)
    if t > hi:
        return 0
    # range is empty when ceil(1/s) > hi; test it without a big division
    if S * hi < lcm_all:
        return 0
    lo = lcm_all // S
    if lo * S < lcm_all:
        lo += 1
    if t > lo:
        lo = t
    if lo > hi:
        return 0

    hl = hsum[lo - 1]
    # richest affordable candidate set is the consecutive run from lo
    jl = lo
    jr = hi + 1
    while jl < jr:
        jm = (jl + jr) >> 1
        if qsum[jm] - qsum[lo - 1] <= n:
            jl = jm + 1
        else:
            jr = jm
    r = jl - 1
    if hsum[r] - hl < S:
        return 0
    # cheapest way to reach reciprocal mass S is also a consecutive run
    target = S + hl
    jl = lo
    jr = hi + 1
    while jl < jr:
        jm = (jl + jr) >> 1
        if hsum[jm] < target:
            jl = jm + 1
        else:
            jr = jm
    if n < qsum[jl] - qsum[lo - 1]:
        return 0

    nl = n * lcm_all
    for x in range(lo, hi + 1):
        xc = x * x * x
        if xc * S > nl:
            break
        if avoid_mask != NULL and avoid_mask[x]:
            continue
        n2 = n - x * x
        S2 = S - <object> unit[x]
        if not S2:
            if n2 == 0:
                acc[depth] = x
                return depth + 1
            continue
        if n2 == 0:
            continue
        acc[depth] = x
        if depth + 1 > limit:
            raise AssertionError(
                "search depth %d exceeded cardinality bound %d" % (depth + 1, limit)
            )
        sub = _rec(x + 1, S2, n2, lcm_all, unit, hsum, qsum, avoid_mask,
                   acc, depth + 1, limit)
        if sub:
            return sub
    return 0


def search_squares(long long t, object S0, long long n, object lcm_all,
                   list unit, list hsum, list qsum_list, avoid, int limit):
    """Run the d=2 search; returns the found elements as a list, or None."""
    cdef Py_ssize_t k = len(qsum_list)
    cdef Py_ssize_t i
    cdef long long maxx = k - 2
    cdef long long a
    cdef long long* qsum = <long long*> malloc(k * sizeof(long long))
    cdef unsigned char* avoid_mask = NULL
    cdef long long* acc = NULL
    cdef int found = 0
    if qsum == NULL:
        raise MemoryError
    try:
        for i in range(k):
            qsum[i] = qsum_list[i]
        if avoid:
            avoid_mask = <unsigned char*> malloc((maxx + 1) * sizeof(unsigned char))
            if avoid_mask == NULL:
                raise MemoryError
            for i in range(maxx + 1):
                avoid_mask[i] = 0
            for elem in avoid:
                a = elem
                if 1 <= a <= maxx:
                    avoid_mask[a] = 1
        acc = <long long*> malloc((limit + 1) * sizeof(long long))
        if acc == NULL:
            raise MemoryError
        found = _rec(t, S0, n, lcm_all, unit, hsum, qsum, avoid_mask,
                     acc, 0, limit)
        if found:
            return [acc[i] for i in range(found)]
        return None
    finally:
        free(qsum)
        if avoid_mask != NULL:
            free(avoid_mask)
        if acc != NULL:
            free(acc)
