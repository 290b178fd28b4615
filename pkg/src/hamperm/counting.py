"""
Exact closed-form counts for Hamming balls over permutations and for the
largest intersection of two such balls.

Everything here is integer arithmetic on Python ints; no floats anywhere.
Binomial coefficients follow the zero conventions of :func:`binom` uniformly,
which is what makes the case-split formulas below safe at their boundaries.

The long-cycle center family: for odd radius-complement weight 2r-1, the
center with one dominant cycle of length ``ell`` consists of that cycle plus
transpositions (plus a single 3-cycle when ``ell`` is even, to fix parity).
``long_cycle_intersection`` evaluates its intersection count in closed form;
``arc_contribution_closed_form`` is the separately printed closed form for
just the arc-replacement class, kept verbatim so the two routes can be
audited against each other and against ground truth.
"""

from __future__ import annotations

import math
from functools import lru_cache


def binom(p: int, q: int) -> int:
    """C(p, q) with C(0,0)=1 and C(p,q)=0 whenever p<q, p<0, or q<0."""
    if p < 0 or q < 0 or p < q:
        return 0
    return math.comb(p, q)


@lru_cache(maxsize=None)
def derangement_number(r: int) -> int:
    """
    Number of fixed-point-free permutations of r elements.

    Uses the recurrence D_r = (r-1)(D_{r-1} + D_{r-2}) so the result is exact
    for any r.

    >>> [derangement_number(r) for r in range(6)]
    [1, 0, 1, 2, 9, 44]
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r == 0:
        return 1
    if r == 1:
        return 0
    return (r - 1) * (derangement_number(r - 1) + derangement_number(r - 2))


def sphere_size(n: int, r: int) -> int:
    """Number of permutations of {1..n} at Hamming distance exactly r from a fixed one."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    return math.comb(n, r) * derangement_number(r)


def ball_size(n: int, r: int) -> int:
    """Number of permutations at Hamming distance at most r from a fixed one."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    return 1 + sum(sphere_size(n, i) for i in range(1, r + 1))


def generator_count(n: int) -> int:
    """
    Number of permutations of {1..n} with exactly one nontrivial cycle,
    i.e. sum over cycle lengths i of n! / ((n-i)! * i).

    >>> generator_count(4)
    20
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return sum(math.factorial(n) // (math.factorial(n - i) * i) for i in range(2, n + 1))


def _half(r: int) -> int:
    # t with r = 2t or r = 2t+1
    return r // 2


def capacity_exact(r: int) -> int:
    """
    Exact size of the largest intersection of two radius-r balls whose
    centers are 2r apart, valid for any ambient n >= 2r.  Defined for r >= 4;
    smaller radii are handled by the enumeration oracle.

    >>> capacity_exact(4), capacity_exact(5), capacity_exact(6)
    (6, 4, 20)
    """
    if r < 4:
        raise ValueError(f"closed form needs r >= 4, got {r} (use the oracle)")
    t = _half(r)
    if r % 2 == 0:
        return math.comb(2 * t, t)
    return 2 * math.comb(2 * t - 2, t - 1)


def capacity_lower_bound(r: int) -> int:
    """
    Proven lower bound on the largest intersection of two radius-r balls
    whose centers are 2r-1 apart: 2*C(2t-3,t) + l*C(2t-2,t-1) with l=5 for
    even r and l=7 for odd r.  Defined for r >= 4.

    >>> capacity_lower_bound(4), capacity_lower_bound(5), capacity_lower_bound(6)
    (10, 14, 32)
    """
    if r < 4:
        raise ValueError(f"closed form needs r >= 4, got {r} (use the oracle)")
    t = _half(r)
    ell_star = 5 if r % 2 == 0 else 7
    return 2 * binom(2 * t - 3, t) + ell_star * binom(2 * t - 2, t - 1)


def _check_long_cycle_args(r: int, ell: int) -> int:
    """Validate (r, ell) for the long-cycle center family; return s."""
    if r < 4:
        raise ValueError(f"long-cycle formulas need r >= 4, got {r}")
    if not 3 <= ell <= 2 * r - 1:
        raise ValueError(f"need 3 <= ell <= 2r-1, got ell={ell}, r={r}")
    if ell % 2 == 1:
        s = (ell + 1) // 2
        if not 2 <= s <= r:
            raise ValueError(f"odd ell={ell} out of range for r={r}")
    else:
        s = ell // 2
        if not 2 <= s <= r - 2:
            raise ValueError(f"even ell={ell} out of range for r={r}")
    return s


def long_cycle_intersection(r: int, ell: int) -> int:
    """
    Closed-form size of the intersection of the radius-r balls around the
    identity and around the weight-(2r-1) long-cycle center with dominant
    cycle length ``ell``.  Four branches by the parities of ell and r,
    transcribed exactly as printed in the source formulas.

    >>> long_cycle_intersection(4, 5), long_cycle_intersection(5, 7)
    (10, 14)
    """
    s = _check_long_cycle_args(r, ell)
    t = _half(r)
    if ell % 2 == 1:
        base = 2 * binom(r - s, t)
        top = s - 1 if r % 2 == 0 else s - 2
        return base + ell * sum(binom(r - s, t - i) for i in range(1, top + 1))
    if r % 2 == 0:
        return (
            2 * binom(r - s, t)
            + 2 * (ell + 1) * binom(r - s - 2, t - 1)
            + ell * sum(binom(r - s - 1, t - i - 1) for i in range(1, s - 1))
        )
    return 2 * binom(r - s - 1, t) + ell * sum(binom(r - s - 1, t - i) for i in range(1, s))


def arc_contribution_closed_form(r: int, ell: int) -> int:
    """
    Printed closed form for just the arc-replacement class of the long-cycle
    center (elements sharing all but one contact with the center).  For even
    ``ell`` this carries the 2*(ell+3) coefficient, which disagrees on its
    face with the corresponding term inside :func:`long_cycle_intersection`;
    the verify suite compares both against ground truth.
    """
    s = _check_long_cycle_args(r, ell)
    t = _half(r)
    if ell % 2 == 1:
        top = s - 1 if r % 2 == 0 else s - 2
        return ell * sum(binom(r - s, t - i) for i in range(1, top + 1))
    if r % 2 == 0:
        return 2 * (ell + 3) * binom(r - s - 2, t - 1) + ell * sum(
            binom(r - s - 1, t - i - 1) for i in range(1, s - 1)
        )
    return ell * sum(binom(r - s - 1, t - i) for i in range(1, s))


def admissible_long_cycle_lengths(r: int) -> list[int]:
    """All dominant-cycle lengths the weight-(2r-1) center family allows."""
    if r < 4:
        raise ValueError(f"long-cycle formulas need r >= 4, got {r}")
    out = []
    for ell in range(3, 2 * r):
        if ell % 2 == 0 and ell // 2 > r - 2:
            continue
        out.append(ell)
    return out


def best_long_cycle(r: int) -> tuple[int, int]:
    """
    Scan :func:`long_cycle_intersection` over every admissible dominant-cycle
    length and return (ell, value) for the first maximizer.

    >>> best_long_cycle(4), best_long_cycle(5)
    ((5, 10), (7, 14))
    """
    best_ell, best_value = -1, -1
    for ell in admissible_long_cycle_lengths(r):
        value = long_cycle_intersection(r, ell)
        if value > best_value:
            best_ell, best_value = ell, value
    return best_ell, best_value


def central_binomial_bound(t: int, k: int) -> tuple[int, int, bool]:
    """
    Evaluate both sides of the key inequality

        sum_{j=0}^{k-1} C(2t+1-3k, t-1-3j) * C(2k, 1+2j)  <=  2*C(2t-2, t-1)

    for 1 <= k <= (2t+1)/3, returning (lhs, rhs, lhs <= rhs).

    >>> central_binomial_bound(2, 1)
    (4, 4, True)
    """
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    if not (1 <= k and 3 * k <= 2 * t + 1):
        raise ValueError(f"need 1 <= k <= (2t+1)/3, got k={k}, t={t}")
    lhs = sum(binom(2 * t + 1 - 3 * k, t - 1 - 3 * j) * binom(2 * k, 1 + 2 * j) for j in range(k))
    rhs = 2 * binom(2 * t - 2, t - 1)
    return lhs, rhs, lhs <= rhs
