"""
Ground-truth ball-intersection counts, by exhaustive enumeration and by
structure-exploiting counters that need no enumeration at all.

Enumeration works around one fact: since ball sizes are center-independent
and intersections with the identity ball depend only on the cycle type of
the second center (checked by the relabeling-invariance tests), the maximum
over all center pairs at a given distance reduces to a scan over cycle types,
one canonical center per type.

The structured counters use the classification of intersection elements for
center weight 2r (disjoint unions of full center cycles of total length r)
and 2r-1 (full-cycle unions of total length r-1 or r, plus single-arc
replacements).  They are validated against brute force for r <= 5 by the
test suite, which is the license to trust them at larger r.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .counting import ball_size
from .perms import (
    CycleType,
    Perm,
    compose,
    cycle_type,
    hamming_distance,
    hamming_weight,
    identity,
    type_weight,
)

DEFAULT_BALL_CAP = 5_000_000
DEFAULT_TYPE_CAP = 500_000
RESAMPLE_LIMIT = 10_000


class CapExceededError(RuntimeError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, what: str, required: int, allowed: int):
        self.required = required
        self.allowed = allowed
        super().__init__(f"{what} needs {required} elements, cap is {allowed}")


def partitions_min2(k: int) -> list[CycleType]:
    """
    All multisets of integers >= 2 summing to k, each sorted decreasingly,
    listed in decreasing lexicographic order.

    >>> partitions_min2(7)
    [(7,), (5, 2), (4, 3), (3, 2, 2)]
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")

    def rec(total: int, max_part: int):
        if total == 0:
            yield ()
            return
        for first in range(min(total, max_part), 1, -1):
            if total - first == 1:
                continue
            for rest in rec(total - first, first):
                yield (first,) + rest

    return list(rec(k, k))


def canonical_of_type(ctype: CycleType, n: int) -> Perm:
    """
    The representative of a cycle type whose cycles sit on consecutive labels
    1, 2, ..., longest cycle first.

    >>> canonical_of_type((3, 2), 6)
    (2, 3, 1, 5, 4, 6)
    """
    weight = type_weight(ctype)
    if weight > n:
        raise ValueError(f"type {ctype} has weight {weight} > n={n}")
    if any(length < 2 for length in ctype):
        raise ValueError(f"cycle lengths must be >= 2, got {ctype}")
    mapping = list(range(1, n + 1))
    base = 1
    for length in sorted(ctype, reverse=True):
        for offset in range(length - 1):
            mapping[base - 1 + offset] = base + offset + 1
        mapping[base - 1 + length - 1] = base
        base += length
    return tuple(mapping)


def enumerate_ball(n: int, r: int, cap: int | None = DEFAULT_BALL_CAP):
    """
    Yield every permutation of {1..n} with Hamming weight <= r, exactly once,
    in a fixed order: by weight, then by support (lexicographic), then by
    image tuple (lexicographic).

    Generation is support-based: for each weight i, choose the i moved labels
    and run through the fixed-point-free images of that support.  Nothing is
    ever filtered out of the full symmetric group.
    """
    total = ball_size(n, r)
    if cap is not None and total > cap:
        raise CapExceededError(f"ball of radius {r} in Sym_{n}", total, cap)
    yield identity(n)
    for i in range(2, r + 1):
        for sup in combinations(range(1, n + 1), i):
            for image in permutations(sup):
                if any(a == b for a, b in zip(image, sup)):
                    continue
                mapping = list(range(1, n + 1))
                for label, target in zip(sup, image):
                    mapping[label - 1] = target
                yield tuple(mapping)


@lru_cache(maxsize=8)
def _ball_matrix(n: int, r: int) -> np.ndarray:
    """Identity-centered ball as an array of one-line rows (cap checked by callers)."""
    rows = np.fromiter(
        (label for p in enumerate_ball(n, r, cap=None) for label in p),
        dtype=np.int16,
        count=ball_size(n, r) * n,
    )
    rows.shape = (ball_size(n, r), n)
    rows.setflags(write=False)
    return rows


def _check_ball_cap(n: int, r: int, cap: int | None) -> None:
    total = ball_size(n, r)
    if cap is not None and total > cap:
        raise CapExceededError(f"ball of radius {r} in Sym_{n}", total, cap)


def _count_within(ball: np.ndarray, center: Perm, r: int) -> int:
    """How many rows of ``ball`` are at Hamming distance <= r from ``center``."""
    target = np.asarray(center, dtype=np.int16)
    total = 0
    for start in range(0, len(ball), 1 << 16):
        chunk = ball[start : start + (1 << 16)]
        total += int(np.count_nonzero((chunk != target).sum(axis=1) <= r))
    return total


def ball_intersection_size(
    pi: Perm, tau: Perm, r: int, cap: int | None = DEFAULT_BALL_CAP
) -> int:
    """
    |B_r(pi) n B_r(tau)| by enumerating one radius-r ball (the identity ball,
    translated onto pi) and testing the distance to tau.

    >>> ball_intersection_size((1, 2, 3, 4), (1, 2, 3, 4), 2)
    7
    """
    if len(pi) != len(tau):
        raise ValueError(f"size mismatch: {len(pi)} vs {len(tau)}")
    n = len(pi)
    _check_ball_cap(n, r, cap)
    ball = _ball_matrix(n, r)
    if pi == tau:
        return len(ball)
    # rows of B_r(pi) are sigma composed with pi, i.e. pi applied after sigma
    pi_arr = np.asarray(pi, dtype=np.int16)
    tau_arr = np.asarray(tau, dtype=np.int16)
    total = 0
    for start in range(0, len(ball), 1 << 16):
        chunk = pi_arr[ball[start : start + (1 << 16)] - 1]
        total += int(np.count_nonzero((chunk != tau_arr).sum(axis=1) <= r))
    return total


def intersection_by_type(ctype: CycleType, n: int, r: int, cap: int | None = DEFAULT_BALL_CAP) -> int:
    """
    |B_r(pi) n B_r(identity)| for any pi of the given cycle type; the count
    is type-invariant, so the canonical representative is used.
    """
    _check_ball_cap(n, r, cap)
    center = canonical_of_type(ctype, n)
    return _count_within(_ball_matrix(n, r), center, r)


@dataclass(frozen=True)
class CapacityResult:
    """Max intersection count with the full per-cycle-type table behind it."""

    n: int | None
    d: int
    r: int
    value: int
    witness_type: CycleType | None
    per_type: dict[CycleType, int]

    def to_json_dict(self) -> dict:
        """Stable JSON shape; counts as decimal strings."""
        return {
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "value": str(self.value),
            "witness_type": list(self.witness_type) if self.witness_type is not None else None,
            "table": [
                {"type": list(ctype), "count": str(count)}
                for ctype, count in self.per_type.items()
            ],
        }


def _max_result(n: int | None, d: int, r: int, per_type: dict[CycleType, int]) -> CapacityResult:
    if not per_type:
        return CapacityResult(n, d, r, 0, None, per_type)
    value = max(per_type.values())
    witness = next(ctype for ctype, count in per_type.items() if count == value)
    return CapacityResult(n, d, r, value, witness, per_type)


def _per_type_counts(
    types: list[CycleType], count_one, jobs: int = 1
) -> dict[CycleType, int]:
    """Evaluate count_one over types, optionally in parallel; merge in listed order."""
    if jobs > 1 and len(types) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(count_one, types))
    else:
        counts = [count_one(ctype) for ctype in types]
    return dict(zip(types, counts))


def _check_distance_args(n: int, d: int, r: int) -> None:
    if d == 1:
        raise ValueError("no two permutations are at Hamming distance exactly 1")
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")


def capacity_at_distance(
    n: int,
    d: int,
    r: int,
    cap: int | None = DEFAULT_BALL_CAP,
    jobs: int = 1,
    exhaustive_centers: bool = False,
) -> CapacityResult:
    """
    Largest |B_r(pi) n B_r(tau)| over center pairs at Hamming distance
    exactly d, with the full per-type table.  Balls of radius r around
    centers more than 2r apart are disjoint, so d >= 2r+1 returns 0 without
    enumerating.

    ``exhaustive_centers`` bypasses the type reduction and ranges over every
    weight-d center (n <= 6 only); it exists to sanity-check the reduction.
    """
    _check_distance_args(n, d, r)
    if d >= 2 * r + 1:
        return CapacityResult(n, d, r, 0, None, {})
    _check_ball_cap(n, r, cap)
    if exhaustive_centers:
        return _capacity_exhaustive_centers(n, d, r)
    ball = _ball_matrix(n, r)
    types = partitions_min2(d)

    def count_one(ctype: CycleType) -> int:
        return _count_within(ball, canonical_of_type(ctype, n), r)

    per_type = _per_type_counts(types, count_one, jobs)
    return _max_result(n, d, r, per_type)


def _capacity_exhaustive_centers(n: int, d: int, r: int) -> CapacityResult:
    if n > 6:
        raise ValueError(f"exhaustive center scan is limited to n <= 6, got {n}")
    ball = _ball_matrix(n, r)
    per_type: dict[CycleType, int] = {}
    for p in permutations(range(1, n + 1)):
        if hamming_weight(p) != d:
            continue
        count = _count_within(ball, p, r)
        ctype = cycle_type(p)
        if ctype in per_type and per_type[ctype] != count:
            raise AssertionError(
                f"type {ctype} gave both {per_type[ctype]} and {count}: type reduction is wrong"
            )
        per_type[ctype] = max(per_type.get(ctype, 0), count)
    return _max_result(n, d, r, per_type)


def capacity_at_least(
    n: int, d: int, r: int, cap: int | None = DEFAULT_BALL_CAP, jobs: int = 1
) -> CapacityResult:
    """
    Largest |B_r(pi) n B_r(tau)| over center pairs at Hamming distance >= d:
    the max of :func:`capacity_at_distance` over k from d to min(n, 2r).
    """
    _check_distance_args(n, d, r)
    per_type: dict[CycleType, int] = {}
    for k in range(d, min(n, 2 * r) + 1):
        if k == 1:
            continue
        per_type.update(capacity_at_distance(n, k, r, cap=cap, jobs=jobs).per_type)
    return _max_result(n, d, r, per_type)


def witness_intersection(
    pi: Perm, tau: Perm, r: int, cap: int | None = DEFAULT_BALL_CAP
) -> list[Perm]:
    """
    The explicit members of B_r(pi) n B_r(tau), in the enumeration order of
    the pi-centered ball.  Length always equals :func:`ball_intersection_size`.
    """
    if len(pi) != len(tau):
        raise ValueError(f"size mismatch: {len(pi)} vs {len(tau)}")
    n = len(pi)
    _check_ball_cap(n, r, cap)
    out = []
    for sigma in enumerate_ball(n, r, cap=cap):
        member = compose(sigma, pi)
        if hamming_distance(member, tau) <= r:
            out.append(member)
    return out


# ---------------------------------------------------------------------------
# structure-exploiting counters (no ball enumeration)
# ---------------------------------------------------------------------------


def subset_sum_counts(lengths: CycleType, max_total: int) -> list[int]:
    """
    counts[s] = number of sub-multisets of ``lengths`` with sum exactly s,
    for 0 <= s <= max_total.  Exact integers throughout.
    """
    counts = [0] * (max_total + 1)
    counts[0] = 1
    for length in sorted(lengths):
        for s in range(max_total, length - 1, -1):
            counts[s] += counts[s - length]
    return counts


def structured_count_even(ctype: CycleType, r: int) -> int:
    """
    |B_r(pi) n B_r(identity)| for a center pi of weight exactly 2r: every
    intersection element is a disjoint union of full cycles of pi with total
    length r, so the count is a subset-sum count over the cycle lengths.
    """
    if type_weight(ctype) != 2 * r:
        raise ValueError(f"type {ctype} has weight {type_weight(ctype)}, need {2 * r}")
    return subset_sum_counts(ctype, r)[r]


def structured_count_odd(ctype: CycleType, r: int) -> int:
    """
    |B_r(pi) n B_r(identity)| for a center pi of weight exactly 2r-1.

    Intersection elements are either unions of full cycles of pi totaling
    r-1 or r, or take one host cycle of length L, keep a contiguous cyclic
    arc of it of length a (2 <= a <= L-1, any of the L starting positions)
    as a shorter cycle, and add full other cycles totaling r-a.
    """
    if type_weight(ctype) != 2 * r - 1:
        raise ValueError(f"type {ctype} has weight {type_weight(ctype)}, need {2 * r - 1}")
    full = subset_sum_counts(ctype, r)
    total = full[r - 1] + full[r]
    lengths = sorted(ctype)
    for length in sorted(set(lengths)):
        if length < 3:
            continue
        multiplicity = lengths.count(length)
        rest = list(lengths)
        rest.remove(length)
        rest_counts = subset_sum_counts(tuple(rest), r)
        arcs = sum(rest_counts[r - a] for a in range(2, length) if r - a >= 0)
        total += multiplicity * length * arcs
    return total


def long_cycle_type(r: int, ell: int) -> CycleType:
    """
    Cycle type of the weight-(2r-1) center with dominant cycle length ell:
    the rest are transpositions, plus one 3-cycle when ell is even.

    >>> long_cycle_type(4, 5), long_cycle_type(6, 4)
    ((5, 2), (4, 3, 2, 2))
    """
    if ell % 2 == 1:
        s = (ell + 1) // 2
        ctype = (ell,) + (2,) * (r - s)
    else:
        s = ell // 2
        if r - s - 2 < 0:
            raise ValueError(f"even ell={ell} needs r >= {s + 2}")
        ctype = (ell, 3) + (2,) * (r - s - 2)
    ctype = tuple(sorted(ctype, reverse=True))
    assert type_weight(ctype) == 2 * r - 1
    return ctype


def arc_scenario_count(r: int, ell: int) -> int:
    """
    Arc-replacement count for the long-cycle center, assembled scenario by
    scenario instead of from the printed closed form: arcs can come from the
    dominant cycle with or without the extra 3-cycle present, and (even
    dominant cycle only) from the 3-cycle with or without the full dominant
    cycle present.  Kept independent of ``arc_contribution_closed_form`` so
    the audit suite can compare the two.
    """
    from .counting import binom

    t = r // 2
    if ell % 2 == 1:
        s = (ell + 1) // 2
        if r % 2 == 0:
            return ell * sum(binom(r - s, t - i) for i in range(1, s))
        return ell * sum(binom(r - s, t - i) for i in range(1, s - 1))
    s = ell // 2
    m = r - s - 2
    if r % 2 == 0:
        dominant_arc_even = ell * sum(binom(m, t - i) for i in range(1, s))
        dominant_arc_with_triple = ell * sum(binom(m, t - i - 2) for i in range(1, s))
        triple_arc = 3 * binom(m, t - 1)
        triple_arc_with_dominant = 3 * binom(m, t - s - 1)
        return dominant_arc_even + dominant_arc_with_triple + triple_arc + triple_arc_with_dominant
    dominant_arc_odd = ell * sum(binom(m, t - i) for i in range(1, s))
    dominant_arc_with_triple = ell * sum(binom(m, t - i - 1) for i in range(1, s))
    return dominant_arc_odd + dominant_arc_with_triple


def capacity_fast(r: int, d: int, max_types: int = DEFAULT_TYPE_CAP) -> CapacityResult:
    """
    Largest identity-ball intersection over all centers of weight exactly d,
    for d = 2r or d = 2r-1, via the structured counters.  No enumeration, so
    this scales to radii far beyond the brute-force oracle.
    """
    if d not in (2 * r, 2 * r - 1):
        raise ValueError(f"structured counters need d in {{2r-1, 2r}}, got d={d}, r={r}")
    types = partitions_min2(d)
    if len(types) > max_types:
        raise CapExceededError(f"cycle types of weight {d}", len(types), max_types)
    counter = structured_count_even if d == 2 * r else structured_count_odd
    per_type = {ctype: counter(ctype, r) for ctype in types}
    return _max_result(None, d, r, per_type)


def open_problem_probe(r: int, max_types: int = DEFAULT_TYPE_CAP) -> dict:
    """
    Compare the computed maximum at center distance 2r-1 with the closed-form
    lower bound, reporting both sides without asserting either.  Every type
    attaining the maximum is listed so near-misses and ties are visible.
    """
    from .counting import capacity_lower_bound

    result = capacity_fast(r, 2 * r - 1, max_types=max_types)
    bound = capacity_lower_bound(r)
    maximizers = [list(t) for t, c in result.per_type.items() if c == result.value]
    return {
        "r": r,
        "d": 2 * r - 1,
        "computed_max": str(result.value),
        "bound": str(bound),
        "witness_type": list(result.witness_type) if result.witness_type else None,
        "maximizer_types": maximizers,
        "equal": result.value == bound,
        "types_scanned": len(result.per_type),
    }
