"""Enumeration oracle, type reduction, and structured counters."""

import itertools
import random

import pytest

from hamperm.counting import ball_size, binom
from hamperm.oracle import (
    CapExceededError,
    arc_scenario_count,
    ball_intersection_size,
    canonical_of_type,
    capacity_at_distance,
    capacity_at_least,
    capacity_fast,
    enumerate_ball,
    intersection_by_type,
    long_cycle_type,
    open_problem_probe,
    partitions_min2,
    structured_count_even,
    structured_count_odd,
    subset_sum_counts,
    witness_intersection,
)
from hamperm.perms import (
    cycle_type,
    cycles,
    hamming_distance,
    hamming_weight,
    identity,
    relabel,
)


class TestEnumerateBall:
    @pytest.mark.parametrize("n,r", [(4, 2), (5, 3), (6, 3), (6, 0)])
    def test_count_matches_formula(self, n, r):
        elements = list(enumerate_ball(n, r))
        assert len(elements) == ball_size(n, r)
        assert len(set(elements)) == len(elements)
        assert all(hamming_weight(p) <= r for p in elements)

    def test_radius_zero_is_identity(self):
        assert list(enumerate_ball(5, 0)) == [identity(5)]

    def test_order_is_stable(self):
        assert list(enumerate_ball(5, 3)) == list(enumerate_ball(5, 3))

    def test_weights_nondecreasing(self):
        weights = [hamming_weight(p) for p in enumerate_ball(5, 4)]
        assert weights == sorted(weights)

    def test_cap(self):
        with pytest.raises(CapExceededError) as exc:
            list(enumerate_ball(8, 6, cap=100))
        assert exc.value.required == ball_size(8, 6)
        assert exc.value.allowed == 100


class TestPartitions:
    def test_small_cases(self):
        assert partitions_min2(0) == [()]
        assert partitions_min2(1) == []
        assert partitions_min2(4) == [(4,), (2, 2)]
        assert partitions_min2(7) == [(7,), (5, 2), (4, 3), (3, 2, 2)]
        assert len(partitions_min2(9)) == 8

    def test_parts_and_sums(self):
        for k in range(20):
            seen = set()
            for ctype in partitions_min2(k):
                assert sum(ctype) == k
                assert all(part >= 2 for part in ctype)
                assert ctype == tuple(sorted(ctype, reverse=True))
                seen.add(ctype)
            assert len(seen) == len(partitions_min2(k))


class TestCanonicalOfType:
    def test_layout(self):
        assert canonical_of_type((3, 2), 6) == (2, 3, 1, 5, 4, 6)
        assert cycle_type(canonical_of_type((5, 2), 8)) == (5, 2)
        assert canonical_of_type((), 4) == identity(4)

    def test_weight_too_big(self):
        with pytest.raises(ValueError):
            canonical_of_type((5, 4), 8)


class TestBallIntersection:
    def test_same_center(self):
        assert ball_intersection_size(identity(5), identity(5), 2) == ball_size(5, 2)

    def test_weight7_profile(self):
        values = [intersection_by_type(t, 8, 4) for t in partitions_min2(7)]
        assert values == [7, 10, 2, 8]

    def test_translation_independence(self):
        # the count only depends on the relative displacement of the centers
        rng = random.Random(13)
        base = canonical_of_type((3, 2), 7)
        expected = ball_intersection_size(base, identity(7), 3)
        for _ in range(20):
            word = list(range(1, 8))
            rng.shuffle(word)
            f = tuple(word)
            assert ball_intersection_size(relabel(f, base), identity(7), 3) == expected

    def test_empty_type_gives_ball(self):
        assert intersection_by_type((), 6, 3) == ball_size(6, 3)

    def test_brute_force_cross_check(self):
        # small enough to intersect the balls by double enumeration
        pi = canonical_of_type((3,), 5)
        lhs = {
            sigma
            for sigma in itertools.permutations(range(1, 6))
            if hamming_distance(sigma, pi) <= 2 and hamming_weight(sigma) <= 2
        }
        assert ball_intersection_size(pi, identity(5), 2) == len(lhs)


class TestCapacity:
    def test_exact_distance_values(self):
        assert capacity_at_distance(8, 7, 4).value == 10
        assert capacity_at_distance(8, 8, 4).value == 6
        assert capacity_at_distance(8, 7, 4).witness_type == (5, 2)

    def test_at_least_values(self):
        assert capacity_at_least(6, 3, 2).value == 3
        assert capacity_at_least(7, 5, 3).value == 5
        assert capacity_at_least(8, 7, 4).value == 10

    def test_disjoint_balls(self):
        result = capacity_at_distance(9, 9, 4)  # d = 2r+1
        assert result.value == 0
        assert result.witness_type is None
        assert result.per_type == {}

    def test_result_invariants(self):
        result = capacity_at_distance(7, 5, 3)
        assert result.value == max(result.per_type.values())
        assert result.per_type[result.witness_type] == result.value
        assert set(result.per_type) == set(partitions_min2(5))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            capacity_at_distance(6, 1, 2)
        with pytest.raises(ValueError):
            capacity_at_distance(6, 7, 2)
        with pytest.raises(ValueError):
            capacity_at_least(6, 1, 2)

    def test_distance_zero_is_ball(self):
        assert capacity_at_distance(5, 0, 2).value == ball_size(5, 2)

    def test_jobs_do_not_change_results(self):
        seq = capacity_at_least(7, 5, 3, jobs=1)
        par = capacity_at_least(7, 5, 3, jobs=4)
        assert seq == par

    @pytest.mark.parametrize("n,r", [(8, 4), (9, 5)])
    def test_at_least_equals_exact_at_odd_gap(self, n, r):
        # centers 2r-1 apart dominate everything farther away
        assert (
            capacity_at_least(n, 2 * r - 1, r).value
            == capacity_at_distance(n, 2 * r - 1, r).value
        )

    def test_zero_exactly_past_double_radius(self):
        for r in (2, 3):
            n = 2 * r + 2
            for d in range(2, min(n, 2 * r) + 1):
                assert capacity_at_distance(n, d, r).value > 0
            assert capacity_at_distance(n, 2 * r + 1, r).value == 0

    @pytest.mark.parametrize("n,d,r", [(5, 4, 2), (6, 5, 3), (6, 4, 2)])
    def test_type_reduction_matches_exhaustive_centers(self, n, d, r):
        typed = capacity_at_distance(n, d, r)
        naive = capacity_at_distance(n, d, r, exhaustive_centers=True)
        assert typed.value == naive.value
        assert typed.per_type == naive.per_type

    def test_json_shape(self):
        doc = capacity_at_distance(8, 7, 4).to_json_dict()
        assert doc["value"] == "10"
        assert doc["witness_type"] == [5, 2]
        assert {"type": [5, 2], "count": "10"} in doc["table"]


class TestSubsetSums:
    def test_counts(self):
        assert subset_sum_counts((2, 2), 4) == [1, 0, 2, 0, 1]
        assert subset_sum_counts((), 3) == [1, 0, 0, 0]

    def test_total_is_power_of_two(self):
        lengths = (2, 3, 3, 4)
        counts = subset_sum_counts(lengths, sum(lengths))
        assert sum(counts) == 2 ** len(lengths)


class TestStructuredCounters:
    def test_even_reference_values(self):
        assert structured_count_even((2, 2), 2) == 2
        assert structured_count_even((2, 2, 2, 2), 4) == binom(4, 2)
        assert structured_count_even((2,) * 6, 6) == binom(6, 3)

    def test_odd_reference_values(self):
        assert structured_count_odd((5, 2), 4) == 10
        assert structured_count_odd((7, 2), 5) == 14
        assert structured_count_odd((3,), 2) == 3
        assert structured_count_odd((3, 3, 3), 5) == 18

    def test_weight_validation(self):
        with pytest.raises(ValueError):
            structured_count_even((3, 2), 3)
        with pytest.raises(ValueError):
            structured_count_odd((3, 2), 4)

    @pytest.mark.parametrize("r", [2, 3])
    def test_against_brute_force(self, r):
        for ctype in partitions_min2(2 * r):
            assert structured_count_even(ctype, r) == intersection_by_type(ctype, 2 * r, r)
        for ctype in partitions_min2(2 * r - 1):
            assert structured_count_odd(ctype, r) == intersection_by_type(ctype, 2 * r + 1, r)


class TestLongCycleTypes:
    def test_shapes(self):
        assert long_cycle_type(4, 5) == (5, 2)
        assert long_cycle_type(6, 4) == (4, 3, 2, 2)
        assert long_cycle_type(5, 9) == (9,)

    def test_arc_scenarios_match_brute(self):
        for r in (4, 5):
            n = 2 * r - 1
            for ell in (4,) if r == 4 else (4, 6):
                ctype = long_cycle_type(r, ell)
                total = intersection_by_type(ctype, n, r)
                full = subset_sum_counts(ctype, r)
                assert arc_scenario_count(r, ell) == total - full[r - 1] - full[r]


class TestCapacityFast:
    def test_small_radii(self):
        assert capacity_fast(2, 3).value == 3
        assert capacity_fast(2, 4).value == 2
        assert capacity_fast(3, 5).value == 5

    def test_published_values(self):
        for r, expected in ((6, 32), (7, 44), (8, 110), (9, 150)):
            assert capacity_fast(r, 2 * r - 1).value == expected

    def test_even_matches_closed_form(self):
        from hamperm.counting import capacity_exact

        for r in range(4, 11):
            assert capacity_fast(r, 2 * r).value == capacity_exact(r)

    def test_bad_distance(self):
        with pytest.raises(ValueError):
            capacity_fast(4, 6)

    def test_type_cap(self):
        with pytest.raises(CapExceededError):
            capacity_fast(20, 39, max_types=10)


class TestWitnessIntersection:
    def test_radius_zero(self):
        assert witness_intersection(identity(4), identity(4), 0) == [identity(4)]

    def test_transposition_unions(self):
        pi = canonical_of_type((2, 2, 2, 2), 8)
        members = witness_intersection(pi, identity(8), 4)
        assert len(members) == 6
        for sigma in members:
            assert hamming_weight(sigma) == 4
            assert all(cyc in cycles(pi) for cyc in cycles(sigma))

    def test_length_matches_count(self):
        rng = random.Random(14)
        for _ in range(10):
            n = rng.randint(4, 7)
            word = list(range(1, n + 1))
            rng.shuffle(word)
            pi = tuple(word)
            r = rng.randint(0, 3)
            members = witness_intersection(pi, identity(n), r)
            assert len(members) == ball_intersection_size(pi, identity(n), r)
            assert len(set(members)) == len(members)


class TestOpenProblemProbe:
    def test_report_shape_and_determinism(self):
        report = open_problem_probe(10)
        assert set(report) == {
            "r", "d", "computed_max", "bound", "witness_type",
            "maximizer_types", "equal", "types_scanned",
        }
        assert report == open_problem_probe(10)
        assert report["d"] == 19
        assert report["bound"] == str(2 * binom(7, 5) + 5 * binom(8, 4))
