"""
Exit criteria for the whole package, one test per criterion, each printing a
single PASS line (run with ``pytest tests/test_acceptance.py -v -s``).

Every expected number here is either a published reference value or computed
by an independent route inside the test (brute-force enumeration, exhaustive
group scans, closed forms evaluated by hand); tolerances and time limits are
fixed in the assertions.
"""

import itertools
import math
import random
import time

import numpy as np

from hamperm import cayley, counting, oracle, simulate, verify
from hamperm.perms import (
    cycle_type,
    distance_via_contacts,
    hamming_distance,
    hamming_weight,
    identity,
    relabel,
)


def _passed(number: int, label: str) -> None:
    print(f"CRITERION {number:02d} ({label}): PASS")


def test_criterion_01_weight7_profile_at_r4():
    start = time.perf_counter()
    types = oracle.partitions_min2(7)
    assert types == [(7,), (5, 2), (4, 3), (3, 2, 2)]
    profile = [oracle.intersection_by_type(t, 8, 4) for t in types]
    assert profile == [7, 10, 2, 8]
    assert oracle.capacity_at_distance(8, 7, 4).value == 10
    assert oracle.capacity_at_distance(8, 8, 4).value == 6
    assert oracle.capacity_at_least(8, 7, 4).value == 10
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"took {elapsed:.2f}s, limit 5s"
    _passed(1, "weight-7 profile at r=4")


def test_criterion_02_weight9_profile_at_r5():
    start = time.perf_counter()
    types = oracle.partitions_min2(9)
    assert len(types) == 8
    profile = [oracle.intersection_by_type(t, 9, 5) for t in types]
    assert profile == [9, 14, 12, 2, 12, 10, 18, 6]
    assert oracle.capacity_at_distance(9, 9, 5).value == 18
    assert oracle.capacity_at_least(9, 9, 5).value == 18
    # centers 10 apart need n >= 10 (Sym_9 has diameter 9), so the d=10
    # comparison runs at the smallest valid ambient size
    assert oracle.capacity_at_distance(10, 10, 5).value == 4
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"took {elapsed:.2f}s, limit 60s"
    _passed(2, "weight-9 profile at r=5")


def test_criterion_03_small_radius_values_and_n_independence():
    assert oracle.capacity_at_least(6, 3, 2).value == 3
    assert oracle.capacity_at_least(7, 5, 3).value == 5
    assert oracle.capacity_at_least(8, 3, 2).value == 3
    assert oracle.capacity_at_least(9, 5, 3).value == 5
    _passed(3, "small-radius capacities, n-independent")


def test_criterion_04_exact_formula_against_oracle():
    start = time.perf_counter()
    assert oracle.capacity_at_distance(8, 8, 4).value == counting.capacity_exact(4) == 6
    assert oracle.capacity_at_distance(10, 10, 5).value == counting.capacity_exact(5) == 4
    fast = oracle.capacity_fast(6, 12)
    assert fast.value == counting.capacity_exact(6) == 20
    brute = oracle.capacity_at_distance(12, 12, 6)
    assert brute.value == 20
    assert brute.per_type == fast.per_type
    elapsed = time.perf_counter() - start
    assert elapsed < 600.0, f"took {elapsed:.2f}s, limit 10min"
    _passed(4, "exact even-gap formula vs oracle up to r=6")


def test_criterion_05_structured_counter_gate():
    result = verify.suite_structured_gate(r_max=5)
    failures = [c for c in result["checks"] if not c["passed"]]
    assert result["passed"], f"structured counters disagree with brute force: {failures[:3]}"
    _passed(5, "structured counters vs brute force, r=2..5")


def test_criterion_06_published_capacities_via_structured_counters():
    for r, expected in ((6, 32), (7, 44), (8, 110), (9, 150)):
        start = time.perf_counter()
        value = oracle.capacity_fast(r, 2 * r - 1).value
        elapsed = time.perf_counter() - start
        assert value == expected
        assert value == counting.capacity_lower_bound(r)
        assert elapsed < 1.0, f"r={r} took {elapsed:.2f}s, limit 1s"
    _passed(6, "capacities for r=6..9 in under a second each")


def test_criterion_07_binomial_inequality_sweep():
    start = time.perf_counter()
    for t in range(2, 41):
        for k in range(1, (2 * t + 1) // 3 + 1):
            lhs, rhs, holds = counting.central_binomial_bound(t, k)
            assert holds, f"bound fails at t={t}, k={k}: {lhs} > {rhs}"
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s, limit 1s"
    _passed(7, "binomial inequality sweep t=2..40")


def test_criterion_08_long_cycle_argmax_and_closed_form_audit():
    for r in range(4, 41):
        ell, value = counting.best_long_cycle(r)
        assert ell == (5 if r % 2 == 0 else 7)
        assert value == counting.capacity_lower_bound(r)
    audit = verify.suite_closed_form_audit(r_max=12, brute_r_max=6)
    assert audit["passed"]
    even_rows = [row for row in audit["report"] if row["branch"] == "even"]
    assert even_rows
    for row in even_rows:
        assert row["printed_forms_matching_oracle"], f"no printed form matches at {row}"
    matched = {form for row in even_rows for form in row["printed_forms_matching_oracle"]}
    print(f"  even-branch closed forms matching ground truth: {sorted(matched)}")
    _passed(8, "long-cycle argmax sweep and closed-form audit")


def test_criterion_09_cayley_graph_checks():
    g4 = cayley.build_graph(4)
    assert len(g4.neighbors[0]) == 20
    assert cayley.weight_profile(g4, identity(4)) == {2: 6, 3: 8, 4: 6}

    for n in (3, 4, 5):
        g = cayley.build_graph(n)
        for src in g.perms:
            dist = cayley.distances_from(g, src)
            for v, q in enumerate(g.perms):
                assert dist[v] == hamming_distance(src, q)

    ok4, witness4 = cayley.check_distance_regularity(g4)
    assert not ok4
    assert witness4.k == 4 and (witness4.i, witness4.j) == (2, 2)
    assert {witness4.count_a, witness4.count_b} == {0, 2}
    ok5, witness5 = cayley.check_distance_regularity(cayley.build_graph(5))
    assert not ok5 and witness5 is not None
    _passed(9, "Cayley graph distances and regularity witnesses")


def test_criterion_10_simulator_guarantee_and_tight_instances():
    code = simulate.greedy_code(8, 8)
    summary = simulate.run_trials(code, channels=7, r=4, trials=1000, seed=42)
    assert summary["unique"] == summary["correct"] == 1000

    code7 = simulate.greedy_code(8, 7)
    summary7 = simulate.run_trials(code7, channels=11, r=4, trials=1000, seed=43)
    assert summary7["unique"] == summary7["correct"] == 1000

    c1, c2, outputs = simulate.adversarial_witness(4, "even")
    assert len(outputs) == 6
    pair_code = simulate.Codebook(n=8, d=8, words=(c1, c2))
    assert set(simulate.decode(outputs, pair_code, 4).candidates) == {c1, c2}
    extra = next(s for s in oracle.enumerate_ball(8, 4) if hamming_distance(s, c2) > 4)
    retry = simulate.decode(list(outputs) + [extra], pair_code, 4)
    assert retry.unique and retry.candidates == (c1,)

    c1o, c2o, outputs_odd = simulate.adversarial_witness(4, "odd")
    assert len(outputs_odd) == 10
    pair_code_odd = simulate.Codebook(n=8, d=7, words=(c1o, c2o))
    assert set(simulate.decode(outputs_odd, pair_code_odd, 4).candidates) == {c1o, c2o}
    extra_odd = next(s for s in oracle.enumerate_ball(8, 4) if hamming_distance(s, c2o) > 4)
    retry_odd = simulate.decode(list(outputs_odd) + [extra_odd], pair_code_odd, 4)
    assert retry_odd.unique and retry_odd.candidates == (c1o,)
    _passed(10, "decoder guarantee at N+1 channels, tight at N")


def test_criterion_11_open_problem_probe():
    start = time.perf_counter()
    reports = [oracle.open_problem_probe(r) for r in (10, 11)]
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"took {elapsed:.2f}s, limit 10s"
    for report in reports:
        assert report == oracle.open_problem_probe(report["r"])  # deterministic
        assert set(report) >= {"r", "computed_max", "bound", "witness_type", "equal"}
    assert reports[0]["bound"] == str(2 * math.comb(7, 5) + 5 * math.comb(8, 4))
    assert reports[1]["bound"] == str(2 * math.comb(7, 5) + 7 * math.comb(8, 4))
    print(
        "  probe r=10: max={computed_max} bound={bound} equal={equal}".format(**reports[0])
    )
    print(
        "  probe r=11: max={computed_max} bound={bound} equal={equal}".format(**reports[1])
    )
    _passed(11, "open-problem probe r=10,11")


def test_criterion_12_metric_and_enumeration_properties():
    # sphere/ball formulas vs exhaustive weight histograms up to n=8
    for n in range(2, 9):
        histogram = [0] * (n + 1)
        for p in itertools.permutations(range(n)):
            histogram[sum(1 for i in range(n) if p[i] != i)] += 1
        for r in range(n + 1):
            assert counting.sphere_size(n, r) == histogram[r]
            assert counting.ball_size(n, r) == sum(histogram[: r + 1])

    for n in range(1, 41):
        assert sum(counting.sphere_size(n, r) for r in range(n + 1)) == math.factorial(n)

    # sampled pairs never at distance 1, metric axioms hold
    rng = random.Random(2024)
    for _ in range(10_000):
        n = rng.randint(2, 12)
        p = tuple(rng.sample(range(1, n + 1), n))
        q = tuple(rng.sample(range(1, n + 1), n))
        s = tuple(rng.sample(range(1, n + 1), n))
        dpq = hamming_distance(p, q)
        assert dpq != 1
        assert dpq == hamming_distance(q, p)
        assert (dpq == 0) == (p == q)
        assert hamming_distance(p, s) <= dpq + hamming_distance(q, s)

    # contact-set distance route agrees on all of Sym_n, n <= 6
    for n in range(2, 7):
        group = list(itertools.permutations(range(1, n + 1)))
        for p in group:
            for q in group:
                assert distance_via_contacts(p, q) == hamming_distance(p, q)

    # weight equals the cycle-type total on all of Sym_6
    for p in itertools.permutations(range(1, 7)):
        assert hamming_weight(p) == sum(cycle_type(p))

    # intersection counts are invariant under relabeling the second center
    np_rng = np.random.default_rng(7)
    n, r = 10, 4
    for weight in range(2, 9):
        for ctype in oracle.partitions_min2(weight):
            center = oracle.canonical_of_type(ctype, n)
            reference = oracle.ball_intersection_size(center, identity(n), r)
            for _ in range(100):
                f = tuple(int(v) + 1 for v in np_rng.permutation(n))
                relabeled = relabel(f, center)
                assert oracle.ball_intersection_size(relabeled, identity(n), r) == reference
    _passed(12, "metric axioms, enumeration formulas, invariances")
