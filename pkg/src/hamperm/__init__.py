"""Hamming-metric permutation toolkit."""

__version__ = "0.1.0"

from .counting import (
    ball_size,
    best_long_cycle,
    capacity_exact,
    capacity_lower_bound,
    central_binomial_bound,
    derangement_number,
    generator_count,
    long_cycle_intersection,
    sphere_size,
)
from .oracle import (
    CapacityResult,
    CapExceededError,
    ball_intersection_size,
    capacity_at_distance,
    capacity_at_least,
    capacity_fast,
    enumerate_ball,
    intersection_by_type,
    open_problem_probe,
    partitions_min2,
    structured_count_even,
    structured_count_odd,
    witness_intersection,
)
from .perms import (
    PermutationError,
    compose,
    contacts,
    cycle_type,
    cycles,
    distance_via_contacts,
    from_cycles,
    hamming_distance,
    hamming_weight,
    identity,
    inverse,
    parse,
    relabel,
    support,
)

__all__ = [name for name in dir() if not name.startswith("_")]
