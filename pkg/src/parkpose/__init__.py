"""Interval parking functions, reachability, and the bubble-sorting order on S_n."""

from .parking import (
    IntervalPair, ParkingTrace, enumerate_ipfs, enumerate_parking_functions,
    ipf_completions, is_ipf, is_parking_function, outcome, run_algorithm_a,
    run_algorithm_b,
)
from .patterns import contains_pattern, exceedances, is_ar, reachability_sufficiency_report
from .permutation import (
    IntVector, Permutation, bracket, bruhat_leq, compose, conjugate, identity,
    inverse, left_weak_leq, length, longest, simple, symmetric_group, transposition,
)
from .posets import PosetRelation, bruhat_relation, covers, transitive_closure, weak_relation
from .reachability import (
    FiberProfile, PermPair, bioutcome, c_value, d_value, fiber_count, fiber_profile,
    is_reachable, j_bound, pseudoreachability_relation, reachability_relation,
    refine_to_cover_chain,
)
from .sorting import LambdaVector, from_lambda, hat, lambda_vector, sorting_leq, sorting_relation

__version__ = "0.1.0"
