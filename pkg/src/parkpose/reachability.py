"""
The bioutcome map and reachability between permutations.

An IPF (a, b) determines the pair ``(outcome(a), outcome(b*)*)``; a pair of
permutations is reachable when some IPF produces it. Reachability is decided
without enumeration by the interval test in :func:`is_reachable`, and the
exact number of IPFs over a pair is ``prod(c_i * d_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import NamedTuple

import numpy as np

from .parking import IntervalPair, outcome, run_algorithm_a
from .permutation import (
    Permutation, conjugate, hat, inverse, length, simple, compose, unhat,
    symmetric_group,
)
from .posets import PosetRelation, _check_relation_degree, transitive_closure

__all__ = [
    "PermPair", "FiberProfile",
    "c_value", "j_bound", "d_value", "fiber_profile", "fiber_count",
    "bioutcome", "is_reachable", "count_criterion",
    "reachability_relation", "pseudoreachability_relation", "refine_to_cover_chain",
]


class PermPair(NamedTuple):
    x: Permutation
    y: Permutation

    def __str__(self):
        return f"{self.x} {self.y}"


@dataclass(frozen=True)
class FiberProfile:
    c: tuple[int, ...]
    d: tuple[int, ...]

    @property
    def phi(self) -> int:
        return prod(ci * di for ci, di in zip(self.c, self.d))


def _same_degree(x, y):
    if len(x) != len(y):
        raise ValueError(f"degree mismatch: {len(x)} vs {len(y)}")


def _check_index(x, i):
    if not 1 <= i <= len(x):
        raise IndexError(f"index {i} outside [1, {len(x)}]")


def c_value(x: Permutation, i: int) -> int:
    """Length of the run of spots ending at x(i) filled by cars 1..i.

    This is the number of preferences a(i) that send car i to spot x(i).
    """
    _check_index(x, i)
    xinv = inverse(x).values
    top = x(i)
    j = 1
    while j < top and xinv[top - j - 1] <= i:
        j += 1
    return j


def j_bound(y: Permutation, i: int) -> int:
    """Length of the run of values y(i), y(i)+1, ... that sit at positions >= i."""
    _check_index(y, i)
    yinv = inverse(y).values
    n = len(y)
    start = y(i)
    j = 1
    while j < n + 1 - start and yinv[start + j - 1] >= i:
        j += 1
    return j


def d_value(x: Permutation, y: Permutation, i: int) -> int:
    """Number of offsets k in [0, J_i - 1] with y(i) + k >= x(i)."""
    _same_degree(x, y)
    _check_index(x, i)
    jb = j_bound(y, i)
    return sum(1 for k in range(jb) if y(i) + k >= x(i))


def fiber_profile(x: Permutation, y: Permutation) -> FiberProfile:
    _same_degree(x, y)
    n = len(x)
    return FiberProfile(
        tuple(c_value(x, i) for i in range(1, n + 1)),
        tuple(d_value(x, y, i) for i in range(1, n + 1)),
    )


def fiber_count(x: Permutation, y: Permutation) -> int:
    """Number of IPFs whose bioutcome is (x, y)."""
    return fiber_profile(x, y).phi


def bioutcome(pair: IntervalPair) -> PermPair:
    trace = run_algorithm_a(pair.a)
    if trace.outcome is None or any(p > q for p, q in zip(trace.outcome, pair.b)):
        raise ValueError(f"({pair}) is not an interval parking function")
    y = conjugate(outcome(conjugate(pair.b)))
    return PermPair(trace.outcome, y)


def is_reachable(x: Permutation, y: Permutation) -> bool:
    """True iff [y(i), x(i)] is contained in {y(i), ..., y(n)} for every i."""
    _same_degree(x, y)
    yv, xv = y.values, x.values
    for i in range(len(xv)):
        tail = set(yv[i:])
        if any(v not in tail for v in range(yv[i], xv[i] + 1)):
            return False
    return True


def count_criterion(x: Permutation, y: Permutation) -> bool:
    """Reachability decided by d_i > 0 for all i."""
    _same_degree(x, y)
    return all(d_value(x, y, i) > 0 for i in range(1, len(x) + 1))


def _next_larger_before(perms) -> np.ndarray:
    # out[p, i] = smallest value left of position i that exceeds perms[p](i), else n + 1
    n = len(perms[0])
    out = np.full((len(perms), n), n + 1, dtype=np.int16)
    for p, y in enumerate(perms):
        v = y.values
        for i in range(n):
            bigger = [u for u in v[:i] if u > v[i]]
            if bigger:
                out[p, i] = min(bigger)
    return out


def reachability_relation(n: int) -> PosetRelation:
    """The full (non-transitive) reachability relation on S_n."""
    _check_relation_degree(n)
    perms = symmetric_group(n)
    values = np.array([p.values for p in perms], dtype=np.int16)
    ceiling = _next_larger_before(perms)
    # x reaches y iff x(i) < ceiling[y, i] for every i
    m = np.all(values[:, None, :] < ceiling[None, :, :], axis=2)
    return PosetRelation("reach", perms, m)


def pseudoreachability_relation(n: int) -> PosetRelation:
    return transitive_closure(reachability_relation(n), "pseudo")


def refine_to_cover_chain(x: Permutation, y: Permutation) -> list[Permutation]:
    """
    A chain y = x_0, x_1, ..., x_m = x with m = l(x) - l(y), in which each
    step is reachable and raises length by exactly one.
    """
    if not is_reachable(x, y):
        raise ValueError(f"{x} does not reach {y}")
    return _chain(x, y)


def _chain(x: Permutation, y: Permutation) -> list[Permutation]:
    gap = length(x) - length(y)
    if gap == 0:
        return [y]
    if gap == 1:
        return [y, x]
    n = len(x)
    if x(n) == y(n):
        return [unhat(z, y(n)) for z in _chain(hat(x), hat(y))]
    # here x(n) < y(n); step up from y by swapping the values y(n) - 1 and y(n)
    z = compose(simple(y(n) - 1, n), y)
    return [y] + _chain(x, z)
