"""
Parking algorithms and (interval) parking function recognition.

Car ``i`` prefers spot ``a(i)`` and drives forward to the first free spot.
Under Algorithm A it may go as far as spot n; under Algorithm B it gives up
after spot ``b(i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterator

from ._config import check_degree
from .permutation import IntVector, Permutation, componentwise_leq

__all__ = [
    "ParkingTrace", "IntervalPair",
    "run_algorithm_a", "run_algorithm_b", "outcome",
    "is_parking_function", "is_ipf", "ipf_completions",
    "enumerate_parking_functions", "enumerate_ipfs",
    "count_parking_functions", "count_ipfs",
]


@dataclass(frozen=True)
class ParkingTrace:
    """Result of a parking run.

    ``outcome`` is the permutation of spots (car i parks in ``outcome(i)``) or
    None when some car could not park; ``failed_car`` is then the 1-based
    index of the first such car.
    """

    outcome: Permutation | None
    failed_car: int | None = None

    @property
    def success(self) -> bool:
        return self.outcome is not None

    def __bool__(self):
        return self.success


@dataclass(frozen=True, order=True)
class IntervalPair:
    a: IntVector
    b: IntVector

    def __post_init__(self):
        a, b = self.a, self.b
        if not isinstance(a, IntVector):
            object.__setattr__(self, "a", IntVector(tuple(a)))
        if not isinstance(b, IntVector):
            object.__setattr__(self, "b", IntVector(tuple(b)))
        if len(self.a) != len(self.b):
            raise ValueError(f"degree mismatch: {len(self.a)} vs {len(self.b)}")

    @property
    def n(self) -> int:
        return len(self.a)

    def __str__(self):
        return f"{self.a} | {self.b}"

    @classmethod
    def parse(cls, text: str) -> IntervalPair:
        """Parse ``"a | b"``."""
        left, sep, right = text.partition("|")
        if not sep:
            raise ValueError(f"expected 'a | b', got {text!r}")
        return cls(IntVector.parse(left), IntVector.parse(right))


def _park(prefs, limits) -> ParkingTrace:
    n = len(prefs)
    occupied = [False] * (n + 1)
    spots = []
    for car, (lo, hi) in enumerate(zip(prefs, limits), start=1):
        spot = lo
        while spot <= hi and occupied[spot]:
            spot += 1
        if spot > hi:
            return ParkingTrace(None, car)
        occupied[spot] = True
        spots.append(spot)
    return ParkingTrace(Permutation(tuple(spots)))


def run_algorithm_a(a: IntVector) -> ParkingTrace:
    n = len(a)
    return _park(tuple(a), (n,) * n)


def run_algorithm_b(pair: IntervalPair) -> ParkingTrace:
    """Run cars on their feasible intervals [a(i), b(i)].

    ``a <= b`` is not required; a car with a(i) > b(i) fails on arrival.
    """
    return _park(tuple(pair.a), tuple(pair.b))


def outcome(a: IntVector) -> Permutation:
    """Outcome of a parking function; ValueError if ``a`` is not one."""
    trace = run_algorithm_a(a)
    if trace.outcome is None:
        raise ValueError(f"{a} is not a parking function (car {trace.failed_car} fails)")
    return trace.outcome


def is_parking_function(a) -> bool:
    return all(v <= i for i, v in enumerate(sorted(a), start=1))


def is_ipf(pair: IntervalPair) -> bool:
    """Closed-form test: a is a parking function and outcome(a) <= b."""
    if not is_parking_function(pair.a):
        return False
    return componentwise_leq(outcome(pair.a), pair.b)


def ipf_completions(a: IntVector) -> list[IntVector]:
    """Every b making (a, b) an IPF, in lexicographic order. There are n! of them."""
    x = run_algorithm_a(a).outcome
    if x is None:
        raise ValueError(f"{a} is not a parking function")
    n = len(a)
    return [IntVector(b) for b in product(*(range(v, n + 1) for v in x))]


def enumerate_parking_functions(n: int) -> Iterator[IntVector]:
    """Parking functions of length n in lexicographic order."""
    check_degree(n)
    return (IntVector(a) for a in product(range(1, n + 1), repeat=n) if is_parking_function(a))


def enumerate_ipfs(n: int) -> Iterator[IntervalPair]:
    """Interval parking functions, lexicographic in a, then in b."""
    check_degree(n)
    return (
        IntervalPair(a, b)
        for a in enumerate_parking_functions(n)
        for b in ipf_completions(a)
    )


def count_parking_functions(n: int) -> int:
    return (n + 1) ** (n - 1)


def count_ipfs(n: int) -> int:
    return factorial(n) * (n + 1) ** (n - 1)

