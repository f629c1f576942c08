"""
Pattern containment, AR permutations, and two sufficient conditions for
reachability of Bruhat-related pairs.

A permutation is AR when no value i sits later than position i + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .permutation import Permutation, bracket, bruhat_leq, inverse, simple
from .reachability import is_reachable

__all__ = [
    "contains_pattern", "avoids", "avoids_213", "is_ar", "AR_MODES",
    "ar_permutations", "exceedances", "SufficiencyReport",
    "reachability_sufficiency_report",
]

AR_MODES = ("position", "bracket", "pattern", "word")

_P213 = Permutation((2, 1, 3))
_P231 = Permutation((2, 3, 1))
_P321 = Permutation((3, 2, 1))


def contains_pattern(host: Permutation, pattern: Permutation) -> bool:
    """True iff some subsequence of ``host`` is order-isomorphic to ``pattern``."""
    n, m = len(host), len(pattern)
    if m > n:
        raise ValueError(f"pattern of length {m} longer than host of length {n}")
    h, p = host.values, pattern.values

    def extend(start: int, chosen: list[int]) -> bool:
        depth = len(chosen)
        if depth == m:
            return True
        for idx in range(start, n - (m - depth) + 1):
            v = h[idx]
            if all((h[c] < v) == (p[k] < p[depth]) for k, c in enumerate(chosen)):
                chosen.append(idx)
                if extend(idx + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


def avoids(host: Permutation, pattern: Permutation) -> bool:
    if len(pattern) > len(host):
        return True
    return not contains_pattern(host, pattern)


def avoids_213(x: Permutation) -> bool:
    return avoids(x, _P213)


@lru_cache(maxsize=None)
def _decreasing_word_products(n: int) -> frozenset:
    # products s_{i1} ... s_{ik} with n-1 >= i1 > ... > ik >= 1
    found = set()
    for k in range(n):
        for idx in combinations(range(n - 1, 0, -1), k):
            x = Permutation(tuple(range(1, n + 1)))
            for i in reversed(idx):
                x = simple(i, n) * x
            found.add(x)
    return frozenset(found)


def is_ar(x: Permutation, mode: str = "position") -> bool:
    n = len(x)
    if mode == "position":
        return all(p <= v + 1 for v, p in enumerate(inverse(x).values, start=1))
    if mode == "bracket":
        return all(bracket(x, j, j) == 1 for j in range(1, n + 1))
    if mode == "pattern":
        return avoids(x, _P231) and avoids(x, _P321)
    if mode == "word":
        return x in _decreasing_word_products(n)
    raise ValueError(f"unknown AR mode {mode!r}; expected one of {AR_MODES}")


def ar_permutations(perms, mode: str = "position") -> list[Permutation]:
    return [x for x in perms if is_ar(x, mode)]


def exceedances(x: Permutation) -> frozenset[int]:
    return frozenset(k for k, v in enumerate(x.values, start=1) if v > k)


@dataclass(frozen=True)
class SufficiencyReport:
    bruhat_related: bool
    y_avoids_213: bool
    x_is_ar: bool
    reachable: bool

    @property
    def consistent(self) -> bool:
        """False only if a sufficient condition holds yet the pair is unreachable."""
        sufficient = self.bruhat_related and (self.y_avoids_213 or self.x_is_ar)
        return self.reachable or not sufficient


def reachability_sufficiency_report(x: Permutation, y: Permutation) -> SufficiencyReport:
    return SufficiencyReport(
        bruhat_related=bruhat_leq(y, x),
        y_avoids_213=avoids_213(y),
        x_is_ar=is_ar(x),
        reachable=is_reachable(x, y),
    )
