"""
Conormal forms and the bubble-sorting order on S_n.

Every permutation factors uniquely as a reduced word ``v_{n-1} ... v_1``
where ``v_k = s_j s_{j+1} ... s_k`` is a (possibly empty) suffix of
``s_1 ... s_k``. The block lengths form the lambda vector, written
most-significant first: ``(len(v_{n-1}), ..., len(v_1))``. Comparing lambda
vectors entrywise gives the bubble-sorting order, a product of chains of
sizes 2, 3, ..., n.

>>> x = Permutation.parse("2431")
>>> print(lambda_vector(x))
(3,1,0)
>>> conormal_word(x)
[1, 2, 3, 2]
>>> from_lambda(lambda_vector(x)) == x
True
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .permutation import Permutation, hat, identity, symmetric_group
from .posets import PosetRelation, _check_relation_degree
from .reachability import is_reachable

__all__ = [
    "LambdaVector", "hat", "lambda_vector", "from_lambda", "conormal_word",
    "word_product", "lambda_box", "sorting_leq", "sorting_relation",
    "sorting_meet", "sorting_join", "complement",
    "suffix_multiply_preserves_reachability_check",
]


@dataclass(frozen=True, order=True)
class LambdaVector:
    """Block lengths (lambda_{n-1}, ..., lambda_1), with 0 <= lambda_k <= k."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        top = len(entries)
        for pos, e in enumerate(entries):
            k = top - pos
            if not 0 <= e <= k:
                raise ValueError(f"lambda_{k} = {e} outside [0, {k}]")

    @property
    def n(self) -> int:
        return len(self.entries) + 1

    def __getitem__(self, k: int) -> int:
        """lambda_k, for 1 <= k <= n - 1."""
        if not 1 <= k < self.n:
            raise IndexError(f"lambda index {k} outside [1, {self.n - 1}]")
        return self.entries[self.n - 1 - k]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.entries) + ")"

    @classmethod
    def parse(cls, text: str) -> LambdaVector:
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts = [p for p in body.replace(" ", ",").split(",") if p]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"malformed lambda vector {text!r}: {exc}") from None

    def leq(self, other: LambdaVector) -> bool:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        return all(a <= b for a, b in zip(self.entries, other.entries))


def lambda_vector(x: Permutation) -> LambdaVector:
    # lambda_{m-1} = m - x(m) on the current degree-m permutation, then hat
    entries = []
    while len(x) > 1:
        m = len(x)
        entries.append(m - x.values[-1])
        x = hat(x)
    return LambdaVector(tuple(entries))


def conormal_word(x: Permutation) -> list[int]:
    """The reduced word v_{n-1} ... v_1 as a list of generator indices."""
    return _blocks_to_word(lambda_vector(x))


def _blocks_to_word(lv: LambdaVector) -> list[int]:
    word = []
    for k in range(lv.n - 1, 0, -1):
        word.extend(range(k - lv[k] + 1, k + 1))
    return word


def word_product(word, n: int) -> Permutation:
    """Multiply out s_{w1} s_{w2} ... s_{wk} in S_n."""
    values = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"generator s_{i} not in S_{n}")
        # right multiplication by s_i swaps positions i and i+1
        values[i - 1], values[i] = values[i], values[i - 1]
    return Permutation(tuple(values))


def from_lambda(lv: LambdaVector) -> Permutation:
    if not isinstance(lv, LambdaVector):
        lv = LambdaVector(tuple(lv))
    if lv.n == 1:
        return identity(1)
    return word_product(_blocks_to_word(lv), lv.n)


def lambda_box(n: int):
    """Every lambda vector of degree n, lexicographically."""
    for entries in product(*(range(k + 1) for k in range(n - 1, 0, -1))):
        yield LambdaVector(entries)


def complement(lv: LambdaVector) -> LambdaVector:
    """lambda_k -> k - lambda_k; reverses the order on the box."""
    top = len(lv.entries)
    return LambdaVector(tuple(top - pos - e for pos, e in enumerate(lv.entries)))


def sorting_leq(y: Permutation, x: Permutation) -> bool:
    if len(x) != len(y):
        raise ValueError(f"degree mismatch: {len(x)} vs {len(y)}")
    return lambda_vector(y).leq(lambda_vector(x))


def sorting_meet(x: Permutation, y: Permutation) -> Permutation:
    lx, ly = lambda_vector(x), lambda_vector(y)
    return from_lambda(LambdaVector(tuple(map(min, lx.entries, ly.entries))))


def sorting_join(x: Permutation, y: Permutation) -> Permutation:
    lx, ly = lambda_vector(x), lambda_vector(y)
    return from_lambda(LambdaVector(tuple(map(max, lx.entries, ly.entries))))


def sorting_relation(n: int) -> PosetRelation:
    _check_relation_degree(n)
    perms = symmetric_group(n)
    lam = np.array([lambda_vector(p).entries for p in perms], dtype=np.int16)
    lam = lam.reshape(len(perms), n - 1)
    m = np.all(lam[None, :, :] <= lam[:, None, :], axis=2)
    return PosetRelation("sorting", perms, m)


def suffix_multiply_preserves_reachability_check(x: Permutation, y: Permutation, j: int) -> bool:
    """
    Compare reachability of (x, y) with that of (vx, vy), v = s_j s_{j+1} ... s_{n-1}.

    Requires x(n) == y(n) == n. ``j == n`` stands for the empty suffix.
    """
    n = len(x)
    if len(y) != n:
        raise ValueError(f"degree mismatch: {n} vs {len(y)}")
    if x(n) != n or y(n) != n:
        raise ValueError("both permutations must fix n")
    if not 1 <= j <= n:
        raise ValueError(f"suffix start {j} outside [1, {n}]")
    v = word_product(range(j, n), n)
    return is_reachable(x, y) == is_reachable(v * x, v * y)
