"""
Finite relations on S_n stored as dense boolean matrices.

A :class:`PosetRelation` holds ``matrix[i, j] == True`` iff
``elements[i] >= elements[j]``; pairs are always reported greater-first, so
``(x, y)`` in a cover list means x covers y.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._config import check_degree, closure_cap
from .permutation import Permutation, symmetric_group

__all__ = [
    "PosetRelation", "relation_from_predicate", "transitive_closure", "covers",
    "bruhat_relation", "weak_relation", "bracket_tensor",
]


@dataclass(frozen=True, eq=False)
class PosetRelation:
    name: str
    elements: tuple
    matrix: np.ndarray
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=bool)
        k = len(self.elements)
        if m.shape != (k, k):
            raise ValueError(f"matrix shape {m.shape} does not match {k} elements")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    def __len__(self):
        return len(self.elements)

    def index(self, x) -> int:
        return self._index[x]

    def related(self, x, y) -> bool:
        """True iff x >= y in this relation."""
        return bool(self.matrix[self._index[x], self._index[y]])

    def pairs(self, strict: bool = False) -> list[tuple]:
        """All related pairs (x, y), lexicographic in element order."""
        m = self.matrix & ~np.eye(len(self), dtype=bool) if strict else self.matrix
        els = self.elements
        return [(els[i], els[j]) for i, j in np.argwhere(m)]

    def is_reflexive(self) -> bool:
        return bool(np.all(np.diag(self.matrix)))

    def is_antisymmetric(self) -> bool:
        strict = self.matrix & ~np.eye(len(self), dtype=bool)
        return not bool(np.any(strict & strict.T))

    def is_transitive(self) -> bool:
        return not bool(np.any(_bool_square(self.matrix) & ~self.matrix))

    def is_partial_order(self) -> bool:
        return self.is_reflexive() and self.is_antisymmetric() and self.is_transitive()

    def issubset(self, other: PosetRelation) -> bool:
        _check_same_ground(self, other)
        return not bool(np.any(self.matrix & ~other.matrix))

    def same_relation(self, other: PosetRelation) -> bool:
        _check_same_ground(self, other)
        return bool(np.array_equal(self.matrix, other.matrix))

    def closure(self, name: str | None = None) -> PosetRelation:
        return transitive_closure(self, name)

    def covers(self) -> list[tuple]:
        return covers(self)


def _check_same_ground(a: PosetRelation, b: PosetRelation):
    if a.elements != b.elements:
        raise ValueError("relations live on different ground sets")


def _bool_square(m: np.ndarray) -> np.ndarray:
    f = m.astype(np.float32)
    return (f @ f) > 0


def relation_from_predicate(name: str, elements, geq) -> PosetRelation:
    """Build a relation by calling ``geq(x, y)`` on every ordered pair."""
    elements = tuple(elements)
    m = np.array([[bool(geq(x, y)) for y in elements] for x in elements], dtype=bool)
    return PosetRelation(name, elements, m.reshape(len(elements), len(elements)))


def transitive_closure(relation: PosetRelation, name: str | None = None) -> PosetRelation:
    """Reflexive-transitive closure by repeated boolean squaring."""
    m = relation.matrix | np.eye(len(relation), dtype=bool)
    while True:
        nxt = m | _bool_square(m)
        if np.array_equal(nxt, m):
            break
        m = nxt
    return PosetRelation(name or f"closure({relation.name})", relation.elements, m)


def covers(relation: PosetRelation) -> list[tuple]:
    """Cover pairs (x, y): x > y with nothing strictly between."""
    if not relation.is_transitive():
        raise ValueError(f"relation {relation.name!r} is not transitive; close it first")
    strict = relation.matrix & ~np.eye(len(relation), dtype=bool)
    between = _bool_square(strict)
    m = strict & ~between
    els = relation.elements
    return [(els[i], els[j]) for i, j in np.argwhere(m)]


def bracket_tensor(perms) -> np.ndarray:
    """Array ``B[p, i-1, j-1] == bracket(perms[p], i, j)``."""
    arr = np.array([p.values for p in perms], dtype=np.int16)
    n = arr.shape[1]
    ge = arr[:, :, None] >= np.arange(1, n + 1)[None, None, :]
    return np.cumsum(ge, axis=1, dtype=np.int16)


def _check_relation_degree(n: int):
    check_degree(n)
    check_degree(n, closure_cap())


def bruhat_relation(n: int) -> PosetRelation:
    _check_relation_degree(n)
    perms = symmetric_group(n)
    flat = bracket_tensor(perms).reshape(len(perms), -1)
    m = np.empty((len(perms), len(perms)), dtype=bool)
    chunk = max(1, 2_000_000 // max(1, flat.size))
    for start in range(0, len(perms), chunk):
        block = flat[start : start + chunk]
        m[start : start + chunk] = np.all(flat[None, :, :] <= block[:, None, :], axis=2)
    return PosetRelation("bruhat", perms, m)


def weak_relation(n: int) -> PosetRelation:
    """Left weak order via nesting of position-inversion sets."""
    _check_relation_degree(n)
    perms = symmetric_group(n)
    masks = np.array([_inversion_mask(p) for p in perms], dtype=np.int64)
    m = (masks[None, :] & ~masks[:, None]) == 0
    return PosetRelation("weak", perms, m)


def _inversion_mask(x: Permutation) -> int:
    # one bit per position pair i < j, set when x(i) > x(j)
    v = x.values
    n = len(v)
    mask, bit = 0, 0
    for i in range(n):
        for j in range(i + 1, n):
            if v[i] > v[j]:
                mask |= 1 << bit
            bit += 1
    return mask

