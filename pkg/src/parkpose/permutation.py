"""
Vectors over [n] and permutations in one-line notation.

Everything here is 1-indexed at the API level: ``x(i)`` is the value in
position ``i``, and products read right to left, so ``(x * y)(i) == x(y(i))``.

>>> x = Permutation.parse("2431")
>>> length(x)
4
>>> str(conjugate(x))
'4213'
>>> bruhat_leq(Permutation.parse("213"), Permutation.parse("321"))
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _itertools_permutations

from ._config import check_degree

__all__ = [
    "IntVector", "Permutation",
    "parse_vector", "parse_permutation", "format_vector", "is_compact_notation",
    "identity", "longest", "simple", "transposition",
    "compose", "inverse", "length", "inversions", "conjugate", "componentwise_leq",
    "bracket", "bruhat_leq", "left_weak_leq", "symmetric_group", "hat", "unhat",
]

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True, order=True)
class IntVector:
    """A vector in [n]^n. Repeated entries are allowed."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n == 0:
            raise ValueError("vector must have at least one entry")
        for v in values:
            if not 1 <= v <= n:
                raise ValueError(f"entry {v} outside [1, {n}] in {values}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise IndexError(f"index {i} outside [1, {len(self.values)}]")
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return format_vector(self)

    def __repr__(self):
        return f"{type(self).__name__}({format_vector(self, compact=False)!r})"

    @classmethod
    def parse(cls, text: str):
        return cls(_parse_entries(text))


@dataclass(frozen=True, order=True, repr=False)
class Permutation(IntVector):
    """A bijection [n] -> [n] in one-line notation."""

    def __post_init__(self):
        super().__post_init__()
        if len(set(self.values)) != len(self.values):
            raise ValueError(f"{self.values} is not a permutation")

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def inverse(self) -> Permutation:
        return inverse(self)


def _parse_entries(text: str) -> tuple[int, ...]:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if not body:
        raise ValueError(f"empty vector: {text!r}")
    if is_compact_notation(body):
        if not body.isdigit():
            raise ValueError(f"malformed vector: {text!r}")
        return tuple(int(ch) for ch in body)
    parts = [p for p in _SEPARATORS.split(body) if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed vector: {text!r}") from None


def is_compact_notation(text: str) -> bool:
    """True if ``text`` is written as a bare digit string such as ``361245``."""
    body = text.strip().strip("()")
    return _SEPARATORS.search(body) is None


def parse_vector(text: str) -> IntVector:
    return IntVector.parse(text)


def parse_permutation(text: str) -> Permutation:
    return Permutation.parse(text)


def format_vector(v, compact: bool | None = None) -> str:
    """
    Print ``v`` as a digit string or comma list.

    By default the digit form is used whenever every entry is a single digit,
    which is the case for all n <= 9.
    """
    values = tuple(v)
    if compact is None:
        compact = len(values) <= 9
    if compact and all(0 <= x <= 9 for x in values):
        return "".join(str(x) for x in values)
    return ",".join(str(x) for x in values)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    """The longest element w_0 = (n, n-1, ..., 1)."""
    return Permutation(tuple(range(n, 0, -1)))


def transposition(i: int, j: int, n: int) -> Permutation:
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"bad transposition ({i}, {j}) in degree {n}")
    values = list(range(1, n + 1))
    values[i - 1], values[j - 1] = j, i
    return Permutation(tuple(values))


def simple(i: int, n: int) -> Permutation:
    """The adjacent transposition s_i = t_{i,i+1}."""
    return transposition(i, i + 1, n)


def _same_degree(x, y):
    if len(x) != len(y):
        raise ValueError(f"degree mismatch: {len(x)} vs {len(y)}")


def compose(x: Permutation, y: Permutation) -> Permutation:
    """Return the product xy, i.e. i -> x(y(i))."""
    _same_degree(x, y)
    xv = x.values
    return Permutation(tuple(xv[v - 1] for v in y.values))


def inverse(x: Permutation) -> Permutation:
    result = [0] * len(x)
    for pos, v in enumerate(x.values, start=1):
        result[v - 1] = pos
    return Permutation(tuple(result))


def inversions(x: Permutation) -> frozenset[tuple[int, int]]:
    """Position pairs (i, j) with i < j and x(i) > x(j)."""
    v = x.values
    n = len(v)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if v[i] > v[j]
    )


def length(x: Permutation) -> int:
    v = x.values
    n = len(v)
    return sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])


def conjugate(v: IntVector) -> IntVector:
    """Reverse complement: (n+1-v(n), ..., n+1-v(1)). Keeps the input's type."""
    n = len(v)
    return type(v)(tuple(n + 1 - a for a in reversed(v.values)))


def componentwise_leq(a, b) -> bool:
    _same_degree(a, b)
    return all(p <= q for p, q in zip(a, b))


def bracket(x: Permutation, i: int, j: int) -> int:
    """Number of positions k <= i with x(k) >= j."""
    n = len(x)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"bracket indices ({i}, {j}) outside [1, {n}]")
    return sum(1 for v in x.values[:i] if v >= j)


def _bracket_table(x: Permutation) -> list[list[int]]:
    # table[i-1][j-1] == bracket(x, i, j)
    n = len(x)
    table = []
    row = [0] * (n + 2)
    for v in x.values:
        for j in range(1, v + 1):
            row[j] += 1
        table.append(row[1 : n + 1])
    return table


def bruhat_leq(y: Permutation, x: Permutation) -> bool:
    """True iff y <= x in Bruhat order, tested entrywise on bracket counts."""
    _same_degree(x, y)
    ty, tx = _bracket_table(y), _bracket_table(x)
    return all(a <= b for ry, rx in zip(ty, tx) for a, b in zip(ry, rx))


def left_weak_leq(y: Permutation, x: Permutation) -> bool:
    """True iff y <= x in left weak order.

    Left multiplication by s_i swaps the digits i and i+1, which adds or
    removes exactly one position inversion, so the order is containment of
    position-inversion sets.
    """
    _same_degree(x, y)
    return inversions(y) <= inversions(x)


def hat(x: Permutation) -> Permutation:
    """Drop the last entry and close the gap it leaves in the values."""
    n = len(x)
    if n < 2:
        raise ValueError("hat needs degree at least 2")
    last = x.values[-1]
    return Permutation(tuple(v if v < last else v - 1 for v in x.values[:-1]))


def unhat(z: Permutation, last: int) -> Permutation:
    """The unique x of degree n+1 with x(n+1) == last and hat(x) == z."""
    n = len(z) + 1
    if not 1 <= last <= n:
        raise ValueError(f"last value {last} outside [1, {n}]")
    return Permutation(tuple(v if v < last else v + 1 for v in z.values) + (last,))


@lru_cache(maxsize=None)
def _group(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in _itertools_permutations(range(1, n + 1)))


def symmetric_group(n: int) -> tuple[Permutation, ...]:
    """All of S_n in lexicographic order."""
    check_degree(n)
    return _group(n)
