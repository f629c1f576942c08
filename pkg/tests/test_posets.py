import numpy as np
import pytest

from parkpose.permutation import Permutation, bruhat_leq, left_weak_leq, length, symmetric_group
from parkpose.posets import (
    PosetRelation, bruhat_relation, covers, relation_from_predicate,
    transitive_closure, weak_relation,
)

import oracles


def as_tuples(pairs):
    return {(x.values, y.values) for x, y in pairs}


def test_chain_of_two():
    rel = PosetRelation("chain", ("a", "b"), np.array([[True, False], [True, True]]))
    assert covers(rel) == [("b", "a")]


def test_covers_requires_transitive_input():
    m = np.eye(3, dtype=bool)
    m[2, 1] = m[1, 0] = True
    rel = PosetRelation("path", ("a", "b", "c"), m)
    with pytest.raises(ValueError):
        covers(rel)
    assert covers(transitive_closure(rel)) == [("b", "a"), ("c", "b")]


def test_shape_mismatch():
    with pytest.raises(ValueError):
        PosetRelation("bad", ("a",), np.ones((2, 2), dtype=bool))


@pytest.mark.parametrize("n, expected", [(3, 8), (4, 58)])
def test_bruhat_cover_counts(n, expected):
    rel = bruhat_relation(n)
    got = as_tuples(rel.covers())
    brute = oracles.covers_by_betweenness(oracles.bruhat_by_transpositions(n), oracles.perms(n))
    assert got == brute
    assert len(got) == expected


@pytest.mark.parametrize("n, expected", [(3, 6), (4, 36)])
def test_weak_cover_counts(n, expected):
    got = as_tuples(weak_relation(n).covers())
    brute = oracles.covers_by_betweenness(oracles.weak_by_bfs(n), oracles.perms(n))
    assert got == brute
    assert len(got) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_vectorised_builders_match_pairwise(n):
    S = symmetric_group(n)
    assert bruhat_relation(n).same_relation(
        relation_from_predicate("b", S, lambda x, y: bruhat_leq(y, x)))
    assert weak_relation(n).same_relation(
        relation_from_predicate("w", S, lambda x, y: left_weak_leq(y, x)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_partial_orders(n):
    for rel in (bruhat_relation(n), weak_relation(n)):
        assert rel.is_partial_order()


@pytest.mark.parametrize("n", [4, 5])
def test_weak_inside_bruhat(n):
    assert weak_relation(n).issubset(bruhat_relation(n))


def test_closure_against_warshall():
    S = symmetric_group(4)
    # arbitrary sparse generating relation: x > y when they differ by an adjacent swap of positions
    gen = relation_from_predicate(
        "g", S, lambda x, y: length(x) == length(y) + 1 and sum(a != b for a, b in zip(x, y)) == 2
    )
    closed = transitive_closure(gen)
    expected = oracles.warshall([x.values for x in S], as_tuples(gen.pairs()))
    assert as_tuples(closed.pairs()) == expected


def test_pairs_orientation():
    rel = bruhat_relation(2)
    assert rel.pairs(strict=True) == [(Permutation((2, 1)), Permutation((1, 2)))]
    assert rel.related(Permutation((2, 1)), Permutation((1, 2)))
    assert not rel.related(Permutation((1, 2)), Permutation((2, 1)))


def test_closure_cap(monkeypatch):
    monkeypatch.setenv("PARKPOSE_MAX_N", "3")
    with pytest.raises(ValueError):
        bruhat_relation(4)
