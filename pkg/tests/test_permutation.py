from itertools import product

import pytest
from hypothesis import given, strategies as st

from parkpose.permutation import (
    IntVector, Permutation, bracket, bruhat_leq, compose, componentwise_leq,
    conjugate, format_vector, hat, identity, inverse, left_weak_leq, length,
    longest, simple, symmetric_group, transposition, unhat,
)

import oracles


def P(text):
    return Permutation.parse(text)


@st.composite
def permutations_of(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


class TestParsing:
    def test_compact_and_comma_forms_agree(self):
        assert P("361245") == P("3,6,1,2,4,5") == P("3 6 1 2 4 5") == P("(3,6,1,2,4,5)")

    def test_degree_ten_needs_separators(self):
        x = Permutation.parse("10,9,8,7,6,5,4,3,2,1")
        assert x == longest(10)
        assert str(x) == "10,9,8,7,6,5,4,3,2,1"

    @pytest.mark.parametrize("text", ["", "1,1", "0", "13", "3x1", "1,,a"])
    def test_rejects_malformed(self, text):
        with pytest.raises(ValueError):
            Permutation.parse(text)

    def test_vector_allows_repeats_but_not_out_of_range(self):
        assert IntVector.parse("221").values == (2, 2, 1)
        with pytest.raises(ValueError):
            IntVector.parse("4,1,1")

    def test_format_mirrors_requested_style(self):
        x = P("312")
        assert format_vector(x) == "312"
        assert format_vector(x, compact=False) == "3,1,2"

    def test_one_indexed_call(self):
        x = P("361245")
        assert x(1) == 3 and x(6) == 5
        with pytest.raises(IndexError):
            x(0)


class TestCompose:
    def test_identity_on_left(self):
        x = P("2431")
        assert compose(identity(4), x) == x

    def test_transposition_undoes_itself(self):
        assert compose(transposition(1, 2, 3), P("213")) == P("123")

    def test_s2_times_132(self):
        # entrywise x(y(i)) for x = s_2 = 132, y = 132
        assert compose(simple(2, 3), P("132")) == P("123")

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(P("12"), P("123"))

    @given(permutations_of())
    def test_inverse(self, x):
        assert x * inverse(x) == identity(len(x))
        assert inverse(x) * x == identity(len(x))


class TestLength:
    def test_identity(self):
        assert length(identity(5)) == 0

    def test_longest(self):
        assert length(longest(4)) == 6

    def test_2431(self):
        assert length(P("2431")) == 4

    @given(permutations_of())
    def test_matches_pair_enumeration_and_inverse(self, x):
        assert length(x) == oracles.inversion_count(x.values)
        assert length(x) == length(inverse(x))


class TestConjugate:
    def test_221(self):
        assert conjugate(IntVector((2, 2, 1))) == IntVector((3, 2, 2))

    def test_322_gives_b_star(self):
        assert conjugate(IntVector((3, 2, 2))) == IntVector((2, 2, 1))

    def test_keeps_permutation_type(self):
        assert isinstance(conjugate(P("132")), Permutation)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_involution_reverses_componentwise_order(self, n):
        vecs = [IntVector(v) for v in product(range(1, n + 1), repeat=n)]
        for a in vecs:
            assert conjugate(conjugate(a)) == a
        for a in vecs:
            ca = conjugate(a)
            for b in vecs:
                assert componentwise_leq(a, b) == componentwise_leq(conjugate(b), ca)


class TestBracket:
    def test_identity_column_one(self):
        e = identity(5)
        assert all(bracket(e, i, 1) == i for i in range(1, 6))

    def test_example(self):
        assert bracket(P("361245"), 2, 3) == 2

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            bracket(P("123"), 4, 1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_pigeonhole_lower_bound(self, n):
        for x in symmetric_group(n):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    assert bracket(x, i, j) >= i - j + 1


class TestOrders:
    def test_213_below_321(self):
        assert bruhat_leq(P("213"), P("321"))

    @given(permutations_of())
    def test_reflexive(self, x):
        assert bruhat_leq(x, x) and left_weak_leq(x, x)

    @given(permutations_of())
    def test_identity_is_bottom(self, x):
        assert left_weak_leq(identity(len(x)), x)
        assert bruhat_leq(identity(len(x)), x)

    def test_132_and_312_incomparable_in_weak(self):
        # joined only by a pseudoreachability edge, not a weak one
        assert not left_weak_leq(P("132"), P("312"))
        assert not left_weak_leq(P("312"), P("132"))
        assert bruhat_leq(P("132"), P("312"))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_bruhat_matches_transposition_closure(self, n):
        expected = oracles.bruhat_by_transpositions(n)
        got = {
            (x.values, y.values)
            for x in symmetric_group(n) for y in symmetric_group(n) if bruhat_leq(y, x)
        }
        assert got == expected

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_weak_matches_bfs(self, n):
        expected = oracles.weak_by_bfs(n)
        got = {
            (x.values, y.values)
            for x in symmetric_group(n) for y in symmetric_group(n) if left_weak_leq(y, x)
        }
        assert got == expected

    @pytest.mark.parametrize("n", [3, 4])
    def test_partial_order_axioms_pairwise(self, n):
        # the matrix-level check for n = 5 lives in test_posets
        S = symmetric_group(n)
        for leq in (bruhat_leq, left_weak_leq):
            for x in S:
                for y in S:
                    if x != y and leq(x, y):
                        assert not leq(y, x)
                    for z in S:
                        if leq(x, y) and leq(y, z):
                            assert leq(x, z)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_weak_implies_bruhat(self, n):
        S = symmetric_group(n)
        for x in S:
            for y in S:
                if left_weak_leq(y, x):
                    assert bruhat_leq(y, x)


class TestHat:
    def test_fixed_last(self):
        assert hat(P("2134")) == P("213")

    def test_2431(self):
        assert hat(P("2431")) == P("132")

    def test_degree_one(self):
        with pytest.raises(ValueError):
            hat(identity(1))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_length_drop(self, n):
        for x in symmetric_group(n):
            assert length(hat(x)) == length(x) - (n - x(n))

    @given(permutations_of())
    def test_unhat_inverts_hat(self, x):
        if len(x) >= 2:
            assert unhat(hat(x), x(len(x))) == x
