from itertools import permutations, product
from math import factorial

import pytest

from parkpose.parking import (
    IntervalPair, enumerate_ipfs, enumerate_parking_functions, ipf_completions,
    is_ipf, is_parking_function, outcome, run_algorithm_a, run_algorithm_b,
)
from parkpose.permutation import IntVector, Permutation, componentwise_leq, conjugate, symmetric_group

import oracles


def V(text):
    return IntVector.parse(text)


def pair(a, b):
    return IntervalPair(V(a), V(b))


def all_vectors(n):
    return [IntVector(v) for v in product(range(1, n + 1), repeat=n)]


IPF_2 = {("11", "12"), ("11", "22"), ("12", "12"), ("12", "22"), ("21", "21"), ("21", "22")}


class TestParkingFunctions:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_permutations_are_parking_functions(self, n):
        for x in symmetric_group(n):
            assert is_parking_function(x)
            assert run_algorithm_a(x).outcome == x

    def test_count_3(self):
        assert sum(1 for _ in enumerate_parking_functions(3)) == 16

    def test_221(self):
        assert is_parking_function(V("221"))
        assert run_algorithm_a(V("221")).outcome == Permutation((2, 3, 1))

    def test_131(self):
        assert run_algorithm_a(V("131")).outcome == Permutation((1, 3, 2))

    def test_failure_records_first_car(self):
        trace = run_algorithm_a(V("332"))
        assert not trace.success and trace.failed_car == 2
        with pytest.raises(ValueError):
            outcome(V("332"))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_simulation_agrees_with_sorted_criterion(self, n):
        for a in all_vectors(n):
            sim = oracles.simulate_parking(a.values, (n,) * n)
            assert (sim is not None) == is_parking_function(a)
            assert run_algorithm_a(a).outcome == (None if sim is None else Permutation(sim))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_rearrangement_invariance(self, n):
        for a in enumerate_parking_functions(n):
            for p in set(permutations(a.values)):
                assert is_parking_function(p)

    def test_enumeration_is_lexicographic_and_distinct(self):
        pfs = list(enumerate_parking_functions(4))
        assert pfs == sorted(set(pfs))

    def test_cap(self, monkeypatch):
        monkeypatch.setenv("PARKPOSE_MAX_N", "3")
        with pytest.raises(ValueError):
            enumerate_parking_functions(4)
        with pytest.raises(ValueError):
            enumerate_ipfs(4)


class TestIntervalParking:
    def test_ipf_2_list(self):
        got = {(str(p.a), str(p.b)) for p in enumerate_ipfs(2)}
        assert got == IPF_2

    def test_ipf_2_closed_form_over_all_pairs(self):
        for a in all_vectors(2):
            for b in all_vectors(2):
                expected = (str(a), str(b)) in IPF_2
                assert is_ipf(IntervalPair(a, b)) == expected

    def test_not_invariant_under_permuting_cars(self):
        assert run_algorithm_b(pair("11", "12")).success
        trace = run_algorithm_b(pair("11", "21"))
        assert not trace.success and trace.failed_car == 2
        assert not is_ipf(pair("11", "21"))

    def test_inverted_interval_fails_on_arrival(self):
        trace = run_algorithm_b(pair("21", "12"))
        assert trace.failed_car == 1

    @pytest.mark.parametrize("n", [2, 3])
    def test_simulation_matches_criterion(self, n):
        vecs = all_vectors(n)
        for a in vecs:
            for b in vecs:
                p = IntervalPair(a, b)
                trace = run_algorithm_b(p)
                assert trace.success == is_ipf(p)
                if trace.success:
                    assert trace.outcome == run_algorithm_a(a).outcome

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_all_n_upper_bound_recovers_algorithm_a(self, n):
        top = IntVector((n,) * n)
        for a in all_vectors(n):
            assert run_algorithm_b(IntervalPair(a, top)) == run_algorithm_a(a)
            assert is_ipf(IntervalPair(a, top)) == is_parking_function(a)

    def test_permutation_paired_with_itself(self):
        for x in symmetric_group(4):
            assert is_ipf(IntervalPair(x, x))

    def test_completions_of_11(self):
        assert ipf_completions(V("11")) == [V("12"), V("22")]

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_completion_counts(self, n):
        for a in enumerate_parking_functions(n):
            comps = ipf_completions(a)
            assert len(comps) == factorial(n)
            x = outcome(a)
            assert all(componentwise_leq(x, b) for b in comps)

    def test_completions_need_parking_function(self):
        with pytest.raises(ValueError):
            ipf_completions(V("22"))

    def test_count_3_by_simulation(self):
        vecs = all_vectors(3)
        sim = sum(1 for a in vecs for b in vecs if oracles.simulate_parking(a.values, b.values))
        assert sim == 96
        assert sum(1 for _ in enumerate_ipfs(3)) == 96

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_structural_facts(self, n):
        for p in enumerate_ipfs(n):
            x = outcome(p.a)
            bstar = conjugate(p.b)
            assert is_parking_function(bstar)
            assert componentwise_leq(p.a, x) and componentwise_leq(x, p.b)
            assert componentwise_leq(conjugate(outcome(bstar)), p.b)

    def test_pair_printing_and_parsing(self):
        p = pair("11", "12")
        assert str(p) == "11 | 12"
        assert IntervalPair.parse("1,1 | 1,2") == p
        with pytest.raises(ValueError):
            IntervalPair.parse("11 12")
