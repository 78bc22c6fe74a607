import pytest
from hypothesis import given, strategies as st

from tridessin import InvalidTripleError, Triple, ConsistencyError
from tridessin.triples import (
    cross_congruences,
    enumerate_triples,
    predicted_orders,
    reduce,
)

from oracles import unordered_reduced_triples


class TestReduce:
    def test_divides_by_common_factor(self):
        t = reduce(2, 2, 2)
        assert t == Triple(1, 1, 1)
        assert t.n == 3

    def test_already_reduced(self):
        assert reduce(1, 1, 1) == Triple(1, 1, 1)

    def test_factor_two(self):
        t = reduce(4, 6, 10)
        assert t.as_tuple() == (2, 3, 5)
        assert t.n == 10

    @pytest.mark.parametrize("bad", [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-1, 1, 1), (1, -3, 2)])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(InvalidTripleError):
            reduce(*bad)

    def test_triple_ctor_rejects_unreduced(self):
        with pytest.raises(InvalidTripleError):
            Triple(2, 2, 2)

    @given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 40))
    def test_result_is_always_reduced(self, a, b, c):
        t = reduce(a, b, c)
        from math import gcd

        assert gcd(gcd(t.p0, t.p1), t.p2) == 1
        assert t.n >= 3


class TestAlpha:
    @pytest.mark.parametrize(
        "triple,expected",
        [((1, 1, 1), 3), ((2, 3, 5), 1), ((1, 4, 4), 3), ((1, 2, 4), 7)],
    )
    def test_values(self, triple, expected):
        assert Triple(*triple).alpha == expected

    def test_alpha_divides_n(self):
        for t in enumerate_triples(100):
            assert t.n % t.alpha == 0
            assert 1 <= t.alpha <= t.n

    @given(st.sampled_from(enumerate_triples(60)), st.permutations([0, 1, 2]))
    def test_invariant_under_reordering(self, t, perm):
        ps = t.as_tuple()
        shuffled = Triple(ps[perm[0]], ps[perm[1]], ps[perm[2]])
        assert shuffled.alpha == t.alpha


class TestCrossCongruences:
    @pytest.mark.parametrize(
        "triple,expected",
        [((2, 3, 5), 1), ((1, 1, 1), 0), ((1, 2, 4), 0)],
    )
    def test_values(self, triple, expected):
        assert cross_congruences(Triple(*triple)) == expected

    def test_all_small_triples(self):
        for t in enumerate_triples(100):
            r = cross_congruences(t)
            assert r == (t.p0 * t.p1 - t.p2 * t.p2) % t.n


class TestPredictedOrders:
    @pytest.mark.parametrize(
        "triple,expected",
        [((1, 1, 1), (3, 9)), ((2, 3, 5), (100, 300)), ((1, 2, 4), (7, 21))],
    )
    def test_values(self, triple, expected):
        assert predicted_orders(Triple(*triple)) == expected

    def test_order_arithmetic(self):
        for t in enumerate_triples(80):
            order_n, order_g = predicted_orders(t)
            assert order_g == 3 * order_n
            assert order_n * t.alpha == t.n * t.n


class TestEnumerateTriples:
    def test_smallest(self):
        assert enumerate_triples(3) == [Triple(1, 1, 1)]

    def test_up_to_four(self):
        assert enumerate_triples(4) == [Triple(1, 1, 1), Triple(1, 1, 2)]

    def test_up_to_five(self):
        assert enumerate_triples(5) == [
            Triple(1, 1, 1),
            Triple(1, 1, 2),
            Triple(1, 1, 3),
            Triple(1, 2, 2),
        ]

    def test_rejects_too_small_bound(self):
        with pytest.raises(ValueError):
            enumerate_triples(2)

    def test_matches_raw_scan(self):
        ours = {t.as_tuple() for t in enumerate_triples(30)}
        assert ours == unordered_reduced_triples(30)
        assert len(ours) == len(enumerate_triples(30))  # no duplicates

    def test_canonical_and_sorted(self):
        ts = enumerate_triples(40)
        assert all(t.p0 <= t.p1 <= t.p2 for t in ts)
        keys = [(t.n, t.p0, t.p1) for t in ts]
        assert keys == sorted(keys)
