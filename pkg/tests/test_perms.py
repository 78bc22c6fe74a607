import pytest
from hypothesis import given, strategies as st

from tridessin import Perm, Triple, build_sigma0, build_sigma1
from tridessin.perms import compose, cycle_decomposition, cycle_string, inverse, order


def perms_of_degree(n):
    return st.permutations(list(range(n))).map(Perm)


small_perms = st.integers(1, 10).flatmap(perms_of_degree)


class TestConstruction:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Perm([0, 0, 1])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Perm([1, 2, 3])

    def test_identity(self):
        assert Perm.identity(4).images == (0, 1, 2, 3)
        assert Perm.identity(4).is_identity()


class TestCompose:
    @given(small_perms)
    def test_identity_is_neutral(self, p):
        e = Perm.identity(p.degree)
        assert compose(e, p) == p
        assert compose(p, e) == p

    @given(st.integers(2, 8).flatmap(lambda n: st.tuples(*[perms_of_degree(n)] * 3)))
    def test_associative(self, triple):
        a, b, c = triple
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    def test_domain_mismatch(self):
        with pytest.raises(ValueError):
            compose(Perm.identity(3), Perm.identity(4))

    def test_convention_matches_edge_action(self):
        # Convention lock: sigma0*sigma1 must shift the black label of a
        # side-0 edge by -p1.  If composition order ever flips, this
        # product would shift by -p2 instead and the test fails.
        for triple in [Triple(1, 1, 1), Triple(2, 3, 5), Triple(1, 2, 4)]:
            n = triple.n
            prod = compose(build_sigma0(triple), build_sigma1(triple))
            for m in range(n):
                assert prod(3 * m) == 3 * ((m - triple.p1) % n)

    @given(small_perms)
    def test_inverse_law(self, p):
        e = Perm.identity(p.degree)
        assert compose(p, inverse(p)) == e
        assert compose(inverse(p), p) == e


class TestInverse:
    def test_identity(self):
        assert inverse(Perm.identity(5)) == Perm.identity(5)

    def test_sigma0_inverse_is_its_square(self):
        s0 = build_sigma0(Triple(2, 3, 5))
        assert inverse(s0) == compose(s0, s0)

    def test_swap_is_involution(self):
        swap = Perm([1, 0, 2])
        assert inverse(swap) == swap


class TestPowers:
    @given(small_perms, st.integers(0, 6))
    def test_pow_matches_repeated_composition(self, p, k):
        expected = Perm.identity(p.degree)
        for _ in range(k):
            expected = compose(expected, p)
        assert p**k == expected

    @given(small_perms)
    def test_negative_power(self, p):
        assert p**-1 == inverse(p)


class TestCycles:
    def test_identity_has_only_fixed_points(self):
        assert cycle_decomposition(Perm.identity(3)) == [[0], [1], [2]]

    def test_sigma0_equilateral(self):
        s0 = build_sigma0(Triple(1, 1, 1))
        assert cycle_decomposition(s0) == [[0, 1, 2], [3, 4, 5], [6, 7, 8]]

    def test_cycles_canonical(self):
        p = Perm([2, 0, 1, 3, 5, 4])
        assert cycle_decomposition(p) == [[0, 2, 1], [3], [4, 5]]

    def test_face_product_235(self):
        # Frozen from the orbit-iteration oracle: the side classes split
        # into 1 + 5 + 2 cycles of lengths 10, 2, 5 respectively.
        t = Triple(2, 3, 5)
        prod = compose(build_sigma0(t), build_sigma1(t))
        lengths = sorted(len(c) for c in cycle_decomposition(prod))
        assert lengths == [2, 2, 2, 2, 2, 5, 5, 10]
        assert len(lengths) == 8

    @given(small_perms)
    def test_partition_property(self, p):
        cycles = cycle_decomposition(p)
        points = [x for c in cycles for x in c]
        assert sorted(points) == list(range(p.degree))
        assert all(c[0] == min(c) for c in cycles)
        assert [c[0] for c in cycles] == sorted(c[0] for c in cycles)


class TestOrder:
    def test_identity(self):
        assert order(Perm.identity(6)) == 1

    def test_sigma_generators_have_order_three(self):
        for triple in [Triple(1, 1, 1), Triple(2, 3, 5), Triple(1, 2, 4), Triple(1, 4, 4)]:
            assert order(build_sigma0(triple)) == 3
            assert order(build_sigma1(triple)) == 3

    def test_product_equilateral(self):
        t = Triple(1, 1, 1)
        prod = compose(build_sigma0(t), build_sigma1(t))
        assert order(prod) == 3
        assert compose(compose(prod, prod), prod).is_identity()

    @given(small_perms)
    def test_order_is_lcm_of_cycle_lengths(self, p):
        from math import lcm

        lengths = [len(c) for c in cycle_decomposition(p)]
        assert order(p) == lcm(*lengths)
        assert (p ** order(p)).is_identity()
        for k in range(1, order(p)):
            assert not (p**k).is_identity()


class TestCycleString:
    def test_identity(self):
        assert cycle_string(Perm.identity(4)) == "()"

    def test_fixed_points_omitted(self):
        assert cycle_string(Perm([1, 0, 2])) == "(0 1)"

    def test_sigma0(self):
        s0 = build_sigma0(Triple(1, 1, 1))
        assert cycle_string(s0) == "(0 1 2)(3 4 5)(6 7 8)"
