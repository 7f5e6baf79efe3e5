import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclomono.cyclotomic import cyclotomic_poly
from cyclomono.intpoly import IntPoly
from cyclomono.modpoly import (
    ModPoly,
    factor_mod,
    gcd_mod,
    is_irreducible_mod,
    multi_gcd,
    reduce_mod,
)

T_312 = IntPoly((3, 0, 3, 0, 1))


def mod_polys(p, max_degree=10):
    return st.lists(st.integers(0, p - 1), min_size=0, max_size=max_degree + 1).map(
        lambda cs: ModPoly(p, cs)
    )


class TestReduceMod:
    def test_basic(self):
        assert reduce_mod(IntPoly((-5, 0, 1)), 2) == ModPoly(2, (1, 0, 1))

    def test_composition_collapses(self):
        assert reduce_mod(T_312, 3) == ModPoly(3, (0, 0, 0, 0, 1))

    def test_multiple_of_p_is_zero(self):
        assert reduce_mod(IntPoly((6, 9, 3)), 3).is_zero

    def test_composite_modulus_rejected(self):
        with pytest.raises(ValueError):
            reduce_mod(IntPoly((1, 1)), 6)


class TestGcd:
    def test_coprime(self):
        assert gcd_mod(ModPoly(2, (0, 1)), ModPoly(2, (1, 1))) == ModPoly(2, (1,))

    def test_square(self):
        assert gcd_mod(ModPoly(2, (1, 0, 1)), ModPoly(2, (1, 1))) == ModPoly(2, (1, 1))

    def test_with_zero(self):
        f = ModPoly(5, (2, 4))
        assert gcd_mod(f, ModPoly(5, ())) == f.monic()

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            gcd_mod(ModPoly(3, ()), ModPoly(3, ()))

    def test_modulus_mismatch_rejected(self):
        with pytest.raises(ValueError):
            gcd_mod(ModPoly(2, (1, 1)), ModPoly(3, (1, 1)))

    @given(st.sampled_from([2, 3, 7]), st.data())
    @settings(max_examples=80, deadline=None)
    def test_divides_both_and_any_common_divisor(self, p, data):
        d = data.draw(mod_polys(p, 3))
        a = data.draw(mod_polys(p, 3))
        b = data.draw(mod_polys(p, 3))
        f, g = d * a, d * b
        if f.is_zero and g.is_zero:
            return
        gcd = gcd_mod(f, g)
        if not f.is_zero:
            assert (f % gcd).is_zero
        if not g.is_zero:
            assert (g % gcd).is_zero
        if not d.is_zero:
            assert (gcd % gcd_mod(d, gcd)).is_zero  # d's contribution divides the gcd


class TestMultiGcd:
    def test_coprime_trio(self):
        fs = [ModPoly(2, (0, 1)), ModPoly(2, (1, 1)), ModPoly(2, (0, 0, 1))]
        assert multi_gcd(fs) == ModPoly(2, (1,))

    def test_common_factor(self):
        x1 = ModPoly(2, (1, 1))
        assert multi_gcd([x1 * x1, x1, x1 * x1 * x1]) == x1

    def test_dedekind_triple_for_sqrt5(self):
        fs = [ModPoly(2, (1, 1))] * 3
        assert multi_gcd(fs) == ModPoly(2, (1, 1))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            multi_gcd([])


class TestFactorMod:
    def test_phi5_mod_11_linear_split(self):
        fac = factor_mod(reduce_mod(cyclotomic_poly(5), 11))
        assert [(tuple(f.coeffs), e) for f, e in fac.factors] == [
            ((2, 1), 1),
            ((6, 1), 1),
            ((7, 1), 1),
            ((8, 1), 1),
        ]

    def test_phi5_mod_2_irreducible(self):
        fac = factor_mod(reduce_mod(cyclotomic_poly(5), 2))
        assert len(fac.factors) == 1
        assert fac.factors[0][0].degree == 4 and fac.factors[0][1] == 1

    def test_x4_mod_3(self):
        fac = factor_mod(ModPoly(3, (0, 0, 0, 0, 1)))
        assert [(tuple(f.coeffs), e) for f, e in fac.factors] == [((0, 1), 4)]

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor_mod(ModPoly(7, ()))

    def test_constant(self):
        fac = factor_mod(ModPoly(7, (3,)))
        assert fac.unit == 3 and fac.factors == ()

    def test_unit_tracked(self):
        fac = factor_mod(ModPoly(5, (2, 0, 2)))
        assert fac.unit == 2
        assert fac.product() == ModPoly(5, (2, 0, 2))

    def test_seed_determinism(self):
        f = reduce_mod(cyclotomic_poly(35), 2)
        assert factor_mod(f, seed=9) == factor_mod(f, seed=9)

    @given(st.sampled_from([2, 3, 5, 13, 97]), st.data())
    @settings(max_examples=100, deadline=None)
    def test_reconstruction_and_irreducibility(self, p, data):
        f = data.draw(mod_polys(p, 9))
        if f.is_zero:
            return
        fac = factor_mod(f, seed=4)
        assert fac.product() == f
        seen = set()
        for t, e in fac.factors:
            assert t.is_monic and e >= 1
            assert is_irreducible_mod(t)
            assert t.coeffs not in seen  # pairwise distinct
            seen.add(t.coeffs)


class TestFactorShapes:
    def test_cyclotomic_shape_small_sweep(self):
        # q coprime to n: phi(n)/ord distinct irreducible factors, each of degree ord
        from cyclomono.arith import euler_phi, multiplicative_order

        for n in range(1, 41):
            for q in (2, 3, 5, 7, 11, 13):
                if n % q == 0:
                    continue
                fac = factor_mod(reduce_mod(cyclotomic_poly(n), q))
                order = multiplicative_order(q, n)
                assert all(e == 1 for _, e in fac.factors), (n, q)
                assert len(fac.factors) == euler_phi(n) // order, (n, q)
                assert all(t.degree == order for t, _ in fac.factors), (n, q)

    def test_prime_power_congruence_small(self):
        from cyclomono.arith import euler_phi

        for q in (2, 3, 5):
            for n in range(1, 13):
                if n % q == 0:
                    continue
                for m in (1, 2):
                    if q**m * n > 60:
                        continue
                    lhs = reduce_mod(cyclotomic_poly(q**m * n), q)
                    rhs = reduce_mod(cyclotomic_poly(n), q) ** euler_phi(q**m)
                    assert lhs == rhs, (q, m, n)


class TestIrreducible:
    def test_quadratic_irreducible_mod_2(self):
        assert is_irreducible_mod(ModPoly(2, (1, 1, 1))) is True

    def test_quadratic_reducible_mod_2(self):
        assert is_irreducible_mod(ModPoly(2, (1, 0, 1))) is False

    def test_phi5_mod_2(self):
        assert is_irreducible_mod(reduce_mod(cyclotomic_poly(5), 2)) is True

    def test_rejects_constants(self):
        with pytest.raises(ValueError):
            is_irreducible_mod(ModPoly(5, (3,)))

    def test_agrees_with_factor_count(self, rng):
        for _ in range(150):
            p = rng.choice((2, 3, 5, 11))
            deg = rng.randint(1, 8)
            f = ModPoly(p, [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)])
            fac = factor_mod(f, seed=0)
            expected = len(fac.factors) == 1 and fac.factors[0][1] == 1 and fac.factors[0][0].degree == f.degree
            assert is_irreducible_mod(f) == expected, (p, f)


class TestModPolyBasics:
    def test_pow(self):
        x1 = ModPoly(3, (1, 1))
        assert x1**2 == ModPoly(3, (1, 2, 1))

    def test_immutability(self):
        f = ModPoly(3, (1, 1))
        with pytest.raises(AttributeError):
            f.p = 5

    def test_lift_round_trip(self):
        f = ModPoly(7, (3, 0, 6, 1))
        assert reduce_mod(f.lift(), 7) == f

    def test_divmod(self):
        f = ModPoly(5, (1, 2, 3, 4))
        g = ModPoly(5, (2, 1))
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.is_zero or r.degree < g.degree
