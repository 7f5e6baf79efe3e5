import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclomono.intpoly import IntPoly, NonMonicDivisorError, X, format_poly

from conftest import int_polys

P_X2_X_1 = IntPoly((1, 1, 1))
P_X2_1 = IntPoly((1, 0, 1))


class TestRingOps:
    def test_mul_difference_of_squares(self):
        assert IntPoly((1, 1)) * IntPoly((-1, 1)) == IntPoly((-1, 0, 1))

    def test_add_identity(self):
        f = IntPoly((3, 0, 3, 0, 1))
        assert f + IntPoly() == f

    def test_mul_cubic(self):
        assert P_X2_X_1 * IntPoly((-1, 1)) == IntPoly((-1, 0, 0, 1))

    def test_int_coercion(self):
        assert X + 1 == IntPoly((1, 1))
        assert 2 * X == IntPoly((0, 2))
        assert 1 - X == IntPoly((1, -1))

    @given(int_polys(), int_polys(), int_polys())
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @given(int_polys(max_degree=80, coeff_bound=10**6), int_polys(max_degree=80, coeff_bound=10**6))
    @settings(max_examples=20, deadline=None)
    def test_karatsuba_matches_schoolbook(self, f, g):
        # force the cutoff by comparing against a direct convolution
        expect = [0] * (len(f.coeffs) + len(g.coeffs) - 1) if f.coeffs and g.coeffs else []
        for i, a in enumerate(f.coeffs):
            for j, b in enumerate(g.coeffs):
                expect[i + j] += a * b
        assert (f * g) == IntPoly(expect)


class TestDivmod:
    def test_exact(self):
        q, r = IntPoly((-1, 0, 1)).monic_divmod(IntPoly((-1, 1)))
        assert (q, r) == (IntPoly((1, 1)), IntPoly())

    def test_synthetic(self):
        q, r = IntPoly((3, 0, 3, 0, 1)).monic_divmod(X)
        assert q == IntPoly((0, 3, 0, 1)) and r == IntPoly((3,))

    def test_cyclotomic_division(self):
        q, r = IntPoly((-1, 0, 0, 1)).monic_divmod(P_X2_X_1)
        assert q == IntPoly((-1, 1)) and r.is_zero

    def test_non_monic_rejected(self):
        with pytest.raises(NonMonicDivisorError):
            IntPoly((1, 0, 1)).monic_divmod(IntPoly((1, 2)))

    def test_zero_divisor_rejected(self):
        with pytest.raises(ZeroDivisionError):
            IntPoly((1, 0, 1)).monic_divmod(IntPoly())

    @given(int_polys(), int_polys(max_degree=4, monic=True))
    @settings(max_examples=80, deadline=None)
    def test_round_trip(self, f, d):
        q, r = f.monic_divmod(d)
        assert q * d + r == f
        assert r.is_zero or r.degree < d.degree


class TestCompose:
    def test_quartic(self):
        assert P_X2_X_1.compose(P_X2_1) == IntPoly((3, 0, 3, 0, 1))

    def test_identity_right(self):
        f = IntPoly((5, -2, 0, 7))
        assert f.compose(X) == f

    def test_linear_left(self):
        g = IntPoly((4, 0, 2))
        assert IntPoly((1, 1)).compose(g) == g + 1

    @given(int_polys(max_degree=3), int_polys(max_degree=3), int_polys(max_degree=3))
    @settings(max_examples=40, deadline=None)
    def test_associative(self, f, g, h):
        assert f.compose(g).compose(h) == f.compose(g.compose(h))


class TestShift:
    def test_simple(self):
        assert P_X2_1.shift(1) == IntPoly((2, 2, 1))

    def test_zero_shift(self):
        f = IntPoly((9, 1, 4))
        assert f.shift(0) == f

    def test_x_minus_one(self):
        assert IntPoly((-1, 1)).shift(1) == X

    @given(int_polys(), st.integers(-10, 10))
    @settings(max_examples=60, deadline=None)
    def test_inverse(self, f, c):
        assert f.shift(c).shift(-c) == f


class TestDerivativeEval:
    def test_quartic_derivative(self):
        assert IntPoly((3, 0, 3, 0, 1)).derivative() == IntPoly((0, 6, 0, 4))

    def test_constant_derivative(self):
        assert IntPoly((17,)).derivative().is_zero

    def test_power_of_two_binomial(self):
        assert IntPoly((1, 0, 0, 0, 1)).derivative() == IntPoly((0, 0, 0, 4))

    def test_eval_cyclotomic_at_one(self):
        assert IntPoly((1, 0, 0, 1, 0, 0, 1)).eval(1) == 3

    def test_eval_at_zero_is_constant_term(self):
        assert IntPoly((42, 0, 10, 0, 1)).eval(0) == 42

    def test_intro_pair_consistency(self):
        # f = x^2 + 17 evaluated at g(0) = 5 gives the constant term of f(g)
        assert IntPoly((17, 0, 1)).eval(5) == 42


class TestPowCoeffmod:
    def test_freshman_dream(self):
        assert IntPoly((1, 1)).pow_coeffmod(2, 2) == IntPoly((1, 0, 1))

    def test_monomial(self):
        assert X.pow_coeffmod(5, 7) == IntPoly((0, 0, 0, 0, 0, 1))

    def test_reduction(self):
        assert IntPoly((3, 1)).pow_coeffmod(2, 4) == IntPoly((1, 2, 1))

    def test_bad_args(self):
        with pytest.raises(ValueError):
            X.pow_coeffmod(0, 5)
        with pytest.raises(ValueError):
            X.pow_coeffmod(2, 1)

    @given(
        int_polys(max_degree=8, coeff_bound=9),
        int_polys(max_degree=8, coeff_bound=9),
        st.sampled_from([2, 3, 5]),
        st.integers(1, 4),
    )
    @settings(max_examples=60, deadline=None)
    def test_power_congruence_lifts(self, g, r, q, n):
        # G = H (mod q) forces G^(q^n) = H^(q^n) (mod q^(n+1))
        h = g + q * r
        modulus = q ** (n + 1)
        assert g.pow_coeffmod(q**n, modulus) == h.pow_coeffmod(q**n, modulus)


class TestStructure:
    def test_zero_has_no_degree(self):
        with pytest.raises(ValueError):
            IntPoly().degree

    def test_normalization(self):
        assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)

    def test_immutability(self):
        f = IntPoly((1, 2))
        with pytest.raises(AttributeError):
            f.coeffs = (3,)

    def test_non_integer_rejected(self):
        with pytest.raises(TypeError):
            IntPoly((1.5, 2))

    def test_format_round_trippable_forms(self):
        assert format_poly((3, 0, 3, 0, 1)) == "x^4 + 3*x^2 + 3"
        assert format_poly((-5, 0, 1)) == "x^2 - 5"
        assert format_poly(()) == "0"
        assert format_poly((2,)) == "2"
        assert format_poly((0, -2)) == "-2*x"
        assert format_poly((0, 1)) == "x"
