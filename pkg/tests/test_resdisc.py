import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclomono.cyclotomic import cyclotomic_poly
from cyclomono.intpoly import IntPoly, X
from cyclomono.resdisc import (
    disc_composition,
    disc_composition_binomial,
    discriminant,
    is_squarefree,
    poly_gcd,
    resultant,
    resultant_sylvester,
    sylvester_matrix,
)

from conftest import int_polys


def quadratic_disc(b, c):
    # b^2 - 4c for monic x^2 + bx + c
    return b * b - 4 * c


def biquadratic_disc(P, q):
    # 16 q (P^2 - 4q)^2 for x^4 + P x^2 + q
    return 16 * q * (P * P - 4 * q) ** 2


def divides_over_q(d, f):
    """Exact division test in Q[x]; independent of the package's gcd machinery."""
    from fractions import Fraction

    if f.is_zero:
        return True
    if d.is_zero or d.degree > f.degree:
        return False
    rem = [Fraction(c) for c in f.coeffs]
    dc = [Fraction(c) for c in d.coeffs]
    while True:
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(dc):
            break
        coef = rem[-1] / dc[-1]
        shift = len(rem) - len(dc)
        for j in range(len(dc)):
            rem[shift + j] -= coef * dc[j]
    return not rem


class TestResultant:
    def test_linear_pair(self):
        assert resultant(IntPoly((-1, 1)), IntPoly((1, 1))) == 2

    def test_shared_root(self):
        assert resultant(IntPoly((-1, 1)), IntPoly((-1, 0, 1))) == 0

    def test_cyclotomic_pair(self):
        assert resultant(cyclotomic_poly(2), cyclotomic_poly(4)) == 2

    def test_constant_cases(self):
        assert resultant(IntPoly((5,)), IntPoly((1, 0, 0, 1))) == 125
        assert resultant(IntPoly((0, 0, 1)), IntPoly((3,))) == 9
        assert resultant(IntPoly((4,)), IntPoly((7,))) == 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            resultant(IntPoly(), X)

    @given(int_polys(max_degree=6, coeff_bound=50, nonzero=True), int_polys(max_degree=6, coeff_bound=50, nonzero=True))
    @settings(max_examples=150, deadline=None)
    def test_prs_equals_bareiss(self, f, g):
        assert resultant(f, g) == resultant_sylvester(f, g)

    @given(int_polys(max_degree=5, nonzero=True), int_polys(max_degree=5, nonzero=True))
    @settings(max_examples=80, deadline=None)
    def test_swap_sign(self, f, g):
        m, n = f.degree, g.degree
        sign = -1 if (m * n) % 2 else 1
        assert resultant(f, g) == sign * resultant(g, f)

    @given(
        int_polys(max_degree=4, coeff_bound=9, nonzero=True),
        int_polys(max_degree=3, coeff_bound=9, nonzero=True),
        int_polys(max_degree=3, coeff_bound=9, nonzero=True),
    )
    @settings(max_examples=80, deadline=None)
    def test_multiplicative(self, f, g, h):
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)

    @given(
        int_polys(max_degree=5, nonzero=True),
        int_polys(max_degree=5, nonzero=True),
        st.integers(-6, 6),
    )
    @settings(max_examples=80, deadline=None)
    def test_shift_invariance(self, f, g, c):
        assert resultant(f.shift(c), g.shift(c)) == resultant(f, g)

    @given(int_polys(max_degree=5, coeff_bound=12, nonzero=True), int_polys(max_degree=5, coeff_bound=12, nonzero=True))
    @settings(max_examples=100, deadline=None)
    def test_zero_iff_common_factor(self, f, g):
        if f.degree == 0 or g.degree == 0:
            return
        common = poly_gcd(f, g).degree >= 1
        assert (resultant(f, g) == 0) == common

    @given(
        st.lists(st.integers(-8, 8), min_size=1, max_size=4),
        st.integers(-5, 5).filter(lambda a: a != 0),
        int_polys(max_degree=4, coeff_bound=9, nonzero=True),
    )
    @settings(max_examples=80, deadline=None)
    def test_evaluation_product_form(self, roots, a, g):
        # R(f, g) = lc(f)**deg(g) * prod(g(r_i)) when f splits over Z
        f = IntPoly((a,))
        for r in roots:
            f = f * IntPoly((-r, 1))
        expected = a ** g.degree
        for r in roots:
            expected *= g.eval(r)
        assert resultant(f, g) == expected


class TestSparsePairs:
    @given(
        st.integers(2, 14),
        st.integers(1, 6),
        st.integers(-9, 9).filter(lambda c: c != 0),
        st.integers(-9, 9).filter(lambda c: c != 0),
    )
    @settings(max_examples=80, deadline=None)
    def test_defective_sequences_match_bareiss(self, df, dg, a, b):
        # sparse binomials drive the PRS through large degree drops
        if dg >= df:
            return
        f = IntPoly([a] + [0] * (df - 1) + [1])
        g = IntPoly([b] + [0] * (dg - 1) + [1])
        assert resultant(f, g) == resultant_sylvester(f, g)

    def test_grid_style_composition(self):
        from cyclomono.cyclotomic import CycloParams, build_T

        T = build_T(CycloParams(5, 1, 3))
        m = T.degree
        sign = -1 if (m * (m - 1) // 2) % 2 else 1
        direct = sign * resultant_sylvester(T, T.derivative())
        from cyclomono.resdisc import discriminant as disc

        assert disc(T) == direct


class TestSylvesterOracle:
    def test_matrix_shape(self):
        m = sylvester_matrix(IntPoly((-1, 0, 1)), IntPoly((1, 1)))
        assert m == [[1, 0, -1], [1, 1, 0], [0, 1, 1]]

    def test_det_two_by_two(self):
        assert resultant_sylvester(IntPoly((-1, 1)), IntPoly((1, 1))) == 2


class TestDiscriminant:
    def test_gaussian_quadratic(self):
        assert discriminant(IntPoly((1, 0, 1))) == -4 == quadratic_disc(0, 1)

    def test_golden_quadratic(self):
        assert discriminant(IntPoly((1, 3, 1))) == 5 == quadratic_disc(3, 1)

    def test_biquadratic(self):
        assert discriminant(IntPoly((3, 0, 3, 0, 1))) == 432 == biquadratic_disc(3, 3)

    def test_degree_one_is_one(self):
        assert discriminant(IntPoly((7, 1))) == 1
        assert discriminant(IntPoly((5, 3))) == 1

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            discriminant(IntPoly((3,)))

    def test_repeated_root_gives_zero(self):
        assert discriminant(IntPoly((1, 2, 1))) == 0

    @given(st.integers(-40, 40), st.integers(-40, 40))
    @settings(max_examples=60, deadline=None)
    def test_quadratic_formula(self, b, c):
        assert discriminant(IntPoly((c, b, 1))) == quadratic_disc(b, c)

    @given(st.integers(-20, 20), st.integers(-20, 20))
    @settings(max_examples=60, deadline=None)
    def test_biquadratic_formula(self, P, q):
        assert discriminant(IntPoly((q, 0, P, 0, 1))) == biquadratic_disc(P, q)


class TestComposition:
    def test_double_gaussian(self):
        f = IntPoly((1, 0, 1))
        assert disc_composition(f, f) == 512 == discriminant(f.compose(f))

    def test_intro_quartic(self):
        assert disc_composition(IntPoly((1, 1, 1)), IntPoly((1, 0, 1))) == 432

    def test_identity_inner(self):
        f = IntPoly((7, -3, 0, 1))
        assert disc_composition(f, X) == discriminant(f)

    @given(
        int_polys(max_degree=3, coeff_bound=8, nonzero=True),
        int_polys(max_degree=3, coeff_bound=8, nonzero=True),
    )
    @settings(max_examples=100, deadline=None)
    def test_matches_direct(self, f, g):
        if f.degree < 1 or g.degree < 1 or f.degree * g.degree > 12:
            return
        assert disc_composition(f, g) == discriminant(f.compose(g))


class TestCompositionBinomial:
    def test_intro_forward(self):
        assert disc_composition_binomial(IntPoly((17, 0, 1)), 1, 2, 5) == 3107328

    def test_intro_reverse(self):
        assert disc_composition_binomial(IntPoly((5, 0, 1)), 1, 2, 17) == 1881600

    def test_linear_outer(self):
        assert disc_composition_binomial(IntPoly((1, 1)), 1, 2, 1) == -8
        assert discriminant(IntPoly((2, 0, 1))) == -8

    def test_b_zero_rejected(self):
        with pytest.raises(ValueError):
            disc_composition_binomial(IntPoly((1, 1)), 0, 2, 1)

    @given(
        int_polys(max_degree=3, coeff_bound=8, nonzero=True),
        st.integers(-3, 3).filter(lambda b: b != 0),
        st.integers(1, 3),
        st.integers(-5, 5),
    )
    @settings(max_examples=100, deadline=None)
    def test_agrees_with_general_formula(self, f, b, n, c):
        if f.degree < 1:
            return
        g = IntPoly([c] + [0] * (n - 1) + [b])
        assert disc_composition_binomial(f, b, n, c) == disc_composition(f, g)


class TestPolyGcd:
    def test_simple_common_factor(self):
        f = IntPoly((-1, 0, 1))  # (x-1)(x+1)
        g = IntPoly((1, 2, 1))  # (x+1)^2
        assert poly_gcd(f, g) == IntPoly((1, 1))

    def test_coprime(self):
        assert poly_gcd(X, IntPoly((1, 1))).degree == 0

    def test_content_handling(self):
        # gcd(4(1+2x), 6(1+2x)) = 2(1+2x) in Z[x]
        assert poly_gcd(IntPoly((4, 8)), IntPoly((6, 12))) == IntPoly((2, 4))

    def test_squarefree_detection(self):
        assert is_squarefree(IntPoly((-1, 0, 1)))
        assert not is_squarefree(IntPoly((1, 2, 1)))

    @given(
        int_polys(max_degree=3, coeff_bound=6, nonzero=True),
        int_polys(max_degree=2, coeff_bound=6, nonzero=True),
        int_polys(max_degree=2, coeff_bound=6, nonzero=True),
    )
    @settings(max_examples=80, deadline=None)
    def test_common_factor_divides_gcd(self, d, a, b):
        from cyclomono.resdisc import primitive_part

        f, g = d * a, d * b
        gcd = poly_gcd(f, g)
        assert divides_over_q(gcd, f)
        assert divides_over_q(gcd, g)
        assert divides_over_q(primitive_part(d), gcd)
