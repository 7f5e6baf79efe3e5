import random

import pytest
from hypothesis import strategies as st

from cyclomono.intpoly import IntPoly


def int_polys(max_degree=6, coeff_bound=30, nonzero=False, monic=False):
    """Hypothesis strategy for small integer polynomials."""

    def build(coeffs, lead):
        cs = list(coeffs)
        if monic:
            cs.append(1)
        elif nonzero or cs or lead:
            cs.append(lead)
        return IntPoly(cs)

    return st.builds(
        build,
        st.lists(st.integers(-coeff_bound, coeff_bound), min_size=0, max_size=max_degree),
        st.integers(-coeff_bound, coeff_bound).filter(lambda c: c != 0),
    )


@pytest.fixture
def rng():
    return random.Random(12345)
