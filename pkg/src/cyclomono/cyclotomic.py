"""Construction of cyclotomic polynomials and the closed forms built on them.

Phi_n is computed by exact division of x**n - 1 by the product of the Phi_d
for proper divisors d, which keeps every step in Z[x] and reuses monic
division. The memo table is a module-level insert-once cache: concurrent
readers are fine and writers are idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import IncompleteFactorizationError, euler_phi, factor_integer, is_prime
from .intpoly import IntPoly

_CACHE: dict[int, IntPoly] = {}


def cyclotomic_poly(n: int) -> IntPoly:
    """The monic minimal polynomial of a primitive n-th root of unity."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    cached = _CACHE.get(n)
    if cached is not None:
        return cached
    f = IntPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n // 2 + 1):
        if n % d == 0:
            f //= cyclotomic_poly(d)
    _CACHE[n] = f
    return f


@dataclass(frozen=True)
class CycloParams:
    """The (p, m, n) triple selecting T = Phi_{p**m} composed with Phi_{2**n}."""

    p: int
    m: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be >= 1")

    @property
    def degree(self) -> int:
        return 2 ** (self.n - 1) * self.p ** (self.m - 1) * (self.p - 1)


def build_T(params: CycloParams) -> IntPoly:
    """Phi_{p**m}(Phi_{2**n}(x)), the composition under study."""
    outer = cyclotomic_poly(params.p**params.m)
    inner = cyclotomic_poly(2**params.n)
    return outer.compose(inner)


def cyclo_disc_prime_power(p: int, m: int) -> int:
    """disc(Phi_{p**m}) = eps * p**(p**(m-1) * (p*m - m - 1)).

    eps is -1 exactly when p**m == 4 or p == 3 (mod 4), else +1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("m must be >= 1")
    eps = -1 if (p**m == 4 or p % 4 == 3) else 1
    return eps * p ** (p ** (m - 1) * (p * m - m - 1))


def cyclo_resultant(m: int, n: int) -> int:
    """R(Phi_m, Phi_n) for 0 < m < n: p**phi(m) when n/m is a power of a prime p, else 1."""
    if not 0 < m < n:
        raise ValueError("requires 0 < m < n")
    if n % m != 0:
        return 1
    ratio = n // m
    fac = factor_integer(ratio)
    if not fac.complete:
        raise IncompleteFactorizationError(f"cannot classify n/m = {ratio}")
    if len(fac.factors) != 1:
        return 1
    p = fac.factors[0][0]
    return p ** euler_phi(m)


def disc_T_closed_form(params: CycloParams) -> int:
    """disc(T) assembled from disc(Phi_{p**m}) and the binomial composition rule.

    With M = phi(p**m) and N = 2**(n-1), the inner polynomial is x**N + 1, so
        disc(T) = (-1)**(M*N*(N-1)*(M+2N)/2) * disc(Phi_{p**m})**N * N**(M*N) * p**(N-1).
    For n = 1 this degenerates to disc(Phi_{p**m}) (T is then a shift of it).
    """
    p, m, n = params.p, params.m, params.n
    M = p ** (m - 1) * (p - 1)
    N = 2 ** (n - 1)
    sign = -1 if (M * N * (N - 1) * (M + 2 * N) // 2) % 2 else 1
    return sign * cyclo_disc_prime_power(p, m) ** N * N ** (M * N) * p ** (N - 1)


def disc_T_simplified_variant(params: CycloParams) -> int:
    """A fully merged simplification of disc(T): eps-power times one power of 2 and one of p.

    Tempting because it collapses the composition rule into single exponents,
    but the audit in the harness shows it loses the recombination sign (e.g. it
    is positive where disc(T) = -8) and overstates the power of p whenever
    m >= 2. Kept only so reports can flag the divergence; never use it for
    certification. Defined for n >= 2; n = 1 values are not meaningful.
    """
    p, m, n = params.p, params.m, params.n
    eps = -1 if (p**m == 4 or p % 4 == 3) else 1
    phi = p ** (m - 1) * (p - 1)
    two_exp = (n - 1) * 2 ** (n - 1) * phi
    p_exp = m * 2 ** (n - 1) * phi - 1
    return eps ** (2 ** (n - 1)) * 2**two_exp * p**p_exp
