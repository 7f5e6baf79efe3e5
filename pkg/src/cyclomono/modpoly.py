"""Polynomial arithmetic and complete factorization over a prime field F_p.

The factorization pipeline is the classical one: squarefree decomposition,
then distinct-degree splitting, then equal-degree splitting (randomized, with
an explicit seed so results are reproducible bit for bit). For p = 2 the
equal-degree stage uses the trace map sum r + r^2 + ... + r^(2^(d-1)), since
the odd-characteristic exponentiation trick has no content there.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import kernels as K
from .arith import is_prime
from .intpoly import IntPoly

_PRIMES_SEEN: set[int] = set()


def _check_prime(p: int) -> int:
    if p not in _PRIMES_SEEN:
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        _PRIMES_SEEN.add(p)
    return p


class ModPoly:
    """Immutable dense polynomial over F_p; coeffs[i] is the coefficient of x**i."""

    __slots__ = ("p", "coeffs")

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs=()):
        _check_prime(p)
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ModPoly is immutable")

    @classmethod
    def _raw(cls, p: int, coeffs: list[int]) -> "ModPoly":
        # internal fast path: coeffs already reduced and normalized
        self = object.__new__(cls)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        return self

    @classmethod
    def x(cls, p: int) -> "ModPoly":
        return cls(p, (0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, ModPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ModPoly(self.p, (other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("ModPoly", self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"ModPoly({self.p}, {list(self.coeffs)!r})"

    def _same_modulus(self, other: "ModPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} != {other.p}")

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._same_modulus(other)
        return ModPoly._raw(self.p, K.gf_add(list(self.coeffs), list(other.coeffs), self.p))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._same_modulus(other)
        return ModPoly._raw(self.p, K.gf_sub(list(self.coeffs), list(other.coeffs), self.p))

    def __neg__(self) -> "ModPoly":
        return ModPoly._raw(self.p, K.gf_neg(list(self.coeffs), self.p))

    def __mul__(self, other) -> "ModPoly":
        if isinstance(other, int):
            return ModPoly(self.p, [c * other for c in self.coeffs])
        self._same_modulus(other)
        return ModPoly._raw(self.p, K.gf_mul(list(self.coeffs), list(other.coeffs), self.p))

    __rmul__ = __mul__

    def __divmod__(self, other: "ModPoly") -> tuple["ModPoly", "ModPoly"]:
        self._same_modulus(other)
        q, r = K.gf_divmod(list(self.coeffs), list(other.coeffs), self.p)
        return ModPoly._raw(self.p, q), ModPoly._raw(self.p, r)

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "ModPoly":
        result = ModPoly._raw(self.p, [1])
        base = self
        if e < 0:
            raise ValueError("negative exponent")
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic(self) -> "ModPoly":
        return ModPoly._raw(self.p, K.gf_monic(list(self.coeffs), self.p))

    def derivative(self) -> "ModPoly":
        return ModPoly._raw(self.p, K.gf_diff(list(self.coeffs), self.p))

    def eval(self, a: int) -> int:
        return K.gf_eval(list(self.coeffs), a % self.p, self.p)

    __call__ = eval

    def powmod(self, e: int, m: "ModPoly") -> "ModPoly":
        self._same_modulus(m)
        return ModPoly._raw(self.p, K.gf_powmod(list(self.coeffs), e, list(m.coeffs), self.p))

    def lift(self) -> IntPoly:
        """Canonical integer lift with coefficients in [0, p)."""
        return IntPoly(self.coeffs)


@dataclass(frozen=True)
class ModFactorization:
    """unit * prod(f_i ** e_i) with monic irreducible, pairwise distinct f_i."""

    p: int
    unit: int
    factors: tuple[tuple[ModPoly, int], ...]

    def product(self) -> ModPoly:
        out = ModPoly(self.p, (self.unit,))
        for f, e in self.factors:
            out = out * f**e
        return out

    def __iter__(self):
        return iter(self.factors)


def reduce_mod(f: IntPoly, p: int) -> ModPoly:
    """Reduce an integer polynomial modulo a prime."""
    return ModPoly(p, f.coeffs)


def gcd_mod(f: ModPoly, g: ModPoly) -> ModPoly:
    """Monic gcd in F_p[x]; rejects mismatched moduli and gcd(0, 0)."""
    f._same_modulus(g)
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    return ModPoly._raw(f.p, K.gf_gcd(list(f.coeffs), list(g.coeffs), f.p))


def multi_gcd(fs: list[ModPoly]) -> ModPoly:
    if not fs:
        raise ValueError("multi_gcd of an empty list")
    out = fs[0]
    for f in fs[1:]:
        if out.is_zero and f.is_zero:
            out._same_modulus(f)
            continue
        out = gcd_mod(out, f)
    if out.is_zero:
        raise ValueError("gcd(0, ..., 0) is undefined")
    return out


# -- factorization pipeline --------------------------------------------------


def _pth_root(f: list[int], p: int) -> list[int]:
    # over F_p, (sum a_i x^(p i))^(1/p) = sum a_i x^i
    return f[::p]


def _sqf_list(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of a monic f: list of (monic squarefree, exponent)."""
    out: list[tuple[list[int], int]] = []
    scale = 1
    while len(f) > 1:
        df = K.gf_diff(f, p)
        if df:
            g = K.gf_gcd(f, df, p)
            w = K.gf_quo(f, g, p)
            i = 1
            while len(w) > 1:
                y = K.gf_gcd(w, g, p)
                z = K.gf_quo(w, y, p)
                if len(z) > 1:
                    out.append((z, i * scale))
                w = y
                g = K.gf_quo(g, y, p)
                i += 1
            if len(g) <= 1:
                break
            f = _pth_root(g, p)
        else:
            f = _pth_root(f, p)
        scale *= p
    return out


def _ddf(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Distinct-degree split of a monic squarefree f: list of (product, factor degree)."""
    out: list[tuple[list[int], int]] = []
    x = [0, 1]
    h = K.gf_rem(x, f, p)
    d = 1
    while 2 * d <= len(f) - 1:
        h = K.gf_powmod(h, p, f, p)
        g = K.gf_gcd(K.gf_sub(h, x, p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = K.gf_quo(f, g, p)
            h = K.gf_rem(h, f, p)
        d += 1
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _edf(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Equal-degree split: f monic squarefree, all irreducible factors of degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = [rng.randrange(p) for _ in range(n)]
        while r and r[-1] == 0:
            r.pop()
        if len(r) <= 1:
            continue
        if p == 2:
            u = list(r)
            t = list(r)
            for _ in range(d - 1):
                u = K.gf_powmod(u, 2, f, p)
                t = K.gf_add(t, u, p)
            g = K.gf_gcd(t, f, p)
        else:
            h = K.gf_powmod(r, (p**d - 1) // 2, f, p)
            g = K.gf_gcd(K.gf_sub(h, [1], p), f, p)
        if 1 < len(g) < len(f):
            return _edf(g, d, p, rng) + _edf(K.gf_quo(f, g, p), d, p, rng)


def factor_mod(f: ModPoly, seed: int = 0) -> ModFactorization:
    """Complete factorization in F_p[x]; deterministic for a fixed seed."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    p = f.p
    unit = f.lc
    if f.degree == 0:
        return ModFactorization(p, unit, ())
    rng = random.Random((seed << 20) ^ (p & 0xFFFFF) ^ len(f.coeffs))
    monic = list(f.monic().coeffs)
    factors: list[tuple[ModPoly, int]] = []
    for sqf, e in _sqf_list(monic, p):
        for block, d in _ddf(sqf, p):
            for irr in _edf(block, d, p, rng):
                factors.append((ModPoly._raw(p, irr), e))
    factors.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs))
    return ModFactorization(p, unit, tuple(factors))


def is_irreducible_mod(f: ModPoly) -> bool:
    """Rabin irreducibility test via x**(p**d) == x checks."""
    if f.is_zero or f.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    p = f.p
    n = f.degree
    fm = list(f.monic().coeffs)
    if n == 1:
        return True
    from .arith import factor_integer

    checkpoints = {n // q for q, _ in factor_integer(n).factors}
    x = [0, 1]
    h = K.gf_rem(x, fm, p)
    for k in range(1, n + 1):
        h = K.gf_powmod(h, p, fm, p)
        if k in checkpoints:
            g = K.gf_gcd(K.gf_sub(h, x, p), fm, p)
            if len(g) != 1:
                return False
    return h == K.gf_rem(x, fm, p)
