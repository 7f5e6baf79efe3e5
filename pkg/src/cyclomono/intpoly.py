"""Exact dense univariate polynomials with arbitrary-precision integer coefficients.

``coeffs[i]`` holds the coefficient of x**i. The zero polynomial is the empty
tuple and deliberately has no degree: operations that need one raise instead
of inventing -infinity arithmetic. Values are immutable after construction and
safe to share across tasks.
"""

from __future__ import annotations

from typing import Iterable

KARATSUBA_CUTOFF = 32


class NonMonicDivisorError(ValueError):
    """Division was requested by a divisor that is not monic."""


def _strip(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _mul_lists(a: list[int] | tuple[int, ...], b: list[int] | tuple[int, ...]) -> list[int]:
    """Schoolbook product with a Karatsuba switch for larger operands."""
    if not a or not b:
        return []
    if min(len(a), len(b)) <= KARATSUBA_CUTOFF:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return out
    half = max(len(a), len(b)) // 2
    a0, a1 = list(a[:half]), list(a[half:])
    b0, b1 = list(b[:half]), list(b[half:])
    low = _mul_lists(a0, b0)
    high = _mul_lists(a1, b1)
    asum = [x + y for x, y in zip(a0, a1)] + (a1[len(a0):] or a0[len(a1):])
    bsum = [x + y for x, y in zip(b0, b1)] + (b1[len(b0):] or b0[len(b1):])
    mid = _mul_lists(asum, bsum)
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(low):
        out[i] += c
        mid[i] -= c
    for i, c in enumerate(high):
        out[i + 2 * half] += c
        if i < len(mid):
            mid[i] -= c
        else:
            mid.append(-c)
    for i, c in enumerate(mid):
        out[i + half] += c
    return out


class IntPoly:
    """Immutable dense polynomial over the integers."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", tuple(_strip(cs)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    # -- structure ---------------------------------------------------------

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
        """Leading coefficient."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == IntPoly.constant(other).coeffs
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "IntPoly":
        other = IntPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "IntPoly":
        other = IntPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        other = IntPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return IntPoly(_mul_lists(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def monic_divmod(self, d: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Exact division by a monic divisor: f = q*d + r with r = 0 or deg r < deg d."""
        if d.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if not d.is_monic:
            raise NonMonicDivisorError(f"divisor {d} is not monic")
        dd = d.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < dd:
            return IntPoly(), self
        quot = [0] * (len(rem) - dd)
        dcs = d.coeffs
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd]
            if c:
                quot[k] = c
                for j in range(dd):
                    rem[k + j] -= c * dcs[j]
                rem[k + dd] = 0
        return IntPoly(quot), IntPoly(rem)

    def __floordiv__(self, d: "IntPoly") -> "IntPoly":
        q, r = self.monic_divmod(d)
        if not r.is_zero:
            raise ValueError("floor division with nonzero remainder; use monic_divmod")
        return q

    def compose(self, g: "IntPoly") -> "IntPoly":
        """f(g(x)) by Horner evaluation over the polynomial ring."""
        result = IntPoly()
        for c in reversed(self.coeffs):
            result = result * g + c
        return result

    def shift(self, c: int) -> "IntPoly":
        """f(x + c)."""
        if c == 0:
            return self
        return self.compose(IntPoly((c, 1)))

    def derivative(self) -> "IntPoly":
        return IntPoly([i * ci for i, ci in enumerate(self.coeffs)][1:])

    def eval(self, t: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * t + c
        return v

    __call__ = eval

    def pow_coeffmod(self, e: int, modulus: int) -> "IntPoly":
        """f**e with every coefficient reduced into [0, modulus), by square and multiply."""
        if e < 1:
            raise ValueError("exponent must be >= 1")
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        base = IntPoly([c % modulus for c in self.coeffs])
        result = IntPoly.constant(1 % modulus)
        while e:
            if e & 1:
                result = IntPoly([c % modulus for c in (result * base).coeffs])
            base = IntPoly([c % modulus for c in (base * base).coeffs])
            e >>= 1
        return result

    def max_norm(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def format_poly(coeffs: tuple[int, ...] | list[int]) -> str:
    """Render a coefficient sequence in the CLI grammar, highest power first.

    Examples: ``x^4 + 3*x^2 + 3``, ``x^2 - 5``, ``-2*x``, ``0``.
    """
    cs = _strip(list(coeffs))
    if not cs:
        return "0"
    parts: list[str] = []
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = "x" if mag == 1 else f"{mag}*x"
        else:
            body = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
