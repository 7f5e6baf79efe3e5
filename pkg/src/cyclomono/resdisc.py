"""Resultants and discriminants over Z, plus composition-discriminant formulas.

The production resultant is a subresultant polynomial remainder sequence,
which keeps intermediate coefficients at determinant size instead of the
exponential blowup of naive pseudo-remainders. ``resultant_sylvester`` is a
deliberately independent implementation (fraction-free Bareiss elimination of
the Sylvester matrix, i.e. the determinant definition taken literally); it is
slower and exists so the two routes can be checked against each other.
"""

from __future__ import annotations

import math

from .intpoly import IntPoly


def _deg(f: list[int]) -> int:
    return len(f) - 1


def _prem(A: list[int], B: list[int]) -> list[int]:
    """Pseudo-remainder: lc(B)**(deg A - deg B + 1) * A modulo B, computed stably."""
    dB = _deg(B)
    lb = B[-1]
    R = list(A)
    e = _deg(A) - dB + 1
    while R and _deg(R) >= dB:
        shift = _deg(R) - dB
        lr = R[-1]
        R = [lb * c for c in R]
        for j in range(len(B) - 1):
            R[shift + j] -= lr * B[j]
        del R[-1]
        while R and R[-1] == 0:
            R.pop()
        e -= 1
    if e > 0 and R:
        scale = lb**e
        R = [scale * c for c in R]
    return R


def resultant(f: IntPoly, g: IntPoly) -> int:
    """R(f, g) with the convention R = a**n * b**m * prod(r_i - s_j).

    Computed by the subresultant PRS; constants obey R(c, g) = c**deg(g).
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    A, B = list(f.coeffs), list(g.coeffs)
    s = 1
    if m < n:
        A, B = B, A
        if (m & 1) and (n & 1):
            s = -1
    gg = 1
    hh = 1
    while True:
        dA, dB = _deg(A), _deg(B)
        delta = dA - dB
        if (dA & 1) and (dB & 1):
            s = -s
        R = _prem(A, B)
        if not R:
            return 0
        A = B
        divisor = gg * hh**delta
        B = [c // divisor for c in R]
        gg = A[-1]
        if delta > 0:
            num = gg**delta
            den = hh ** (delta - 1)
            hh = num // den
        if _deg(B) == 0:
            break
    dA = _deg(A)
    return s * (B[0] ** dA // hh ** (dA - 1))


def sylvester_matrix(f: IntPoly, g: IntPoly) -> list[list[int]]:
    """(m+n) x (m+n) Sylvester matrix, f rows first, coefficients descending."""
    m, n = f.degree, g.degree
    if m == 0 or n == 0:
        raise ValueError("Sylvester matrix needs two nonconstant polynomials")
    size = m + n
    fs = list(reversed(f.coeffs))
    gs = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fs + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gs + [0] * (size - n - 1 - i))
    return rows


def _bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free determinant; all intermediate divisions are exact."""
    m = [row[:] for row in mat]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant_sylvester(f: IntPoly, g: IntPoly) -> int:
    """Resultant as the Bareiss determinant of the Sylvester matrix (test oracle)."""
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    return _bareiss_det(sylvester_matrix(f, g))


def discriminant(f: IntPoly) -> int:
    """(-1)**(m(m-1)/2) / lc(f) * R(f, f'); exact by construction."""
    if f.is_zero or f.degree < 1:
        raise ValueError("discriminant is defined for degree >= 1")
    m = f.degree
    if m == 1:
        return 1
    num = resultant(f, f.derivative())
    if m % 4 in (2, 3):
        num = -num
    assert num % f.lc == 0, "discriminant division must be exact"
    return num // f.lc


def content(f: IntPoly) -> int:
    """gcd of the coefficients, signed to match the leading coefficient."""
    if f.is_zero:
        return 0
    c = 0
    for a in f.coeffs:
        c = math.gcd(c, a)
    return c if f.lc > 0 else -c


def primitive_part(f: IntPoly) -> IntPoly:
    if f.is_zero:
        return f
    c = content(f)
    return IntPoly([a // c for a in f.coeffs])


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """gcd in Z[x] (primitive, positive leading coefficient) via a primitive PRS."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero:
        return primitive_part(g) if g.lc > 0 else primitive_part(-g)
    if g.is_zero:
        return primitive_part(f) if f.lc > 0 else primitive_part(-f)
    cont = math.gcd(content(f), content(g))
    A, B = primitive_part(f), primitive_part(g)
    if A.degree < B.degree:
        A, B = B, A
    while not B.is_zero:
        if B.degree == 0:
            return IntPoly.constant(abs(cont))
        R = IntPoly(_prem(list(A.coeffs), list(B.coeffs)))
        A, B = B, primitive_part(R)
    result = primitive_part(A) * abs(cont)
    return result if result.lc > 0 else -result


def is_squarefree(f: IntPoly) -> bool:
    """True when f has no repeated factor over Q."""
    if f.is_zero or f.degree < 1:
        raise ValueError("squarefreeness is defined for degree >= 1")
    return poly_gcd(f, f.derivative()).degree == 0


def disc_composition(f: IntPoly, g: IntPoly) -> int:
    """Discriminant of f(g(x)) from disc(f) and the resultant R(f(g), g')."""
    if f.is_zero or g.is_zero or f.degree < 1 or g.degree < 1:
        raise ValueError("composition discriminant needs degrees >= 1")
    m, n = f.degree, g.degree
    a, b = f.lc, g.lc
    sign = -1 if (m * m * n * (n - 1) // 2) % 2 else 1
    r = resultant(f.compose(g), g.derivative())
    num = sign * a ** (n - 1) * discriminant(f) ** n * r
    b_exp = m * (m * n - n - 1)
    if b_exp >= 0:
        return num * b**b_exp
    den = b ** (-b_exp)
    assert num % den == 0, "composition discriminant division must be exact"
    return num // den


def disc_composition_binomial(f: IntPoly, b: int, n: int, c: int) -> int:
    """Discriminant of f(b*x**n + c) in closed form, no resultant computation."""
    if b == 0:
        raise ValueError("b must be nonzero")
    if n < 1:
        raise ValueError("n must be >= 1")
    if f.is_zero or f.degree < 1:
        raise ValueError("f must have degree >= 1")
    m = f.degree
    a = f.lc
    sign = -1 if (m * n * (n - 1) * (m + 2 * n) // 2) % 2 else 1
    return (
        sign
        * a ** (n - 1)
        * b ** (m * (m * n - 1))
        * discriminant(f) ** n
        * n ** (m * n)
        * f.eval(c) ** (n - 1)
    )
