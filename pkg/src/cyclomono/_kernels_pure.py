"""Pure-Python kernels for dense polynomial arithmetic over F_p.

Polynomials are plain lists of ints in [0, p), ascending powers, with no
trailing zeros; [] is the zero polynomial. For p == 2 the coefficients are
packed into a single Python int (bit i = coefficient of x**i) so that the
inner loops run on CPython's C bignum routines; for odd p the loops are
straight list arithmetic. The compiled twin in ``_speedups`` implements the
same contracts for word-size p.
"""

from __future__ import annotations


def _strip(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


# -- F_2 bit packing ---------------------------------------------------------


def _to_bits(f: list[int]) -> int:
    v = 0
    for i, c in enumerate(f):
        if c & 1:
            v |= 1 << i
    return v


def _from_bits(v: int) -> list[int]:
    if v == 0:
        return []
    return [(v >> i) & 1 for i in range(v.bit_length())]


def _mul2(a: int, b: int) -> int:
    """Carry-less product of two F_2[x] polynomials packed as ints."""
    if a == 0 or b == 0:
        return 0
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def _sq2(a: int) -> int:
    """Square in F_2[x]: spread the bits (base-4 reinterpretation trick)."""
    if a == 0:
        return 0
    return int(bin(a)[2:], 4)


def _divmod2(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _gcd2(a: int, b: int) -> int:
    while b:
        a, b = b, _divmod2(a, b)[1]
    return a


# -- generic helpers ---------------------------------------------------------


def gf_add(f: list[int], g: list[int], p: int) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return _strip(out)


def gf_sub(f: list[int], g: list[int], p: int) -> list[int]:
    out = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return _strip(out)


def gf_neg(f: list[int], p: int) -> list[int]:
    return [(-c) % p for c in f]


def gf_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    if p == 2:
        return _from_bits(_mul2(_to_bits(f), _to_bits(g)))
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    return _strip([c % p for c in out])


def gf_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if p == 2:
        q, r = _divmod2(_to_bits(f), _to_bits(g))
        return _from_bits(q), _from_bits(r)
    if len(f) < len(g):
        return [], list(f)
    rem = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    quot = [0] * (len(f) - dg)
    for k in range(len(rem) - dg - 1, -1, -1):
        c = rem[k + dg] % p
        if c:
            c = c * inv % p
            quot[k] = c
            for j in range(dg):
                if g[j]:
                    rem[k + j] = (rem[k + j] - c * g[j]) % p
        rem[k + dg] = 0
    return _strip(quot), _strip([c % p for c in rem])


def gf_rem(f: list[int], g: list[int], p: int) -> list[int]:
    return gf_divmod(f, g, p)[1]


def gf_quo(f: list[int], g: list[int], p: int) -> list[int]:
    return gf_divmod(f, g, p)[0]


def gf_monic(f: list[int], p: int) -> list[int]:
    if not f or f[-1] == 1:
        return list(f)
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def gf_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    if p == 2:
        return _from_bits(_gcd2(_to_bits(f), _to_bits(g)))
    a, b = list(f), list(g)
    while b:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_gcdex(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Extended Euclid: returns (s, t, d) with s*f + t*g = d, d the monic gcd."""
    a, b = list(f), list(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while b:
        q, r = gf_divmod(a, b, p)
        a, b = b, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    if not a:
        return [], [], []
    inv = pow(a[-1], p - 2, p)
    scale = [c * inv % p for c in a]
    return [c * inv % p for c in s0], [c * inv % p for c in t0], scale


def gf_mulmod(f: list[int], g: list[int], m: list[int], p: int) -> list[int]:
    return gf_rem(gf_mul(f, g, p), m, p)


def gf_powmod(f: list[int], e: int, m: list[int], p: int) -> list[int]:
    """f**e mod m, square-and-multiply; e is an arbitrary nonnegative int."""
    if e < 0:
        raise ValueError("negative exponent")
    if p == 2:
        fm = _divmod2(_to_bits(f), _to_bits(m))[1]
        mb = _to_bits(m)
        out = 1 if mb.bit_length() > 1 else 0
        if e == 0:
            return _from_bits(out)
        for bit in bin(e)[2:]:
            out = _divmod2(_sq2(out), mb)[1]
            if bit == "1":
                out = _divmod2(_mul2(out, fm), mb)[1]
        return _from_bits(out)
    out = gf_rem([1], m, p)
    if e == 0:
        return out
    base = gf_rem(f, m, p)
    for bit in bin(e)[2:]:
        out = gf_rem(gf_mul(out, out, p), m, p)
        if bit == "1":
            out = gf_rem(gf_mul(out, base, p), m, p)
    return out


def gf_diff(f: list[int], p: int) -> list[int]:
    return _strip([(i * c) % p for i, c in enumerate(f)][1:])


def gf_eval(f: list[int], a: int, p: int) -> int:
    v = 0
    for c in reversed(f):
        v = (v * a + c) % p
    return v
