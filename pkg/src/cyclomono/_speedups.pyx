# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense polynomial arithmetic over F_p, word-size p.

Same calling conventions as ``_kernels_pure``: polynomials are Python lists of
ints in [0, p) with no trailing zeros, [] is zero. Only 2 <= p < 2**31 is
supported; the dispatcher never routes larger moduli here.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64


cdef inline u64 _powmod_u64(u64 b, u64 e, u64 p):
    cdef u64 r = 1 % p
    b %= p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


cdef u64* _from_list(list f, Py_ssize_t* n) except? NULL:
    cdef Py_ssize_t m = len(f)
    cdef Py_ssize_t i
    cdef u64* buf
    n[0] = m
    if m == 0:
        return NULL
    buf = <u64*> malloc(m * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = f[i]
    return buf


cdef list _to_list(u64* a, Py_ssize_t n):
    cdef Py_ssize_t i
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return [a[i] for i in range(n)]


cdef Py_ssize_t _norm(u64* a, Py_ssize_t n):
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return n


cdef void _mul_into(u64* out, u64* a, Py_ssize_t na, u64* b, Py_ssize_t nb, u64 p):
    # out must have room for na + nb - 1 entries and be zeroed by the caller
    cdef Py_ssize_t i, j
    cdef u64 ai
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                out[i + j] = (out[i + j] + ai * b[j]) % p


cdef Py_ssize_t _rem_inplace(u64* r, Py_ssize_t nr, u64* g, Py_ssize_t ng, u64 p):
    # reduce r (length nr) modulo g (length ng >= 1); returns normalized length
    cdef Py_ssize_t k, j
    cdef u64 c
    cdef u64 inv = _powmod_u64(g[ng - 1], p - 2, p)
    if ng == 1:
        return 0
    for k in range(nr - ng, -1, -1):
        c = r[k + ng - 1] % p
        if c:
            c = c * inv % p
            for j in range(ng - 1):
                if g[j]:
                    r[k + j] = (r[k + j] + p * p - c * g[j] % p) % p
        r[k + ng - 1] = 0
    return _norm(r, nr if nr < ng - 1 else ng - 1)


def gf_mul(list f, list g, p_obj):
    cdef u64 p = p_obj
    cdef Py_ssize_t na, nb
    cdef u64* a = _from_list(f, &na)
    cdef u64* b = _from_list(g, &nb)
    cdef u64* out = NULL
    if na == 0 or nb == 0:
        free(a); free(b)
        return []
    try:
        out = <u64*> malloc((na + nb - 1) * sizeof(u64))
        if out == NULL:
            raise MemoryError()
        memset(out, 0, (na + nb - 1) * sizeof(u64))
        _mul_into(out, a, na, b, nb, p)
        return _to_list(out, na + nb - 1)
    finally:
        free(a); free(b); free(out)


def gf_divmod(list f, list g, p_obj):
    cdef u64 p = p_obj
    cdef Py_ssize_t na, nb, k, j
    cdef u64 c, inv
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    cdef u64* a = _from_list(f, &na)
    cdef u64* b = _from_list(g, &nb)
    cdef u64* q = NULL
    if na < nb:
        free(a); free(b)
        return [], list(f)
    try:
        inv = _powmod_u64(b[nb - 1], p - 2, p)
        q = <u64*> malloc((na - nb + 1) * sizeof(u64))
        if q == NULL:
            raise MemoryError()
        memset(q, 0, (na - nb + 1) * sizeof(u64))
        for k in range(na - nb, -1, -1):
            c = a[k + nb - 1] % p
            if c:
                c = c * inv % p
                q[k] = c
                for j in range(nb - 1):
                    if b[j]:
                        a[k + j] = (a[k + j] + p * p - c * b[j] % p) % p
            a[k + nb - 1] = 0
        return _to_list(q, na - nb + 1), _to_list(a, nb - 1)
    finally:
        free(a); free(b); free(q)


def gf_rem(list f, list g, p_obj):
    return gf_divmod(f, g, p_obj)[1]


def gf_quo(list f, list g, p_obj):
    return gf_divmod(f, g, p_obj)[0]


def gf_gcd(list f, list g, p_obj):
    cdef u64 p = p_obj
    cdef Py_ssize_t na, nb, tmp_n
    cdef u64* a = _from_list(f, &na)
    cdef u64* b = _from_list(g, &nb)
    cdef u64* t = NULL
    cdef u64 inv
    cdef Py_ssize_t i
    na = _norm(a, na)
    nb = _norm(b, nb)
    try:
        while nb > 0:
            na = _rem_inplace(a, na, b, nb, p)
            t = a; a = b; b = t; t = NULL
            tmp_n = na; na = nb; nb = tmp_n
        if na == 0:
            return []
        inv = _powmod_u64(a[na - 1], p - 2, p)
        for i in range(na):
            a[i] = a[i] * inv % p
        return _to_list(a, na)
    finally:
        free(a); free(b)


def gf_mulmod(list f, list g, list m, p_obj):
    cdef u64 p = p_obj
    cdef Py_ssize_t na, nb, nm, nout
    if not m:
        raise ZeroDivisionError("polynomial division by zero")
    cdef u64* a = _from_list(f, &na)
    cdef u64* b = _from_list(g, &nb)
    cdef u64* mm = _from_list(m, &nm)
    cdef u64* out = NULL
    if na == 0 or nb == 0:
        free(a); free(b); free(mm)
        return []
    try:
        nout = na + nb - 1
        out = <u64*> malloc(nout * sizeof(u64))
        if out == NULL:
            raise MemoryError()
        memset(out, 0, nout * sizeof(u64))
        _mul_into(out, a, na, b, nb, p)
        if nout >= nm:
            nout = _rem_inplace(out, nout, mm, nm, p)
        return _to_list(out, nout)
    finally:
        free(a); free(b); free(mm); free(out)


def gf_powmod(list f, e, list m, p_obj):
    """f**e mod m with arbitrary-precision exponent e >= 0."""
    cdef u64 p = p_obj
    cdef Py_ssize_t nm, nb, nr, scratch_len, i
    cdef u64* mm = NULL
    cdef u64* base = NULL
    cdef u64* res = NULL
    cdef u64* scratch = NULL
    if e < 0:
        raise ValueError("negative exponent")
    if not m:
        raise ZeroDivisionError("polynomial division by zero")
    mm = _from_list(m, &nm)
    if nm == 1:
        free(mm)
        return []
    bits = bin(e)[2:] if e else ""
    try:
        base = <u64*> malloc(nm * sizeof(u64))
        res = <u64*> malloc(nm * sizeof(u64))
        scratch_len = 2 * nm
        scratch = <u64*> malloc(scratch_len * sizeof(u64))
        if base == NULL or res == NULL or scratch == NULL:
            raise MemoryError()
        # base = f mod m
        fb = gf_rem(f, m, p_obj)
        memset(base, 0, nm * sizeof(u64))
        for i in range(len(fb)):
            base[i] = fb[i]
        nb = len(fb)
        memset(res, 0, nm * sizeof(u64))
        res[0] = 1
        nr = 1
        for ch in bits:
            memset(scratch, 0, scratch_len * sizeof(u64))
            if nr:
                _mul_into(scratch, res, nr, res, nr, p)
                nr = _rem_inplace(scratch, 2 * nr - 1, mm, nm, p) if 2 * nr - 1 >= nm else _norm(scratch, 2 * nr - 1)
            memcpy(res, scratch, nm * sizeof(u64))
            if ch == "1" and nr and nb:
                memset(scratch, 0, scratch_len * sizeof(u64))
                _mul_into(scratch, res, nr, base, nb, p)
                nr = _rem_inplace(scratch, nr + nb - 1, mm, nm, p) if nr + nb - 1 >= nm else _norm(scratch, nr + nb - 1)
                memcpy(res, scratch, nm * sizeof(u64))
            elif ch == "1" and (nr == 0 or nb == 0):
                nr = 0
                memset(res, 0, nm * sizeof(u64))
        return _to_list(res, nr)
    finally:
        free(mm); free(base); free(res); free(scratch)
