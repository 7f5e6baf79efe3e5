"""Kernel dispatch: compiled F_p arithmetic when available, pure Python otherwise.

The compiled extension accelerates odd word-size moduli. F_2 always uses the
pure bit-packed path, which already runs on CPython's C bignum loops and
benchmarks ahead of the word-array extension. Set CYCLOMONO_PURE=1 before
import to force the pure backend everywhere (used by the benchmark and tests).
"""

from __future__ import annotations

import os

from . import _kernels_pure as _pure

_WORD_LIMIT = 2**31

_compiled = None
if os.environ.get("CYCLOMONO_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure"


def _use_compiled(p: int) -> bool:
    return _compiled is not None and 2 < p < _WORD_LIMIT


def gf_add(f, g, p):
    return _pure.gf_add(f, g, p)


def gf_sub(f, g, p):
    return _pure.gf_sub(f, g, p)


def gf_neg(f, p):
    return _pure.gf_neg(f, p)


def gf_mul(f, g, p):
    if _use_compiled(p):
        return _compiled.gf_mul(f, g, p)
    return _pure.gf_mul(f, g, p)


def gf_divmod(f, g, p):
    if _use_compiled(p):
        return _compiled.gf_divmod(f, g, p)
    return _pure.gf_divmod(f, g, p)


def gf_rem(f, g, p):
    if _use_compiled(p):
        return _compiled.gf_rem(f, g, p)
    return _pure.gf_rem(f, g, p)


def gf_quo(f, g, p):
    if _use_compiled(p):
        return _compiled.gf_quo(f, g, p)
    return _pure.gf_quo(f, g, p)


def gf_monic(f, p):
    return _pure.gf_monic(f, p)


def gf_gcd(f, g, p):
    if _use_compiled(p):
        return _compiled.gf_gcd(f, g, p)
    return _pure.gf_gcd(f, g, p)


def gf_gcdex(f, g, p):
    return _pure.gf_gcdex(f, g, p)


def gf_mulmod(f, g, m, p):
    if _use_compiled(p):
        return _compiled.gf_mulmod(f, g, m, p)
    return _pure.gf_mulmod(f, g, m, p)


def gf_powmod(f, e, m, p):
    if _use_compiled(p):
        return _compiled.gf_powmod(f, e, m, p)
    return _pure.gf_powmod(f, e, m, p)


def gf_diff(f, p):
    return _pure.gf_diff(f, p)


def gf_eval(f, a, p):
    return _pure.gf_eval(f, a, p)
