#!/usr/bin/env python3
"""Benchmark the compiled F_p kernels against the pure-Python fallback.

Times the three kernel operations that dominate the factorization pipeline
(multiplication, Frobenius powering, gcd) across moduli and degrees, plus an
end-to-end factorization. Run as: python benchmarks/bench_kernels.py
"""

import random
import time

from cyclomono import _kernels_pure as pure
from cyclomono import kernels

try:
    from cyclomono import _speedups as compiled
except ImportError:
    compiled = None


def rand_poly(rng, p, deg):
    return [rng.randrange(p) for _ in range(deg)] + [rng.randrange(1, p)]


def timeit(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels():
    rng = random.Random(1)
    rows = []
    for p, deg in ((2, 64), (2, 256), (3, 64), (3, 256), (13, 128), (524309, 128)):
        f = rand_poly(rng, p, deg)
        g = rand_poly(rng, p, deg)
        m = rand_poly(rng, p, deg)
        e = p**64
        for name, args, pure_fn, comp_fn in (
            ("mul", (f, g, p), pure.gf_mul, compiled.gf_mul if compiled else None),
            ("powmod", (f, e, m, p), pure.gf_powmod, compiled.gf_powmod if compiled else None),
            ("gcd", (f, g, p), pure.gf_gcd, compiled.gf_gcd if compiled else None),
        ):
            t_pure = timeit(pure_fn, *args)
            t_comp = timeit(comp_fn, *args) if comp_fn else None
            rows.append((p, deg, name, t_pure, t_comp))
    print(f"{'p':>8} {'deg':>5} {'op':>8} {'pure':>12} {'compiled':>12} {'speedup':>8}")
    for p, deg, name, t_pure, t_comp in rows:
        if t_comp is None:
            print(f"{p:>8} {deg:>5} {name:>8} {t_pure * 1e6:>10.1f}us {'-':>12} {'-':>8}")
        else:
            print(
                f"{p:>8} {deg:>5} {name:>8} {t_pure * 1e6:>10.1f}us {t_comp * 1e6:>10.1f}us "
                f"{t_pure / t_comp:>7.1f}x"
            )


def bench_factorization():
    from cyclomono.cyclotomic import cyclotomic_poly
    from cyclomono.modpoly import factor_mod, reduce_mod

    print()
    print(f"end-to-end factor_mod (dispatch backend: {kernels.BACKEND})")
    for n, q in ((105, 2), (165, 13), (256, 3)):
        f = reduce_mod(cyclotomic_poly(n), q)
        t = timeit(factor_mod, f, repeat=3)
        print(f"  Phi_{n} mod {q} (degree {f.degree}): {t * 1e3:.2f} ms")


if __name__ == "__main__":
    if compiled is None:
        print("compiled kernels not available; timing the pure backend only")
    bench_kernels()
    bench_factorization()
