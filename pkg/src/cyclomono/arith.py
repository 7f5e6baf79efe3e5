"""Integer-level number theory: primality, factorization, totients, orders, valuations.

Everything here is exact and deterministic: the probabilistic pieces
(Miller-Rabin beyond 64 bits, Pollard rho restarts) draw their randomness from
seeds derived from the input, so repeated calls always agree.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

TRIAL_DIVISION_BOUND = 10**6
RHO_ITERATION_CAP = 2**24
RHO_RESTARTS = 8

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Witness set proven deterministic for n < 3.317e24, which covers 64-bit inputs.
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotCoprimeError(ValueError):
    """Raised when an operation requires coprime arguments and they are not."""


class IncompleteFactorizationError(ValueError):
    """Raised when an exact answer would depend on primes hidden in a cofactor."""


@dataclass(frozen=True)
class FactoredInteger:
    """Multiset of (prime, exponent) pairs plus an optional unfactored cofactor.

    Invariants: primes strictly increasing, every listed prime passes
    ``is_prime``, and ``sign * cofactor * prod(p**e)`` reconstructs the
    original integer. ``cofactor == 1`` means the factorization is complete;
    otherwise the cofactor has no prime divisor below the trial-division bound.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        v = self.sign * self.cofactor
        for p, e in self.factors:
            v *= p**e
        return v

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0


def _miller_rabin_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if a witnesses that n is composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test: deterministic below 2**64, error < 2**-128 beyond.

    Small inputs fall to trial division; 64-bit inputs use the fixed
    Miller-Rabin witness set; larger inputs use 64 rounds with bases drawn
    from an ``n``-seeded generator (so the answer is still deterministic).
    """
    if n < 1:
        raise ValueError("is_prime expects n >= 1")
    if n == 1:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 2**64:
        bases = _MR_BASES_64
    else:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(64))
    return not any(_miller_rabin_witness(n, a, d, s) for a in bases)


def _pollard_brent(n: int, seed: int) -> int | None:
    """Brent-cycle Pollard rho; returns a nontrivial divisor of composite n, or None.

    Each of the RHO_RESTARTS attempts uses its own deterministic parameters and
    gives up after RHO_ITERATION_CAP evaluations of the iteration map.
    """
    if n % 2 == 0:
        return 2
    for attempt in range(RHO_RESTARTS):
        rng = random.Random(((seed & 0xFFFFFFFF) << 40) ^ (attempt << 32) ^ (n & 0xFFFFFFFF))
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        evals = 0
        while g == 1 and evals < RHO_ITERATION_CAP:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            evals += r
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                evals += min(m, r - k)
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factor_integer(n: int, seed: int = 0) -> FactoredInteger:
    """Factor n by trial division to 10**6 then capped Pollard rho.

    A residue that survives both stages is reported as ``cofactor`` rather
    than guessed at; callers that need completeness must check ``complete``.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = 1 if n > 0 else -1
    n = abs(n)
    powers: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            powers[p] = powers.get(p, 0) + 1
            n //= p
    d = 5
    while d <= TRIAL_DIVISION_BOUND and d * d <= n:
        for step in (0, 2):
            q = d + step
            while n % q == 0:
                powers[q] = powers.get(q, 0) + 1
                n //= q
        d += 6
    cofactor = 1
    if n > 1:
        if d * d > n:
            # trial division ran to sqrt(n); the residue is prime
            powers[n] = powers.get(n, 0) + 1
        else:
            stack = [n]
            while stack:
                m = stack.pop()
                if m == 1:
                    continue
                if is_prime(m):
                    powers[m] = powers.get(m, 0) + 1
                    continue
                divisor = _pollard_brent(m, seed)
                if divisor is None:
                    cofactor *= m
                else:
                    stack.append(divisor)
                    stack.append(m // divisor)
    return FactoredInteger(sign, tuple(sorted(powers.items())), cofactor)


def euler_phi(n: int) -> int:
    """Euler's totient, computed from the factorization of n."""
    if n < 1:
        raise ValueError("euler_phi expects n >= 1")
    if n == 1:
        return 1
    fac = factor_integer(n)
    if not fac.complete:
        raise IncompleteFactorizationError(f"cannot factor {n} completely")
    phi = 1
    for p, e in fac.factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def multiplicative_order(q: int, n: int) -> int:
    """Least b >= 1 with q**b == 1 (mod n), found by shrinking phi(n) along its prime divisors.

    n == 1 returns 1 (the trivial group). Non-coprime input raises
    NotCoprimeError rather than returning a bogus order.
    """
    if n < 1:
        raise ValueError("multiplicative_order expects n >= 1")
    if math.gcd(q, n) != 1:
        raise NotCoprimeError(f"gcd({q}, {n}) > 1: order undefined")
    if n == 1:
        return 1
    b = euler_phi(n)
    for p, _ in factor_integer(b).factors:
        while b % p == 0 and pow(q, b // p, n) == 1:
            b //= p
    return b


def p_adic_valuation(n: int, p: int) -> int:
    """Largest v with p**v dividing n; the sign of n is ignored."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
