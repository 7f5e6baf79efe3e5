"""Decision procedures: Eisenstein, Dedekind's index criterion, irreducibility
certification over Z, and the full monogenicity check.

The monogenicity logic rests on the index-discriminant relation
disc(f) = index**2 * disc(K): a prime can divide the index only if its square
divides disc(f), so primes appearing to the first power are never tested, and
an incomplete discriminant factorization downgrades the conclusion to
"inconclusive" rather than guessing.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from .arith import factor_integer, is_prime, p_adic_valuation, FactoredInteger
from .intpoly import IntPoly
from .modpoly import ModFactorization, ModPoly, factor_mod, gcd_mod, multi_gcd, reduce_mod
from .resdisc import discriminant, is_squarefree, poly_gcd

logger = logging.getLogger(__name__)

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
UNKNOWN = "unknown"

PASS = "pass"
FAIL = "fail"

MONOGENIC = "monogenic"
NOT_MONOGENIC = "not_monogenic"
INCONCLUSIVE = "inconclusive"


class ConradPreconditionError(ValueError):
    """The ramification check was invoked outside its hypotheses."""


@dataclass(frozen=True)
class DedekindOutcome:
    """One prime's worth of Dedekind data: the lifts, F = (g*h - T)/p, and the gcd."""

    p: int
    g_lift: IntPoly
    h_lift: IntPoly
    F: IntPoly
    gcd_bar: ModPoly
    verdict: str  # PASS or FAIL

    @property
    def passed(self) -> bool:
        return self.verdict == PASS


@dataclass(frozen=True)
class IrreducibilityWitness:
    """How irreducibility (or its failure) was established.

    method is one of "eisenstein" (with prime and shift), "mod_prime" (with
    prime), "factor_found" (with factor), or "search_exhausted".
    """

    status: str  # IRREDUCIBLE, REDUCIBLE, UNKNOWN
    method: str
    prime: int | None = None
    shift: int | None = None
    factor: IntPoly | None = None


@dataclass(frozen=True)
class FactorSearchCaps:
    """Limits for the rational factor search."""

    degree: int = 32
    subset_budget: int = 2**20
    prime_bits: int = 20
    prime_tries: int = 256


DEFAULT_CAPS = FactorSearchCaps()


@dataclass(frozen=True)
class MonogenicityCertificate:
    poly: IntPoly
    disc: int
    disc_factored: FactoredInteger
    irreducibility: IrreducibilityWitness
    dedekind: tuple[DedekindOutcome, ...]
    conclusion: str  # MONOGENIC, NOT_MONOGENIC, INCONCLUSIVE


def eisenstein_primes(f: IntPoly) -> list[int]:
    """All primes p with p dividing every non-leading coefficient and p**2 not
    dividing the constant term.

    Candidates come from factoring the constant term; a zero constant term or
    an incompletely factored one yields [] (the latter is logged, since a
    qualifying prime could then hide in the cofactor).
    """
    if f.is_zero or not f.is_monic:
        raise ValueError("Eisenstein screening requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("Eisenstein screening requires degree >= 1")
    a0 = f.coeffs[0]
    if a0 == 0:
        return []
    fac = factor_integer(a0)
    if not fac.complete:
        logger.warning("constant term %d not fully factored; Eisenstein screen incomplete", a0)
        return []
    out = []
    body = f.coeffs[:-1]
    for p, e in fac.factors:
        if e >= 2:
            continue
        if all(c % p == 0 for c in body):
            out.append(p)
    return out


def _lift_with_noise(base: ModPoly, rng: random.Random | None) -> IntPoly:
    """Monic integer lift of a monic ModPoly; optionally perturbed by p * r."""
    lifted = base.lift()
    if rng is None:
        return lifted
    p = base.p
    deg = base.degree
    noise = [p * rng.randrange(-3, 4) for _ in range(deg)] + [0]
    return lifted + IntPoly(noise)


def dedekind_test(
    T: IntPoly,
    p: int,
    seed: int = 0,
    lift_rng: random.Random | None = None,
) -> DedekindOutcome:
    """Dedekind's criterion at p: pass iff p does not divide [Z_K : Z[theta]].

    Factor T mod p, set g = product of one monic lift of each distinct factor,
    h = a monic lift of (T mod p)/(g mod p), F = (g*h - T)/p; the verdict is
    "pass" exactly when gcd(F, g, h) mod p is constant. The verdict does not
    depend on the choice of lifts; pass lift_rng to randomize them and see.
    """
    if T.is_zero or not T.is_monic:
        raise ValueError("Dedekind test requires a monic polynomial")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    Tbar = reduce_mod(T, p)
    # squarefree reduction short-circuit: T mod p squarefree forces h = 1,
    # hence a constant gcd, exactly what the full path would conclude
    dTbar = Tbar.derivative()
    if not dTbar.is_zero and gcd_mod(Tbar, dTbar).degree == 0:
        g_lift = _lift_with_noise(Tbar, lift_rng)
        h_lift = IntPoly((1,))
        F = _exact_quotient_by_int(g_lift * h_lift - T, p)
        gcd_bar = multi_gcd([reduce_mod(F, p), Tbar, reduce_mod(h_lift, p)])
        return DedekindOutcome(p, g_lift, h_lift, F, gcd_bar, PASS)
    fac: ModFactorization = factor_mod(Tbar, seed=seed)
    g_bar = ModPoly(p, (1,))
    h_bar = ModPoly(p, (1,))
    g_lift = IntPoly((1,))
    for t_bar, e in fac.factors:
        g_bar = g_bar * t_bar
        g_lift = g_lift * _lift_with_noise(t_bar, lift_rng)
        if e > 1:
            h_bar = h_bar * t_bar ** (e - 1)
    h_lift = _lift_with_noise(h_bar, lift_rng) if h_bar.degree >= 1 else h_bar.lift()
    F = _exact_quotient_by_int(g_lift * h_lift - T, p)
    gcd_bar = multi_gcd([reduce_mod(F, p), reduce_mod(g_lift, p), reduce_mod(h_lift, p)])
    verdict = PASS if gcd_bar.degree == 0 else FAIL
    return DedekindOutcome(p, g_lift, h_lift, F, gcd_bar, verdict)


def _exact_quotient_by_int(f: IntPoly, p: int) -> IntPoly:
    out = []
    for c in f.coeffs:
        q, r = divmod(c, p)
        if r:
            raise ArithmeticError(f"coefficient {c} not divisible by {p}")
        out.append(q)
    return IntPoly(out)


# -- rational factor search (desk-scale Zassenhaus) ---------------------------


def _coeff_bound(f: IntPoly) -> int:
    # Landau-Mignotte style: any monic factor has coefficients below 2**deg * |f|_2
    norm2 = isqrt(sum(c * c for c in f.coeffs)) + 1
    return (norm2 << f.degree) + 1


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _reduce_sym(f: IntPoly, m: int) -> IntPoly:
    return IntPoly([_symmetric(c, m) for c in f.coeffs])


def _coeffmod(f: IntPoly, m: int) -> IntPoly:
    return IntPoly([c % m for c in f.coeffs])


def _mulmod_int(f: IntPoly, g: IntPoly, m: int) -> IntPoly:
    return _coeffmod(f * g, m)


def _divmod_monic_mod(f: IntPoly, d: IntPoly, m: int) -> tuple[IntPoly, IntPoly]:
    q, r = _coeffmod(f, m).monic_divmod(d)
    return _coeffmod(q, m), _coeffmod(r, m)


def _hensel_step(
    f: IntPoly, g: IntPoly, h: IntPoly, s: IntPoly, t: IntPoly, m: int
) -> tuple[IntPoly, IntPoly, IntPoly, IntPoly]:
    """One quadratic lift: from f = g*h, s*g + t*h = 1 (mod m) to the same mod m**2.

    f, g, h monic; returns (g*, h*, s*, t*) with g*, h* monic of unchanged degree.
    """
    m2 = m * m
    e = _coeffmod(f - g * h, m2)
    q, r = _divmod_monic_mod(s * e, h, m2)
    g1 = _coeffmod(g + t * e + q * g, m2)
    h1 = _coeffmod(h + r, m2)
    b = _coeffmod(s * g1 + t * h1 - 1, m2)
    c, d = _divmod_monic_mod(s * b, h1, m2)
    s1 = _coeffmod(s - d, m2)
    t1 = _coeffmod(t - t * b - c * g1, m2)
    return g1, h1, s1, t1


def _hensel_lift_pair(
    f: IntPoly, g: IntPoly, h: IntPoly, ell: int, target: int
) -> tuple[IntPoly, IntPoly]:
    """Lift f = g*h from mod ell to mod ell**e >= target; returns (g, h) mod that modulus."""
    from .kernels import gf_gcdex

    s_l, t_l, d = gf_gcdex(list(g.coeffs), list(h.coeffs), ell)
    if d != [1]:
        raise ArithmeticError("lift requires coprime factors mod ell")
    s, t = IntPoly(s_l), IntPoly(t_l)
    m = ell
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return _coeffmod(g, m), _coeffmod(h, m)


def _hensel_lift_factors(
    f: IntPoly, factors: list[ModPoly], ell: int, target: int
) -> tuple[list[IntPoly], int]:
    """Lift a pairwise-coprime monic factorization of f mod ell to mod ell**e >= target.

    Returns the lifted factors and the modulus actually reached.
    """
    modulus = ell
    while modulus < target:
        modulus *= modulus

    def rec(fpart: IntPoly, parts: list[ModPoly]) -> list[IntPoly]:
        if len(parts) == 1:
            return [_coeffmod(fpart, modulus)]
        half = len(parts) // 2
        left, right = parts[:half], parts[half:]
        g = ModPoly(ell, (1,))
        for t_bar in left:
            g = g * t_bar
        h = ModPoly(ell, (1,))
        for t_bar in right:
            h = h * t_bar
        g_lift, h_lift = _hensel_lift_pair(_coeffmod(fpart, modulus), g.lift(), h.lift(), ell, modulus)
        return rec(g_lift, left) + rec(h_lift, right)

    return rec(f, factors), modulus


def _pick_zassenhaus_prime(f: IntPoly, caps: FactorSearchCaps) -> int | None:
    """First prime of the configured bit size with a squarefree reduction of f."""
    from .kernels import gf_diff, gf_gcd

    ell = 2 ** (caps.prime_bits - 1) + 1
    tries = 0
    while tries < caps.prime_tries:
        while not is_prime(ell):
            ell += 2
        fbar = [c % ell for c in f.coeffs]
        d = gf_diff(fbar, ell)
        if d and len(gf_gcd(fbar, d, ell)) == 1:
            return ell
        ell += 2
        tries += 1
    return None


def try_factor_over_z(f: IntPoly, caps: FactorSearchCaps = DEFAULT_CAPS) -> IrreducibilityWitness:
    """Bounded Zassenhaus search for a nontrivial monic integer factor of f.

    f must be monic and squarefree. Returns a "reducible" witness carrying an
    exact factor, "irreducible" when the subset recombination was exhaustive
    within the caps, and "unknown" when a cap was hit.
    """
    if f.is_zero or not f.is_monic:
        raise ValueError("factor search requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("factor search requires degree >= 1")
    if not is_squarefree(f):
        raise ValueError("factor search requires a squarefree polynomial")
    if f.degree == 1:
        return IrreducibilityWitness(IRREDUCIBLE, "search_exhausted")
    if f.degree > caps.degree:
        return IrreducibilityWitness(UNKNOWN, "search_exhausted")
    if f.coeffs[0] == 0:
        return IrreducibilityWitness(REDUCIBLE, "factor_found", factor=IntPoly((0, 1)))
    ell = _pick_zassenhaus_prime(f, caps)
    if ell is None:
        return IrreducibilityWitness(UNKNOWN, "search_exhausted")
    modular = factor_mod(reduce_mod(f, ell))
    parts = [t for t, _ in modular.factors]
    k = len(parts)
    if k == 1:
        return IrreducibilityWitness(IRREDUCIBLE, "mod_prime", prime=ell)
    lifted, modulus = _hensel_lift_factors(f, parts, ell, 2 * _coeff_bound(f))
    budget = caps.subset_budget
    a0 = f.coeffs[0]
    for size in range(1, k // 2 + 1):
        for subset in combinations(range(k), size):
            budget -= 1
            if budget < 0:
                return IrreducibilityWitness(UNKNOWN, "search_exhausted")
            const = 1
            for i in subset:
                const = const * lifted[i].coeffs[0] % modulus
            const = _symmetric(const, modulus)
            if const == 0 or a0 % const != 0:
                continue
            cand = IntPoly((1,))
            for i in subset:
                cand = _mulmod_int(cand, lifted[i], modulus)
            cand = _reduce_sym(cand, modulus)
            quot, rem = f.monic_divmod(cand)
            if rem.is_zero and cand.degree >= 1 and quot.degree >= 1:
                return IrreducibilityWitness(REDUCIBLE, "factor_found", factor=cand)
    return IrreducibilityWitness(IRREDUCIBLE, "search_exhausted")


def certify_irreducible(f: IntPoly) -> IrreducibilityWitness:
    """Strategy chain: Eisenstein (with small shifts), mod-q irreducibility for
    q <= 100, then the bounded rational factor search. "unknown" is a valid outcome."""
    if f.is_zero or not f.is_monic:
        raise ValueError("irreducibility certification requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("irreducibility certification requires degree >= 1")
    for c in (0, 1, -1, 2, -2, 3, -3, 4, -4):
        primes = eisenstein_primes(f.shift(c))
        if primes:
            return IrreducibilityWitness(IRREDUCIBLE, "eisenstein", prime=primes[0], shift=c)
    from .modpoly import is_irreducible_mod

    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97):
        if is_irreducible_mod(reduce_mod(f, q)):
            return IrreducibilityWitness(IRREDUCIBLE, "mod_prime", prime=q)
    gcd_ff = poly_gcd(f, f.derivative())
    if gcd_ff.degree >= 1:
        return IrreducibilityWitness(REDUCIBLE, "factor_found", factor=gcd_ff)
    return try_factor_over_z(f)


def monogenicity_check(f: IntPoly, seed: int = 0) -> MonogenicityCertificate:
    """Complete certificate: discriminant, factorization, irreducibility, and
    a Dedekind outcome for every prime whose square divides the discriminant.

    Primes with valuation exactly 1 are skipped (the squared index cannot see
    them). A fail anywhere concludes not_monogenic; all passes plus a complete
    factorization conclude monogenic; anything less is inconclusive.
    """
    if f.is_zero or not f.is_monic:
        raise ValueError("monogenicity check requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("monogenicity check requires degree >= 1")
    disc = discriminant(f)
    if disc == 0:
        rep = poly_gcd(f, f.derivative())
        witness = IrreducibilityWitness(REDUCIBLE, "factor_found", factor=rep)
        return MonogenicityCertificate(
            f, 0, FactoredInteger(1, ()), witness, (), NOT_MONOGENIC
        )
    disc_fac = factor_integer(disc, seed=seed)
    witness = certify_irreducible(f)
    if witness.status == REDUCIBLE:
        return MonogenicityCertificate(f, disc, disc_fac, witness, (), NOT_MONOGENIC)
    outcomes = []
    any_fail = False
    for p, e in disc_fac.factors:
        if e < 2:
            continue
        outcome = dedekind_test(f, p, seed=seed)
        outcomes.append(outcome)
        if not outcome.passed:
            any_fail = True
    if any_fail:
        conclusion = NOT_MONOGENIC
    elif witness.status == IRREDUCIBLE and disc_fac.complete:
        conclusion = MONOGENIC
    else:
        conclusion = INCONCLUSIVE
    return MonogenicityCertificate(f, disc, disc_fac, witness, tuple(outcomes), conclusion)


def conrad_check(f: IntPoly, p: int) -> bool:
    """Totally ramified valuation check: for a p-Eisenstein f of degree n with
    p not dividing n, the field discriminant satisfies v_p = n - 1.

    The caller must already know f is monogenic (so disc(f) = disc(K)); the
    Eisenstein and degree hypotheses are verified here and raise on violation.
    """
    if f.is_zero or not f.is_monic or f.degree < 1:
        raise ConradPreconditionError("requires a monic polynomial of degree >= 1")
    if p not in eisenstein_primes(f):
        raise ConradPreconditionError(f"polynomial is not {p}-Eisenstein")
    n = f.degree
    if n % p == 0:
        raise ConradPreconditionError(f"degree {n} is divisible by {p}")
    return p_adic_valuation(discriminant(f), p) == n - 1
