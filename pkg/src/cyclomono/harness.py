"""Reproduction suites: the main composition grid, cyclotomic identity sweeps,
power-congruence spot checks, and the gallery of known non-examples.

Each suite returns plain data; text rendering lives in the CLI. Reports are
deterministic: identical inputs and seeds produce identical structures, and
rows are ordered canonically by (p, m, n) no matter how they were scheduled.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import euler_phi, multiplicative_order, p_adic_valuation
from .criteria import (
    FAIL,
    IRREDUCIBLE,
    MONOGENIC,
    NOT_MONOGENIC,
    REDUCIBLE,
    dedekind_test,
    eisenstein_primes,
    monogenicity_check,
    try_factor_over_z,
)
from .cyclotomic import (
    CycloParams,
    build_T,
    cyclo_resultant,
    cyclotomic_poly,
    disc_T_closed_form,
    disc_T_simplified_variant,
)
from .intpoly import IntPoly, X
from .modpoly import factor_mod, reduce_mod
from .resdisc import discriminant, resultant

DEFAULT_P_SET = (2, 3, 5, 7, 11, 13)
DEFAULT_M_MAX = 3
DEFAULT_N_MAX = 5
DEFAULT_DEG_CAP = 256
DEFAULT_ORACLE_CAP = 128


@dataclass(frozen=True)
class TheoremRow:
    """One grid instance of the composition theorem."""

    params: CycloParams
    degree: int
    const_term_ok: bool
    reduction_ok: bool
    eisenstein_ok: bool
    disc_closed_form: int
    disc_oracle: int | None  # present when degree <= oracle cap
    dedekind_2: str
    dedekind_p: str
    conclusion: str

    @property
    def disc_match(self) -> bool | None:
        if self.disc_oracle is None:
            return None
        return self.disc_oracle == self.disc_closed_form

    @property
    def ok(self) -> bool:
        return (
            self.const_term_ok
            and self.reduction_ok
            and self.eisenstein_ok
            and self.disc_match is not False
            and self.conclusion == MONOGENIC
        )


@dataclass(frozen=True)
class VariantDeviation:
    """A grid point where the merged-exponent discriminant variant disagrees."""

    params: CycloParams
    direct: int
    variant: int
    note: str


@dataclass(frozen=True)
class GridReport:
    rows: tuple[TheoremRow, ...]
    deviations: tuple[VariantDeviation, ...]

    @property
    def all_ok(self) -> bool:
        return all(row.ok for row in self.rows)


def _grid_params(p_set, m_max, n_max, deg_cap) -> list[CycloParams]:
    out = []
    for p in sorted(p_set):
        for m in range(1, m_max + 1):
            for n in range(1, n_max + 1):
                params = CycloParams(p, m, n)
                if params.degree <= deg_cap:
                    out.append(params)
    out.sort(key=lambda c: (c.p, c.m, c.n))
    return out


def _compute_row(args: tuple[CycloParams, int, int]) -> TheoremRow:
    params, oracle_cap, seed = args
    p = params.p
    T = build_T(params)
    deg = T.degree
    const_ok = T.eval(0) == p
    from .modpoly import ModPoly

    reduction_ok = reduce_mod(T, p) == ModPoly(p, [0] * deg + [1])
    eis_ok = p in eisenstein_primes(T)
    closed = disc_T_closed_form(params)
    oracle = discriminant(T) if deg <= oracle_cap else None
    d2 = dedekind_test(T, 2, seed=seed)
    dp = d2 if p == 2 else dedekind_test(T, p, seed=seed)
    concl = MONOGENIC if (eis_ok and d2.passed and dp.passed) else NOT_MONOGENIC
    return TheoremRow(
        params=params,
        degree=deg,
        const_term_ok=const_ok,
        reduction_ok=reduction_ok,
        eisenstein_ok=eis_ok,
        disc_closed_form=closed,
        disc_oracle=oracle,
        dedekind_2=d2.verdict,
        dedekind_p=dp.verdict,
        conclusion=concl,
    )


def verify_main_theorem(
    p_set=DEFAULT_P_SET,
    m_max: int = DEFAULT_M_MAX,
    n_max: int = DEFAULT_N_MAX,
    deg_cap: int = DEFAULT_DEG_CAP,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
    jobs: int = 1,
    seed: int = 0,
) -> GridReport:
    """Run every grid instance with degree <= deg_cap and collect rows plus
    the audit of the merged-exponent discriminant variant (n >= 2 only)."""
    grid = _grid_params(p_set, m_max, n_max, deg_cap)
    tasks = [(params, oracle_cap, seed) for params in grid]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_compute_row, tasks))
    else:
        rows = [_compute_row(t) for t in tasks]
    rows.sort(key=lambda r: (r.params.p, r.params.m, r.params.n))
    deviations = []
    for row in rows:
        if row.params.n < 2:
            continue
        variant = disc_T_simplified_variant(row.params)
        direct = row.disc_closed_form
        if variant != direct:
            notes = []
            if (variant < 0) != (direct < 0):
                notes.append("sign differs")
            vp_d = p_adic_valuation(direct, row.params.p)
            vp_v = p_adic_valuation(variant, row.params.p)
            if vp_d != vp_v:
                notes.append(f"v_{row.params.p}: {vp_d} direct vs {vp_v} variant")
            v2_d = p_adic_valuation(direct, 2)
            v2_v = p_adic_valuation(variant, 2)
            if v2_d != v2_v and row.params.p != 2:
                notes.append(f"v_2: {v2_d} direct vs {v2_v} variant")
            deviations.append(
                VariantDeviation(row.params, direct, variant, "; ".join(notes) or "value differs")
            )
    return GridReport(tuple(rows), tuple(deviations))


# -- identity sweeps ----------------------------------------------------------


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    cases: int
    failures: int
    first_counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple[IdentityCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _sweep_product_identity(n_max: int) -> IdentityCheck:
    cases = failures = 0
    first = None
    for n in range(1, n_max + 1):
        prod = IntPoly((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        expected = IntPoly([-1] + [0] * (n - 1) + [1])
        cases += 1
        if prod != expected:
            failures += 1
            first = first or f"prod over divisors of {n}"
    return IdentityCheck("product of Phi_d over d | n equals x^n - 1", cases, failures, first)


def _sweep_substitution_identity(n_max: int, q_set) -> IdentityCheck:
    cases = failures = 0
    first = None
    for q in sorted(q_set):
        for n in range(1, n_max + 1):
            lhs = cyclotomic_poly(n).compose(X**q)
            if n % q == 0:
                rhs = cyclotomic_poly(q * n)
            else:
                rhs = cyclotomic_poly(n) * cyclotomic_poly(q * n)
            cases += 1
            if lhs != rhs:
                failures += 1
                first = first or f"Phi_{n}(x^{q})"
    return IdentityCheck("Phi_n(x^q) splits per q | n", cases, failures, first)


def _sweep_mod_factor_shape(n_max: int, q_set, seed: int) -> IdentityCheck:
    cases = failures = 0
    first = None
    for q in sorted(q_set):
        for n in range(1, n_max + 1):
            if n % q == 0:
                continue
            phi_n = euler_phi(n)
            order = multiplicative_order(q, n)
            fac = factor_mod(reduce_mod(cyclotomic_poly(n), q), seed=seed)
            degrees = [t.degree for t, e in fac.factors for _ in range(e)]
            cases += 1
            good = (
                all(e == 1 for _, e in fac.factors)
                and len(degrees) == phi_n // order
                and all(d == order for d in degrees)
            )
            if not good:
                failures += 1
                first = first or f"Phi_{n} mod {q}"
    return IdentityCheck(
        "Phi_n mod q: phi(n)/ord_n(q) distinct factors of degree ord_n(q)", cases, failures, first
    )


def _sweep_prime_power_congruence(bound: int, q_set) -> IdentityCheck:
    cases = failures = 0
    first = None
    for q in sorted(q_set):
        for n in range(1, bound + 1):
            if n % q == 0:
                continue
            m = 1
            while q**m * n <= bound:
                lhs = reduce_mod(cyclotomic_poly(q**m * n), q)
                rhs = reduce_mod(cyclotomic_poly(n), q) ** euler_phi(q**m)
                cases += 1
                if lhs != rhs:
                    failures += 1
                    first = first or f"Phi_{q**m * n} mod {q}"
                m += 1
    return IdentityCheck(
        "Phi_(q^m n) = Phi_n^phi(q^m) mod q", cases, failures, first
    )


def _sweep_pairwise_resultants(n_max: int) -> IdentityCheck:
    cases = failures = 0
    first = None
    for n in range(2, n_max + 1):
        phi_n = cyclotomic_poly(n)
        for m in range(1, n):
            expected = cyclo_resultant(m, n)
            got = resultant(cyclotomic_poly(m), phi_n)
            cases += 1
            if got != expected:
                failures += 1
                first = first or f"R(Phi_{m}, Phi_{n})"
    return IdentityCheck(
        "closed-form cyclotomic resultant equals direct resultant", cases, failures, first
    )


def _sweep_power_congruence(pairs: int, seed: int) -> IdentityCheck:
    rng = random.Random(seed)
    cases = failures = 0
    first = None
    for _ in range(pairs):
        q = rng.choice((2, 3, 5))
        n = rng.randint(1, 4)
        deg = rng.randint(1, 8)
        G = IntPoly([rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)])
        H = G + q * IntPoly([rng.randint(-9, 9) for _ in range(deg + 1)])
        modulus = q ** (n + 1)
        cases += 1
        if G.pow_coeffmod(q**n, modulus) != H.pow_coeffmod(q**n, modulus):
            failures += 1
            first = first or f"q={q}, n={n}, G={G}"
    return IdentityCheck(
        "G = H mod q implies G^(q^n) = H^(q^n) mod q^(n+1)", cases, failures, first
    )


def verify_cyclo_identities(
    n_max: int = 50,
    q_set=DEFAULT_P_SET,
    seed: int = 0,
    power_pairs: int = 200,
    resultant_n_max: int = 60,
    congruence_bound: int = 200,
) -> IdentityReport:
    """Run the identity sweeps and aggregate pass/fail counts."""
    checks = (
        _sweep_product_identity(min(n_max, 120)),
        _sweep_substitution_identity(n_max, q_set),
        _sweep_mod_factor_shape(min(n_max, 50), q_set, seed),
        _sweep_prime_power_congruence(congruence_bound, q_set),
        _sweep_pairwise_resultants(resultant_n_max),
        _sweep_power_congruence(power_pairs, seed),
    )
    return IdentityReport(checks)


# -- gallery of known positives and non-examples ------------------------------


@dataclass(frozen=True)
class GalleryItem:
    name: str
    expected: str
    observed: str
    detail: str

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass(frozen=True)
class GalleryReport:
    items: tuple[GalleryItem, ...]

    @property
    def all_ok(self) -> bool:
        return all(item.ok for item in self.items)


def _reducibility_item(name: str, f: IntPoly) -> GalleryItem:
    witness = try_factor_over_z(f)
    observed = witness.status
    detail = ""
    if witness.status == REDUCIBLE:
        quot, rem = f.monic_divmod(witness.factor)
        verified = rem.is_zero and witness.factor.degree >= 1 and quot.degree >= 1
        detail = f"factor {witness.factor}" + ("" if verified else " [NOT VERIFIED]")
        if not verified:
            observed = "broken-witness"
    return GalleryItem(name, REDUCIBLE, observed, detail)


def _monogenicity_item(name: str, f: IntPoly, expected: str, seed: int) -> GalleryItem:
    cert = monogenicity_check(f, seed=seed)
    failing = [o.p for o in cert.dedekind if o.verdict == FAIL]
    detail = f"disc = {cert.disc}"
    if failing:
        detail += f", Dedekind fails at {failing}"
    if cert.irreducibility.status != IRREDUCIBLE:
        detail += f", irreducibility: {cert.irreducibility.status}"
    return GalleryItem(name, expected, cert.conclusion, detail)


def final_remarks_suite(seed: int = 0) -> GalleryReport:
    """Known non-examples plus the introductory pair, each checked from scratch."""
    phi = cyclotomic_poly
    items = (
        _reducibility_item("Phi_4(Phi_3(x))", phi(4).compose(phi(3))),
        _reducibility_item("Phi_4(Phi_9(x))", phi(4).compose(phi(9))),
        _reducibility_item("Phi_3(Phi_5(x))", phi(3).compose(phi(5))),
        _monogenicity_item(
            "Phi_2(Phi_25(x))", phi(2).compose(phi(25)), NOT_MONOGENIC, seed
        ),
        _monogenicity_item(
            "x^4 + 10x^2 + 42", IntPoly((42, 0, 10, 0, 1)), MONOGENIC, seed
        ),
        _monogenicity_item(
            "x^4 + 34x^2 + 294", IntPoly((294, 0, 34, 0, 1)), NOT_MONOGENIC, seed
        ),
    )
    return GalleryReport(items)
