"""cyclomono: exact computer algebra for cyclotomic compositions.

Core layers: integer arithmetic (arith), exact polynomials (intpoly), prime
fields (modpoly, with compiled kernels when available), resultants and
discriminants (resdisc), cyclotomic constructions (cyclotomic), decision
procedures (criteria), reproduction suites (harness), and the CLI (cli).
"""

from .arith import FactoredInteger, euler_phi, factor_integer, is_prime, multiplicative_order, p_adic_valuation
from .criteria import (
    DedekindOutcome,
    IrreducibilityWitness,
    MonogenicityCertificate,
    certify_irreducible,
    conrad_check,
    dedekind_test,
    eisenstein_primes,
    monogenicity_check,
    try_factor_over_z,
)
from .cyclotomic import (
    CycloParams,
    build_T,
    cyclo_disc_prime_power,
    cyclo_resultant,
    cyclotomic_poly,
    disc_T_closed_form,
)
from .intpoly import IntPoly
from .modpoly import ModFactorization, ModPoly, factor_mod, gcd_mod, is_irreducible_mod, multi_gcd, reduce_mod
from .resdisc import disc_composition, disc_composition_binomial, discriminant, resultant

__version__ = "0.1.0"

__all__ = [
    "CycloParams",
    "DedekindOutcome",
    "FactoredInteger",
    "IntPoly",
    "IrreducibilityWitness",
    "ModFactorization",
    "ModPoly",
    "MonogenicityCertificate",
    "build_T",
    "certify_irreducible",
    "conrad_check",
    "cyclo_disc_prime_power",
    "cyclo_resultant",
    "cyclotomic_poly",
    "dedekind_test",
    "disc_T_closed_form",
    "disc_composition",
    "disc_composition_binomial",
    "discriminant",
    "eisenstein_primes",
    "euler_phi",
    "factor_integer",
    "factor_mod",
    "gcd_mod",
    "is_irreducible_mod",
    "is_prime",
    "monogenicity_check",
    "multi_gcd",
    "multiplicative_order",
    "p_adic_valuation",
    "reduce_mod",
    "resultant",
    "try_factor_over_z",
]
