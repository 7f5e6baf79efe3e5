"""Command-line front end: expression parsing, subcommands, JSON certificates,
and report tables.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
3 inconclusive. All big integers cross the JSON boundary as decimal strings,
never as floats; factorizations are arrays of [prime-string, exponent].
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .arith import FactoredInteger, is_prime
from .criteria import (
    INCONCLUSIVE,
    MONOGENIC,
    DedekindOutcome,
    IrreducibilityWitness,
    MonogenicityCertificate,
    dedekind_test,
    monogenicity_check,
)
from .cyclotomic import CycloParams, build_T, cyclotomic_poly
from .harness import (
    GalleryReport,
    GridReport,
    IdentityReport,
    final_remarks_suite,
    verify_cyclo_identities,
    verify_main_theorem,
)
from .intpoly import IntPoly, format_poly
from .modpoly import ModPoly, factor_mod, reduce_mod
from .resdisc import discriminant, resultant

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


class PolyParseError(ValueError):
    """Syntax error in a polynomial expression, annotated with its position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_poly(text: str) -> IntPoly:
    """Parse ``term (('+'|'-') term)*`` where a term is INT, [INT '*'?] 'x' ['^' UINT].

    Whitespace is ignored; repeated exponents are summed, so "x + x" is 2x.
    """
    coeffs: dict[int, int] = {}
    i = 0
    n = len(text)

    def skip_ws(j: int) -> int:
        while j < n and text[j].isspace():
            j += 1
        return j

    def read_uint(j: int) -> tuple[int, int]:
        start = j
        while j < n and text[j].isdigit():
            j += 1
        if start == j:
            raise PolyParseError("expected a number", start)
        return int(text[start:j]), j

    i = skip_ws(i)
    if i == n:
        raise PolyParseError("empty polynomial", 0)
    first = True
    while i < n:
        sign = 1
        i = skip_ws(i)
        if not first:
            if i >= n or text[i] not in "+-":
                raise PolyParseError("expected '+' or '-'", i)
            sign = 1 if text[i] == "+" else -1
            i = skip_ws(i + 1)
        elif i < n and text[i] in "+-":
            sign = 1 if text[i] == "+" else -1
            i = skip_ws(i + 1)
        first = False
        # INT itself may be signed, e.g. "x^2 + -3"
        if i < n and text[i] in "+-":
            if text[i] == "-":
                sign = -sign
            i = skip_ws(i + 1)
        if i >= n:
            raise PolyParseError("dangling sign", i)
        coeff = 1
        have_coeff = False
        if text[i].isdigit():
            coeff, i = read_uint(i)
            have_coeff = True
            i = skip_ws(i)
            if i < n and text[i] == "*":
                i = skip_ws(i + 1)
                if i >= n or text[i] != "x":
                    raise PolyParseError("expected 'x' after '*'", i)
        if i < n and text[i] == "x":
            i += 1
            exp = 1
            j = skip_ws(i)
            if j < n and text[j] == "^":
                i = skip_ws(j + 1)
                exp, i = read_uint(i)
            coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
        elif have_coeff:
            coeffs[0] = coeffs.get(0, 0) + sign * coeff
        else:
            raise PolyParseError("expected a term", i)
        i = skip_ws(i)
    if not coeffs:
        raise PolyParseError("empty polynomial", 0)
    top = max(coeffs)
    return IntPoly([coeffs.get(k, 0) for k in range(top + 1)])


def render_poly(f: IntPoly) -> str:
    """Canonical text form; parse_poly(render_poly(f)) == f."""
    return format_poly(f.coeffs)


def render_modpoly(f: ModPoly) -> str:
    return format_poly(f.coeffs)


# -- JSON documents ------------------------------------------------------------


def factorization_to_json(fac: FactoredInteger) -> dict:
    return {
        "sign": fac.sign,
        "factors": [[str(p), e] for p, e in fac.factors],
        "cofactor": str(fac.cofactor),
    }


def factorization_from_json(doc: dict) -> FactoredInteger:
    return FactoredInteger(
        doc["sign"],
        tuple((int(p), e) for p, e in doc["factors"]),
        int(doc["cofactor"]),
    )


def _poly_to_json(f: IntPoly) -> list[str]:
    return [str(c) for c in f.coeffs]


def _poly_from_json(coeffs: list[str]) -> IntPoly:
    return IntPoly([int(c) for c in coeffs])


def witness_to_json(w: IrreducibilityWitness) -> dict:
    detail: dict = {}
    if w.prime is not None:
        detail["prime"] = str(w.prime)
    if w.shift is not None:
        detail["shift"] = str(w.shift)
    if w.factor is not None:
        detail["factor"] = _poly_to_json(w.factor)
    return {"status": w.status, "method": w.method, "detail": detail}


def witness_from_json(doc: dict) -> IrreducibilityWitness:
    detail = doc.get("detail", {})
    return IrreducibilityWitness(
        status=doc["status"],
        method=doc["method"],
        prime=int(detail["prime"]) if "prime" in detail else None,
        shift=int(detail["shift"]) if "shift" in detail else None,
        factor=_poly_from_json(detail["factor"]) if "factor" in detail else None,
    )


def dedekind_to_json(o: DedekindOutcome) -> dict:
    return {"p": str(o.p), "verdict": o.verdict, "gcd_degree": o.gcd_bar.degree}


def dedekind_full_json(o: DedekindOutcome) -> dict:
    doc = dedekind_to_json(o)
    doc["g"] = _poly_to_json(o.g_lift)
    doc["h"] = _poly_to_json(o.h_lift)
    doc["F"] = _poly_to_json(o.F)
    doc["gcd"] = [str(c) for c in o.gcd_bar.coeffs]
    return doc


@dataclass(frozen=True)
class CertificateDocument:
    """The JSON-facing projection of a monogenicity certificate."""

    polynomial: tuple[str, ...]
    degree: int
    discriminant: str
    disc_factorization: tuple[tuple[str, int], ...]
    disc_sign: int
    disc_cofactor: str
    irreducibility_status: str
    irreducibility_method: str
    irreducibility_detail: tuple[tuple[str, str], ...]
    dedekind: tuple[tuple[str, str, int], ...]
    conclusion: str


def certificate_document(cert: MonogenicityCertificate) -> CertificateDocument:
    wit = witness_to_json(cert.irreducibility)
    detail = tuple(
        (k, v if isinstance(v, str) else json.dumps(v)) for k, v in sorted(wit["detail"].items())
    )
    return CertificateDocument(
        polynomial=tuple(_poly_to_json(cert.poly)),
        degree=cert.poly.degree,
        discriminant=str(cert.disc),
        disc_factorization=tuple((str(p), e) for p, e in cert.disc_factored.factors),
        disc_sign=cert.disc_factored.sign,
        disc_cofactor=str(cert.disc_factored.cofactor),
        irreducibility_status=wit["status"],
        irreducibility_method=wit["method"],
        irreducibility_detail=detail,
        dedekind=tuple((str(o.p), o.verdict, o.gcd_bar.degree) for o in cert.dedekind),
        conclusion=cert.conclusion,
    )


def certificate_to_json(cert: MonogenicityCertificate) -> dict:
    doc = certificate_document(cert)
    return {
        "polynomial": list(doc.polynomial),
        "degree": doc.degree,
        "discriminant": doc.discriminant,
        "disc_factorization": [[p, e] for p, e in doc.disc_factorization],
        "disc_sign": doc.disc_sign,
        "disc_cofactor": doc.disc_cofactor,
        "irreducibility": {
            "status": doc.irreducibility_status,
            "method": doc.irreducibility_method,
            "detail": {k: v for k, v in doc.irreducibility_detail},
        },
        "dedekind": [
            {"p": p, "verdict": verdict, "gcd_degree": g} for p, verdict, g in doc.dedekind
        ],
        "conclusion": doc.conclusion,
    }


def certificate_document_from_json(data: dict) -> CertificateDocument:
    return CertificateDocument(
        polynomial=tuple(data["polynomial"]),
        degree=data["degree"],
        discriminant=data["discriminant"],
        disc_factorization=tuple((p, e) for p, e in data["disc_factorization"]),
        disc_sign=data["disc_sign"],
        disc_cofactor=data["disc_cofactor"],
        irreducibility_status=data["irreducibility"]["status"],
        irreducibility_method=data["irreducibility"]["method"],
        irreducibility_detail=tuple(sorted(data["irreducibility"]["detail"].items())),
        dedekind=tuple((d["p"], d["verdict"], d["gcd_degree"]) for d in data["dedekind"]),
        conclusion=data["conclusion"],
    )


# -- report rendering ----------------------------------------------------------


def render_grid_report(report: GridReport) -> str:
    lines = []
    header = (
        f"{'p':>3} {'m':>2} {'n':>2} {'deg':>4} {'T(0)=p':>7} {'T=x^d mod p':>12} "
        f"{'Eisenstein':>10} {'disc oracle':>12} {'Dedekind@2':>10} {'Dedekind@p':>10} "
        f"{'conclusion':>14}"
    )
    lines.append(header)
    lines.append("-" * len(header))
    for row in report.rows:
        c = row.params
        oracle = "-" if row.disc_oracle is None else ("match" if row.disc_match else "MISMATCH")
        lines.append(
            f"{c.p:>3} {c.m:>2} {c.n:>2} {row.degree:>4} "
            f"{'ok' if row.const_term_ok else 'FAIL':>7} "
            f"{'ok' if row.reduction_ok else 'FAIL':>12} "
            f"{'ok' if row.eisenstein_ok else 'FAIL':>10} "
            f"{oracle:>12} {row.dedekind_2:>10} {row.dedekind_p:>10} "
            f"{row.conclusion:>14}"
        )
    lines.append("")
    lines.append(f"rows: {len(report.rows)}, all monogenic: {report.all_ok}")
    if report.deviations:
        lines.append("")
        lines.append("merged-exponent discriminant variant disagrees with the direct value:")
        for dev in report.deviations:
            c = dev.params
            lines.append(f"  (p={c.p}, m={c.m}, n={c.n}): {dev.note}")
    return "\n".join(lines) + "\n"


def render_identity_report(report: IdentityReport) -> str:
    lines = []
    for check in report.checks:
        status = "ok" if check.ok else "FAIL"
        line = f"[{status}] {check.name}: {check.cases} cases, {check.failures} failures"
        if check.first_counterexample:
            line += f" (first: {check.first_counterexample})"
        lines.append(line)
    lines.append(f"all identities hold: {report.all_ok}")
    return "\n".join(lines) + "\n"


def render_gallery_report(report: GalleryReport) -> str:
    lines = []
    for item in report.items:
        status = "ok" if item.ok else "FAIL"
        lines.append(
            f"[{status}] {item.name}: expected {item.expected}, observed {item.observed}"
            + (f" ({item.detail})" if item.detail else "")
        )
    lines.append(f"gallery verified: {report.all_ok}")
    return "\n".join(lines) + "\n"


# -- argument plumbing ----------------------------------------------------------


def _add_parsers(parser: argparse.ArgumentParser) -> None:
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cyclotomic", help="print the cyclotomic polynomial of index n")
    s.add_argument("n", type=int)

    s = sub.add_parser("compose-T", help="print the composition of the two cyclotomics")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)

    s = sub.add_parser("disc", help="discriminant of a polynomial")
    s.add_argument("poly")

    s = sub.add_parser("resultant", help="resultant of two polynomials")
    s.add_argument("f")
    s.add_argument("g")

    s = sub.add_parser("factor-modp", help="factor a polynomial modulo a prime")
    s.add_argument("poly")
    s.add_argument("p", type=int)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("dedekind", help="Dedekind index criterion at a prime (JSON)")
    s.add_argument("poly")
    s.add_argument("p", type=int)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("monogenic", help="full monogenicity certificate")
    s.add_argument("poly")
    s.add_argument("--json", dest="json_out", metavar="FILE", default=None)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("verify-theorem", help="run the composition grid")
    s.add_argument("--p-set", type=int, nargs="+", default=None)
    s.add_argument("--m-max", type=int, default=3)
    s.add_argument("--n-max", type=int, default=5)
    s.add_argument("--deg-cap", type=int, default=256)
    s.add_argument("--oracle-cap", type=int, default=128)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("identities", help="cyclotomic identity sweeps")
    s.add_argument("--n-max", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("final-remarks", help="gallery of known examples and non-examples")
    s.add_argument("--seed", type=int, default=0)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="cyclomono",
        description="Exact cyclotomic-composition monogenicity toolkit",
    )
    _add_parsers(parser)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0

    try:
        return _dispatch(args)
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "cyclotomic":
        print(render_poly(cyclotomic_poly(args.n)))
        return EXIT_OK

    if args.command == "compose-T":
        params = CycloParams(args.p, args.m, args.n)
        print(render_poly(build_T(params)))
        return EXIT_OK

    if args.command == "disc":
        print(discriminant(parse_poly(args.poly)))
        return EXIT_OK

    if args.command == "resultant":
        print(resultant(parse_poly(args.f), parse_poly(args.g)))
        return EXIT_OK

    if args.command == "factor-modp":
        if not is_prime(args.p):
            print(f"error: {args.p} is not prime", file=sys.stderr)
            return EXIT_USAGE
        fac = factor_mod(reduce_mod(parse_poly(args.poly), args.p), seed=args.seed)
        print(f"p = {fac.p}, unit = {fac.unit}")
        for f, e in fac.factors:
            print(f"({render_modpoly(f)})^{e}")
        return EXIT_OK

    if args.command == "dedekind":
        if not is_prime(args.p):
            print(f"error: {args.p} is not prime", file=sys.stderr)
            return EXIT_USAGE
        outcome = dedekind_test(parse_poly(args.poly), args.p, seed=args.seed)
        print(json.dumps(dedekind_full_json(outcome), indent=2))
        return EXIT_OK if outcome.passed else EXIT_CHECK_FAILED

    if args.command == "monogenic":
        cert = monogenicity_check(parse_poly(args.poly), seed=args.seed)
        doc = certificate_to_json(cert)
        text = json.dumps(doc, indent=2)
        if args.json_out:
            with open(args.json_out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        print(text)
        if cert.conclusion == MONOGENIC:
            return EXIT_OK
        if cert.conclusion == INCONCLUSIVE:
            return EXIT_INCONCLUSIVE
        return EXIT_CHECK_FAILED

    if args.command == "verify-theorem":
        p_set = tuple(args.p_set) if args.p_set else (2, 3, 5, 7, 11, 13)
        for p in p_set:
            if not is_prime(p):
                print(f"error: {p} is not prime", file=sys.stderr)
                return EXIT_USAGE
        report = verify_main_theorem(
            p_set=p_set,
            m_max=args.m_max,
            n_max=args.n_max,
            deg_cap=args.deg_cap,
            oracle_cap=args.oracle_cap,
            jobs=args.jobs,
            seed=args.seed,
        )
        sys.stdout.write(render_grid_report(report))
        return EXIT_OK if report.all_ok else EXIT_CHECK_FAILED

    if args.command == "identities":
        report = verify_cyclo_identities(n_max=args.n_max, seed=args.seed)
        sys.stdout.write(render_identity_report(report))
        return EXIT_OK if report.all_ok else EXIT_CHECK_FAILED

    if args.command == "final-remarks":
        report = final_remarks_suite(seed=args.seed)
        sys.stdout.write(render_gallery_report(report))
        return EXIT_OK if report.all_ok else EXIT_CHECK_FAILED

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
