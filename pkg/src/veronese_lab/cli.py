"""Command-line front end: ``veronese-lab <command> ...``.

Exit codes: 0 success / all pass, 1 a verification failed, 2 usage or
parse error, 3 internal inconsistency (operator and oracle disagree).
Every rational is printed as an exact string ``"p/q"`` (or ``"p"``).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .identities import FAIL, SUITES, OPTIONAL_SUITES, Grid, dumps, run_suite, summary_table
from .permstat import EnumerationTooLarge, colored_refined, colored_refined_q
from .polycore import Poly, QPoly
from .realroot import is_interlacing_sequence
from .veronese import OracleMismatch, sections, veronese, veronese_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(ValueError):
    pass


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?P<var>x(?:\s*\^\s*(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> Poly:
    """Parse ``"1,2,3"`` (constant first) or ``"1 + 2*x + 3*x^2"``."""
    text = text.strip()
    if not text:
        raise UsageError("empty polynomial")
    try:
        if "x" not in text:
            return Poly(Fraction(tok) for tok in text.split(","))
        return _parse_expression(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse polynomial {text!r}: {exc}") from None


def _parse_expression(text: str) -> Poly:
    total = Poly()
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or not (m.group("coef") or m.group("var")):
            raise ValueError(f"unexpected input at position {pos}")
        if pos > 0 and not m.group("sign"):
            raise ValueError(f"missing operator at position {pos}")
        coef = Fraction(m.group("coef") or 1)
        if m.group("sign") == "-":
            coef = -coef
        deg = 0
        if m.group("var"):
            deg = int(m.group("exp") or 1)
        total = total + Poly.monomial(deg, coef)
        pos = m.end()
    return total


def _coeffs(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def _qpoly_json(p: QPoly):
    return [[i, j, str(c)] for (i, j), c in p.terms.items()]


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def cmd_sections(args) -> int:
    if args.r < 1:
        raise UsageError("--r must be positive")
    d = sections(parse_poly(args.poly), args.r)
    _emit({"r": args.r, "parts": [_coeffs(p) for p in d.parts]})
    return EXIT_OK


def cmd_veronese(args) -> int:
    h = parse_poly(args.poly)
    if args.r < 1 or args.n < 0 or not 0 <= args.k < args.r:
        raise UsageError(f"need r >= 1, n >= 0, 0 <= k < r (got n={args.n}, r={args.r}, k={args.k})")
    result = veronese(h, args.n, args.r, args.k).numerator
    out = {"n": args.n, "r": args.r, "k": args.k, "numerator": _coeffs(result)}
    if args.oracle:
        try:
            oracle = veronese_oracle(h, args.n, args.r, args.k, args.M)
        except OracleMismatch as exc:
            print(f"oracle failed: {exc}", file=sys.stderr)
            return EXIT_INCONSISTENT
        if oracle != result:
            print(f"oracle disagrees: {oracle} != {result}", file=sys.stderr)
            return EXIT_INCONSISTENT
        out["oracle"] = "agrees"
    _emit(out)
    return EXIT_OK


def cmd_interlace(args) -> int:
    polys = [parse_poly(p) for p in args.polys]
    v = is_interlacing_sequence(polys)
    _emit({"holds": v.holds, "witness": v.witness})
    return EXIT_OK if v.holds else EXIT_FAIL


def cmd_stats(args) -> int:
    n, r = args.n, args.r
    if n < 1 or r < 1:
        raise UsageError("--n and --r must be positive")
    if args.ell is not None and not 1 <= args.ell <= n:
        raise UsageError(f"--ell must lie in 1..{n}")
    if args.color is not None and not 0 <= args.color < r:
        raise UsageError(f"--color must lie in 0..{r - 1}")
    out = {"n": n, "r": r, "ell": args.ell, "color": args.color}
    if args.q:
        p = colored_refined_q(n, r, args.ell, args.color)
        out["terms"] = _qpoly_json(p)
        out["text"] = repr(p)[7:-2]
    else:
        p = colored_refined(n, r, args.ell, args.color)
        out["G"] = _coeffs(p)
        out["text"] = str(p)
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    grid = Grid(
        nmax=args.nmax, rmax=args.rmax, plain_nmax=args.nmax_plain, M=args.M,
        n=args.n, r=args.r, seed=args.seed, samples=args.samples,
    )
    try:
        reports = run_suite(args.suite, grid)
    except KeyError:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join([*SUITES, *OPTIONAL_SUITES])}")
    except OracleMismatch as exc:
        print(f"oracle failed: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    table = summary_table(reports)
    if args.json == "-":
        print(dumps(reports))
        print(table, file=sys.stderr)
    else:
        if args.json:
            with open(args.json, "w") as fh:
                fh.write(dumps(reports) + "\n")
        print(table)
    if any(r.verdict == FAIL for r in reports):
        if args.suite in ("operator", "all") and any(
            r.verdict == FAIL and r.claim == "operator-oracle" for r in reports
        ):
            return EXIT_INCONSISTENT
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="veronese-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sections", help="split a polynomial by exponent residue mod r")
    p.add_argument("--poly", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_sections)

    p = sub.add_parser("veronese", help="compute U^n_{r,k} h")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against the series computation")
    p.add_argument("--M", type=int, default=None, help="truncation order for --oracle")
    p.set_defaults(func=cmd_veronese)

    p = sub.add_parser("interlace", help="decide whether a sequence of polynomials is interlacing")
    p.add_argument("polys", nargs="+")
    p.set_defaults(func=cmd_interlace)

    p = sub.add_parser("stats", help="colored descent generating polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--color", type=int, default=None)
    p.add_argument("--q", action="store_true", help="track fmaj with the variable q")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--rmax", type=int, default=3)
    p.add_argument("--nmax-plain", type=int, default=6)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", default=None, help="write the report array to this file ('-' for stdout)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, EnumerationTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
