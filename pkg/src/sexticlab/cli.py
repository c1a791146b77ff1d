"""Command-line front end.

Subcommands: disc, classify, monogenic, scan, hjms, verify.  Exit codes:
0 success, 1 verification failure, 2 bad input or usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import config, families, scan, verify
from .errors import ReduciblePolynomialError
from .intkit import DEFAULT_RHO_BUDGET, DEFAULT_TRIAL_BOUND, factorize
from .monogenic import (
    MonogenicVerdict,
    is_monogenic_generic,
    jkk_check,
    jly_check,
)
from .parsing import PolyParseError, parse_poly, render_poly
from .polyz import IntPoly, discriminant
from .sextic import EvenSextic, classify


class CliError(Exception):
    """Bad input detected past argument parsing; maps to exit code 2."""


def _common_options(parser: argparse.ArgumentParser, top_level: bool) -> None:
    """Shared flags, accepted both before and after the subcommand.

    Subparser copies use SUPPRESS defaults so an absent flag never clobbers
    the value parsed at the top level.
    """
    default = (lambda v: v) if top_level else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--seed", type=int, default=default(None),
                        help="seed for randomized internals (default: env SEXTICLAB_SEED or 0); "
                        "affects performance only, never verdicts")
    parser.add_argument("--trial-bound", type=int, default=default(DEFAULT_TRIAL_BOUND),
                        help="trial division bound for integer factorization")
    parser.add_argument("--rho-budget", type=int, default=default(DEFAULT_RHO_BUDGET),
                        help="iteration budget for Pollard rho")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sexticlab",
        description="Exact classification and monogenicity testing of even sextics "
        "x^6+ax^4+bx^2+c, with bounded verification scans.",
    )
    _common_options(parser, top_level=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _common_options(p, top_level=False)
        return p

    p_disc = add_command("disc", "discriminant and its factorization")
    p_disc.add_argument("poly", help='polynomial, e.g. "x^6-6x^4+9x^2-3" or "c0,c1,...,c6"')

    p_cls = add_command("classify", "Galois class C6/A4/Other of an even sextic")
    p_cls.add_argument("poly")

    p_mono = add_command("monogenic", "monogenicity verdict")
    p_mono.add_argument("poly")
    p_mono.add_argument("--method", choices=("generic", "jly", "jkk"), default="generic",
                        help="generic prime-index test, or a shape-specialized criterion")
    p_mono.add_argument("--cross-check", action="store_true",
                        help="with jly/jkk, also run the generic test and compare")

    p_scan = add_command("scan", "grid scan of a family, one JSON line per cell")
    p_scan.add_argument("--family", choices=scan.FAMILIES, required=True)
    p_scan.add_argument("--min", type=int, required=True, dest="lo")
    p_scan.add_argument("--max", type=int, required=True, dest="hi")
    p_scan.add_argument("--jobs", type=int, default=1)

    p_hjms = add_command("hjms", "reducibility witness search for x^6+Ax^4+Bx^2-C^2")
    p_hjms.add_argument("--A", type=int, required=True)
    p_hjms.add_argument("--B", type=int, required=True)
    p_hjms.add_argument("--C", type=int, required=True)
    p_hjms.add_argument("--bound", type=int, default=None)

    p_verify = add_command("verify", "run the bounded verification suite")
    p_verify.add_argument("target", choices=("paper",))
    p_verify.add_argument("--range", type=int, default=None, dest="range_override",
                          help="replace every scan radius with this value")
    return parser


def _parse_cli_poly(text: str) -> IntPoly:
    try:
        return parse_poly(text)
    except PolyParseError as exc:
        raise CliError(f"cannot parse polynomial: {exc}") from exc


def _even_sextic(poly: IntPoly) -> EvenSextic:
    try:
        return EvenSextic.from_poly(poly)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _format_factorization(n: int, trial_bound: int, rho_budget: int) -> str:
    if n == 0:
        return "0"
    fac = factorize(n, trial_bound, rho_budget)
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in fac.factors]
    if not fac.complete:
        parts.append(f"[composite {fac.cofactor}]")
    if not parts:
        parts = ["1"]
    body = " * ".join(parts)
    return f"-{body}" if fac.sign < 0 else body


def _print_verdict(verdict: MonogenicVerdict) -> None:
    print(f"status: {verdict.status.value}")
    if verdict.witness_prime is not None:
        print(f"witness_prime: {verdict.witness_prime}")
    if verdict.unfactored is not None:
        print(f"unfactored_cofactor: {verdict.unfactored}")
    if verdict.checked_primes:
        trail = " ".join(f"{p}:{'ok' if ok else 'FAIL'}" for p, ok in verdict.checked_primes)
        print(f"checked_primes: {trail}")


def _jly_params(poly: IntPoly) -> tuple[int, int] | None:
    """Recover (a, b) from x^6+2ax^4+a^2x^2+b, if the shape matches."""
    if poly.degree != 6 or not poly.is_monic or poly[1] or poly[3] or poly[5]:
        return None
    if poly[4] % 2:
        return None
    a = poly[4] // 2
    if poly[2] != a * a:
        return None
    return a, poly[0]


def _jkk_params(poly: IntPoly) -> tuple[int, int] | None:
    """Recover (a, b) from x^6+ab^2x^4+2abx^2+a, if the shape matches."""
    if poly.degree != 6 or not poly.is_monic or poly[1] or poly[3] or poly[5]:
        return None
    a = poly[0]
    if a == 0:
        return None
    b, r = divmod(poly[2], 2 * a)
    if r:
        return None
    if poly[4] != a * b * b:
        return None
    return a, b


def _cmd_disc(args) -> int:
    poly = _parse_cli_poly(args.poly)
    if poly.degree < 2:
        raise CliError("discriminant requires degree >= 2")
    d = discriminant(poly)
    print(f"poly: {render_poly(poly)}")
    print(f"disc: {d}")
    print(f"disc_factored: {_format_factorization(d, args.trial_bound, args.rho_budget)}")
    return 0


def _cmd_classify(args) -> int:
    sext = _even_sextic(_parse_cli_poly(args.poly))
    try:
        cls = classify(sext, full=True)
    except ReduciblePolynomialError as exc:
        raise CliError(str(exc)) from exc
    print(f"poly: {render_poly(sext.as_poly())}")
    print(f"galois: {cls.galois.value}")
    print(f"minus_c_is_square: {cls.minus_c_square}")
    print(f"resolvent_disc_is_square: {cls.disc_g_square}")
    print(f"aux_sextic_reducible: {cls.h_reducible}")
    return 0


def _cmd_monogenic(args) -> int:
    poly = _parse_cli_poly(args.poly)
    tb, rb = args.trial_bound, args.rho_budget
    try:
        if args.method == "generic":
            verdict = is_monogenic_generic(poly, tb, rb)
        elif args.method == "jly":
            params = _jly_params(poly)
            if params is None:
                raise CliError("jly requires the shape x^6+2ax^4+a^2x^2+b")
            verdict = jly_check(*params, tb, rb)
        else:
            params = _jkk_params(poly)
            if params is None:
                raise CliError("jkk requires the shape x^6+ab^2x^4+2abx^2+a")
            verdict = jkk_check(*params, tb, rb)
    except ReduciblePolynomialError as exc:
        raise CliError(str(exc)) from exc
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    print(f"poly: {render_poly(poly)}")
    print(f"method: {args.method}")
    _print_verdict(verdict)
    if args.cross_check and args.method in ("jly", "jkk"):
        generic = is_monogenic_generic(poly, tb, rb)
        print(f"generic_status: {generic.status.value}")
        agree = generic.status is verdict.status
        print(f"cross_check: {'agree' if agree else 'DISAGREE'}")
        if not agree:
            return 1
    return 0


def _cmd_scan(args) -> int:
    if args.hi < args.lo:
        raise CliError("--max must be >= --min")
    if args.jobs < 1:
        raise CliError("--jobs must be >= 1")
    records = scan.run_scan(
        args.family, args.lo, args.hi, args.jobs, args.trial_bound, args.rho_budget
    )
    out = sys.stdout
    for rec in records:
        out.write(rec.to_json())
        out.write("\n")
    return 0


def _cmd_hjms(args) -> int:
    bound = args.bound
    if bound is None:
        bound = families.default_hjms_bound(args.A, args.B, args.C)
    try:
        witness = families.hjms_witness(args.A, args.B, args.C, bound)
    except ReduciblePolynomialError as exc:
        raise CliError(str(exc)) from exc
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if witness is None:
        print(f"witness: none (bound {bound})")
    else:
        m, n = witness
        print(f"witness: m={m} n={n} (bound {bound})")
        lhs, rhs = families.hjms_cofactors(m, n, args.C)
        print(f"cofactors: ({render_poly(lhs)}) * ({render_poly(rhs)})")
    return 0


def _cmd_verify(args) -> int:
    if args.range_override is not None and args.range_override < 1:
        raise CliError("--range must be >= 1")
    results = verify.run_paper_checks(args.range_override)
    width = max(len(r.name) for r in results)
    all_pass = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        all_pass &= r.passed
        print(f"{r.name:<{width}}  {status}  {r.seconds:7.2f}s  {r.detail}")
    print(f"overall: {'PASS' if all_pass else 'FAIL'}")
    return 0 if all_pass else 1


_COMMANDS = {
    "disc": _cmd_disc,
    "classify": _cmd_classify,
    "monogenic": _cmd_monogenic,
    "scan": _cmd_scan,
    "hjms": _cmd_hjms,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        config.set_global_seed(args.seed)
    if args.trial_bound < 2:
        print("error: --trial-bound must be >= 2", file=sys.stderr)
        return 2
    if args.rho_budget < 0:
        print("error: --rho-budget must be >= 0", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
