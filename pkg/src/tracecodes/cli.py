"""Command line interface.

Exit codes: 0 success, 1 a check failed, 2 invalid parameters, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import warnings

from .bounds import classify_optimality, griesmer_lower_bound
from .construction import Budget, build_defining_set, default_workers
from .errors import BudgetExceeded, HypothesisError, ParameterError, TraceCodeError
from .expsums import weil_sum_closed, weil_sum_direct
from .field import FqElement, make_field
from .params import CodeSpec
from .report import METHODS, distribution_csv, run_report

EXIT_OK, EXIT_CHECK, EXIT_PARAMS, EXIT_BUDGET = 0, 1, 2, 3


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _coeffs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated coefficients, got {text!r}") from None


def _code_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=_positive, required=True, help="odd prime, 3 mod 4")
    sp.add_argument("--e", type=_positive, required=True, help="extension degree (even)")
    sp.add_argument("--l", type=_positive, required=True)
    sp.add_argument("--i", type=int, choices=(0, 1), default=0, help="cyclotomic class of Tr(x2)")
    sp.add_argument("--force", action="store_true",
                    help="allow parameters outside the proven range (brute force only)")


def _work_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--threads", type=_positive, default=None,
                    help="worker processes (default: $TRACE_CODES_THREADS or 1)")
    sp.add_argument("--max-work", type=_positive, default=Budget().max_symbol_products,
                    help="budget on codewords x length for brute force")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tracecodes", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="emit the defining set D_i")
    _code_args(sp)
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("distribution", help="weight distribution by one method")
    _code_args(sp)
    _work_args(sp)
    sp.add_argument("--method", choices=METHODS, default="theory")
    sp.add_argument("--mode", choices=("auto", "full", "orbit"), default="auto",
                    help="enumeration mode for --method brute")
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("verify", help="run every method and all cross-checks")
    _code_args(sp)
    _work_args(sp)

    sp = sub.add_parser("bounds", help="Griesmer bound query")
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--d", type=_positive, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--n", type=_positive, help="also classify an [n, k, d] code")

    sp = sub.add_parser("weil-sum", help="evaluate S(alpha, beta) directly and in closed form")
    sp.add_argument("--p", type=_positive, required=True)
    sp.add_argument("--e", type=_positive, required=True)
    sp.add_argument("--l", type=_positive, required=True)
    sp.add_argument("--alpha", type=_coeffs, required=True, help="coefficients c0,c1,... of alpha")
    sp.add_argument("--beta", type=_coeffs, required=True, help="coefficients c0,c1,... of beta")
    return parser


def _spec(args) -> CodeSpec:
    if args.force:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            spec = CodeSpec(args.p, args.e, args.l, args.i, strict=False)
        warnings.simplefilter("ignore", UserWarning)  # reported once below
        for problem in spec.violations():
            print(f"warning: {problem}; closed forms unavailable", file=sys.stderr)
        return spec
    return CodeSpec(args.p, args.e, args.l, args.i)


def _workers(args) -> int:
    return args.threads or default_workers()


def _cmd_construct(args) -> int:
    spec = _spec(args)
    D = build_defining_set(spec)
    if args.format == "csv":
        lines = ["x1,x2"]
        lines += [f"\"{x1}\",\"{x2}\"" for x1, x2 in D.points]
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        out = {
            "params": spec.as_dict(),
            "length": len(D),
            "points": [[list(x1.coeffs), list(x2.coeffs)] for x1, x2 in D.points],
        }
        sys.stdout.write(json.dumps(out) + "\n")
    return EXIT_OK


def _cmd_distribution(args) -> int:
    spec = _spec(args)
    if args.method != "brute" and not spec.admissible:
        spec.require_admissible()
    report = run_report(spec, [args.method], Budget(max_symbol_products=args.max_work),
                        _workers(args), brute_mode=args.mode)
    if report.distribution is None:
        for method, reason in report.refusals.items():
            print(f"{method} refused: {reason}", file=sys.stderr)
        return EXIT_BUDGET
    if args.format == "csv":
        sys.stdout.write(distribution_csv(report.distribution))
    else:
        sys.stdout.write(report.to_json())
    return report.exit_code


def _cmd_verify(args) -> int:
    spec = _spec(args)
    methods = METHODS if spec.admissible else ("brute",)
    report = run_report(spec, methods, Budget(max_symbol_products=args.max_work), _workers(args))
    sys.stdout.write(report.to_json())
    return report.exit_code


def _cmd_bounds(args) -> int:
    out = {"k": args.k, "d": args.d, "q": args.q,
           "griesmer_bound": griesmer_lower_bound(args.k, args.d, args.q)}
    if args.n is not None:
        out["n"] = args.n
        out["class"] = classify_optimality(args.n, args.k, args.d, args.q).value
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK


def _cyc_json(v) -> dict:
    return {"coeffs": list(v.coeffs), "integer": v.to_int() if v.is_integer() else None, "text": str(v)}


def _cmd_weil(args) -> int:
    fp = make_field(args.p, args.e)
    alpha, beta = FqElement(args.alpha), FqElement(args.beta)
    fp.index(alpha), fp.index(beta)  # validates before any summation
    direct = weil_sum_direct(alpha, beta, args.l, fp)
    out = {"p": args.p, "e": args.e, "l": args.l, "alpha": list(alpha.coeffs), "beta": list(beta.coeffs),
           "direct": _cyc_json(direct)}
    code = EXIT_OK
    try:
        closed = weil_sum_closed(alpha, beta, args.l, fp)
    except HypothesisError as exc:
        out["closed"] = None
        out["closed_refused"] = str(exc)
    else:
        out["closed"] = _cyc_json(closed)
        out["agree"] = closed == direct
        if closed != direct:
            code = EXIT_CHECK
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return code


COMMANDS = {
    "construct": _cmd_construct,
    "distribution": _cmd_distribution,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
    "weil-sum": _cmd_weil,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARAMS if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (ParameterError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TraceCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
