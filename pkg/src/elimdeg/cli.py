"""Command-line entry point.

    elimdeg analyze <file> [--order y|x|both] [--json]
    elimdeg resultant <file> --eliminate y|x [--method interp|bareiss|both] [--json]
    elimdeg verify <file> --eliminate y|x [--trials N] [--seed S] [--coeff-bound B] [--json]
    elimdeg infinity <file> [--json]

Exit codes: 0 success, 1 degenerate input, 2 parse error, 3 internal
invariant violation, 4 usage error.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .degree import dual_order_analysis, minding_degree
from .errors import (DegenerateInput, InternalInvariantViolation, MixedVariables,
                     PolySyntaxError)
from .oracle import DEFAULT_COEFF_BOUND, Method, resultant, verify_degree
from .parse import Mode, parse_problem
from .render import JSON, TEXT, canonical_json, poly_json, render_report, to_json_obj

EXIT_OK = 0
EXIT_DEGENERATE = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "usage error")
        raise _HelpShown(message)


class _HelpShown(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="elimdeg", description="Degree of the eliminant of two bivariate equations.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="predict the eliminant degree")
    a.add_argument("file")
    a.add_argument("--order", choices=("y", "x", "both"), default="both")
    a.add_argument("--json", action="store_true")

    r = sub.add_parser("resultant", help="exact resultant of a concrete pair")
    r.add_argument("file")
    r.add_argument("--eliminate", choices=("y", "x"), required=True)
    r.add_argument("--method", choices=[m.value for m in Method], default="both")
    r.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="check the prediction against sampled resultants")
    v.add_argument("file")
    v.add_argument("--eliminate", choices=("y", "x"), required=True)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--coeff-bound", type=int, default=DEFAULT_COEFF_BOUND)
    v.add_argument("--json", action="store_true")

    i = sub.add_parser("infinity", help="dual-order analysis and solutions at infinity")
    i.add_argument("file")
    i.add_argument("--json", action="store_true")

    return p


def _axis_name(problem, which: str) -> str:
    """Map the CLI's y/x to the problem's own variable names."""
    x, y = problem.variables
    return y if which == "y" else x


def _header(problem) -> dict:
    return {"tool_version": __version__, "mode": problem.mode.value}


def _analyze(problem, args) -> str:
    x, y = problem.variables
    orders = {"y": [("eliminate_y", y)], "x": [("eliminate_x", x)],
              "both": [("eliminate_y", y), ("eliminate_x", x)]}[args.order]
    reports = {key: minding_degree(problem.f, problem.theta, var) for key, var in orders}
    if args.json:
        out = _header(problem)
        out["reports"] = {k: to_json_obj(r) for k, r in reports.items()}
        return canonical_json(out)
    chunks = [f"[{k}]\n" + render_report(r, TEXT) for k, r in reports.items()]
    return "\n".join(chunks)


def _resultant(problem, args) -> str:
    if problem.mode is not Mode.CONCRETE:
        raise UsageError("resultant needs a concrete problem file (no '#' or '(x^d)')")
    var = _axis_name(problem, args.eliminate)
    res = resultant(problem.f, problem.theta, var, Method(args.method))
    if args.json:
        out = _header(problem)
        out.update({"eliminate": var,
                    "degree": None if res.is_zero() else res.degree,
                    "coefficients": poly_json(res)})
        return canonical_json(out)
    degree = "zero polynomial" if res.is_zero() else res.degree
    return f"eliminate: {var}\ndegree: {degree}\nresultant: {res}\n"


def _verify(problem, args) -> str:
    if args.trials < 1 or args.coeff_bound < 1:
        raise UsageError("--trials and --coeff-bound must be positive")
    var = _axis_name(problem, args.eliminate)
    result = verify_degree(problem, var, args.trials, args.seed, args.coeff_bound)
    if args.json:
        out = _header(problem)
        out.update(to_json_obj(result))
        return canonical_json(out)
    return render_report(result, TEXT)


def _infinity(problem, args) -> str:
    concrete = (problem.f, problem.theta) if problem.mode is Mode.CONCRETE else None
    report = dual_order_analysis(problem.f, problem.theta, concrete)
    if args.json:
        out = _header(problem)
        out.update(to_json_obj(report))
        return canonical_json(out)
    return render_report(report, TEXT)


COMMANDS = {"analyze": _analyze, "resultant": _resultant, "verify": _verify,
            "infinity": _infinity}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _HelpShown:
        stdout.write(parser.format_help())
        return EXIT_OK
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE

    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        stderr.write(f"usage error: cannot read {args.file}: {exc.strerror}\n")
        return EXIT_USAGE

    try:
        problem = parse_problem(text)
        if problem.mixed:
            stderr.write("warning: concrete coefficients in a pattern file were treated as generic\n")
        output = COMMANDS[args.command](problem, args)
    except PolySyntaxError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except MixedVariables as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except InternalInvariantViolation as exc:
        stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except DegenerateInput as exc:
        stderr.write(f"{exc}\n")
        return EXIT_DEGENERATE
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    stdout.write(output)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
