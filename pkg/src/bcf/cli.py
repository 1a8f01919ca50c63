"""Command-line front end: expand, eval, render, validate, recover, scan.

All commands emit deterministic JSON (sorted keys, compact separators) on
standard output unless ``--format text`` selects the plain rendering; the
scanner emits one JSON record per line.  Exit codes: 0 for success
(including a completed validation that found violations), 2 for input
errors (bad usage, unparsable literals, malformed digit pairs, nonpositive
inputs), 3 for computation errors (degenerate recovery systems, exhausted
precision in approximate mode).
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import (
    BcfError,
    DegreeOutOfRange,
    IndexOutOfRange,
    InvalidSequence,
    MixedFields,
    NonPositiveInput,
    ParseError,
    ReduciblePolynomial,
    RootCountNotOne,
)
from .expansion import bcf_expand, bcf_expand_heuristic
from .fields import AlgebraicNumber, approximate
from .literals import RatFunc, fraction_str, parse_digits, parse_number
from .recovery import conjecture_scan, recover_cubic_eventual, recover_cubic_pure
from .sequences import SequencePair
from .treeval import convergent, convergent_sequence, render_tree
from .validation import validate

_INPUT_ERRORS = (
    ParseError,
    ReduciblePolynomial,
    RootCountNotOne,
    DegreeOutOfRange,
    NonPositiveInput,
    InvalidSequence,
    MixedFields,
    IndexOutOfRange,
    ZeroDivisionError,
    ValueError,
)

_DEFAULT_SCAN_BETAS = (
    ((1, 0, 0), (1,)),      # alpha^2
    ((1, -1, 0), (1,)),     # alpha^2 - alpha
    ((1, 1, 0), (1,)),      # alpha^2 + alpha
    ((1, 1), (1,)),         # alpha + 1
)


def _emit_json(payload):
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _positive_int(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(
            f"expected a nonnegative integer, got {value}"
        )
    return value


def _exact_str(value):
    """Render an exact number as text: rationals as p/q."""
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, AlgebraicNumber):
        if value.is_rational():
            return fraction_str(value.as_fraction())
        return repr(value)
    return str(value)


def _convergent_records(pair, digits):
    if not pair.a:
        return []
    records = []
    for triple in convergent_sequence(pair, len(pair.a) - 1):
        records.append(
            {
                "n": triple.n,
                "A": str(triple.A),
                "B": str(triple.B),
                "C": str(triple.C),
                "alpha": fraction_str(triple.alpha),
                "beta": fraction_str(triple.beta),
                "alpha_dec": approximate(triple.alpha, digits).text,
            }
        )
    return records


def _ratfunc_str(num, den):
    return "{}/{}".format(
        ",".join(str(c) for c in num), ",".join(str(c) for c in den)
    )


# -- expand ------------------------------------------------------------------


def _to_decimal(value, precision):
    if isinstance(value, Decimal):
        return value
    with localcontext() as ctx:
        ctx.prec = precision
        return Decimal(value.numerator) / Decimal(value.denominator)


def _prepare_expand(args):
    if args.approx:
        parsed = []
        for name, literal in (("--alpha", args.alpha), ("--beta", args.beta)):
            value = parse_number(literal, allow_decimal=True)
            if isinstance(value, (AlgebraicNumber, RatFunc)):
                raise ParseError(
                    f"{name}: only rat: and dec: literals are valid in "
                    f"approximate mode"
                )
            parsed.append(_to_decimal(value, args.guard_digits + 30))
        alpha, beta = parsed
        if alpha <= 0 or beta <= 0:
            raise NonPositiveInput("alpha and beta must be positive")
        return {"mode": "approx", "alpha": alpha, "beta": beta}
    alpha = parse_number(args.alpha)
    if isinstance(alpha, RatFunc):
        raise ParseError("ratfunc literals are only legal for --beta")
    beta = parse_number(args.beta)
    if isinstance(beta, RatFunc):
        beta = beta.evaluate(alpha)
    if alpha <= 0 or beta <= 0:
        raise NonPositiveInput("alpha and beta must be positive")
    return {"mode": "exact", "alpha": alpha, "beta": beta}


def _execute_expand(args, job):
    if job["mode"] == "approx":
        pair = bcf_expand_heuristic(
            job["alpha"],
            job["beta"],
            max_terms=args.terms,
            guard_digits=args.guard_digits,
        )
    else:
        pair = bcf_expand(job["alpha"], job["beta"], max_terms=args.terms)
    records = _convergent_records(pair, args.digits)
    if args.format == "json":
        payload = {
            "a": list(pair.a),
            "b": list(pair.b),
            "terminated": pair.terminated,
            "preperiod": pair.preperiod,
            "period": pair.period,
            "convergents": records,
        }
        if job["mode"] == "approx":
            payload["heuristic"] = True
        _emit_json(payload)
        return 0
    lines = [
        "a: " + ",".join(str(d) for d in pair.a),
        "b: " + ",".join(str(d) for d in pair.b),
        f"terminated: {'true' if pair.terminated else 'false'}",
    ]
    if pair.terminal is not None:
        lines.append(f"terminal: {_exact_str(pair.terminal)}")
    if pair.periodicity is not None:
        lines.append(f"preperiod: {pair.preperiod}")
        lines.append(f"period: {pair.period}")
    if job["mode"] == "approx":
        lines.append("heuristic: true")
    for rec in records:
        lines.append(
            "n={n} A={A} B={B} C={C} alpha={alpha} beta={beta} "
            "alpha_dec={alpha_dec}".format(**rec)
        )
    print("\n".join(lines))
    return 0


# -- eval --------------------------------------------------------------------


def _prepare_eval(args):
    pair = SequencePair(parse_digits(args.a), parse_digits(args.b))
    if not pair.a:
        raise IndexOutOfRange("eval needs at least one digit pair")
    n = args.n if args.n is not None else len(pair.a) - 1
    if n < 0 or n >= len(pair.a):
        raise IndexOutOfRange(
            f"n must lie in 0..{len(pair.a) - 1}, got {n}"
        )
    return {"pair": pair, "n": n}


def _execute_eval(args, job):
    triple = convergent(job["pair"], job["n"])
    record = {
        "n": triple.n,
        "A": str(triple.A),
        "B": str(triple.B),
        "C": str(triple.C),
        "alpha": fraction_str(triple.alpha),
        "beta": fraction_str(triple.beta),
        "alpha_dec": approximate(triple.alpha, args.digits).text,
        "beta_dec": approximate(triple.beta, args.digits).text,
    }
    if args.format == "json":
        _emit_json(record)
    else:
        print(
            "n={n} A={A} B={B} C={C} alpha={alpha} beta={beta} "
            "alpha_dec={alpha_dec} beta_dec={beta_dec}".format(**record)
        )
    return 0


# -- render ------------------------------------------------------------------


def _build_pair(args, allow_terminal=False):
    a = parse_digits(args.a)
    b = parse_digits(args.b)
    periodicity = None
    if args.period is not None:
        periodicity = (args.preperiod or 0, args.period)
    terminal = None
    if allow_terminal and getattr(args, "terminal", None):
        terminal = parse_number(args.terminal)
        if isinstance(terminal, RatFunc):
            raise ParseError("--terminal must be a rat: or alg: literal")
    return SequencePair(a, b, terminal=terminal, periodicity=periodicity)


def _prepare_render(args):
    pair = _build_pair(args)
    pair.digit_a(args.depth)
    pair.digit_b(args.depth)
    return {"pair": pair}


def _execute_render(args, job):
    text = render_tree(job["pair"], args.depth, format=args.style)
    if args.format == "json":
        if args.style == "ascii":
            alpha_text, beta_text = text.split("\n\n", 1)
        else:
            alpha_text, beta_text = text.split("\n", 1)
        _emit_json({"alpha": alpha_text, "beta": beta_text})
    else:
        print(text)
    return 0


# -- validate ----------------------------------------------------------------


def _prepare_validate(args):
    return {"pair": _build_pair(args, allow_terminal=True)}


def _execute_validate(args, job):
    report = validate(job["pair"])
    payload = {
        "valid": report.valid,
        "violations": [
            {"index": index, "rule": rule} for index, rule in report.violations
        ],
        "indeterminate": list(report.indeterminate),
        "last_checked": report.last_checked,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        lines = [f"valid: {'true' if report.valid else 'false'}"]
        for index, rule in report.violations:
            lines.append(f"violation index={index} rule={rule}")
        for index in report.indeterminate:
            lines.append(f"indeterminate index={index}")
        lines.append(f"last_checked: {report.last_checked}")
        print("\n".join(lines))
    return 0


# -- recover -----------------------------------------------------------------


def _prepare_recover(args):
    period_a = parse_digits(args.period_a)
    period_b = parse_digits(args.period_b)
    pre_a = parse_digits(args.preperiod_a)
    pre_b = parse_digits(args.preperiod_b)
    period = SequencePair(period_a, period_b)
    if not period_a:
        raise InvalidSequence("period digits must be nonempty")
    preperiod = SequencePair(pre_a, pre_b)
    combined = SequencePair(
        pre_a + period_a, pre_b + period_b,
        periodicity=(len(pre_a), len(period_a)),
    )
    report = validate(combined)
    if not report.valid:
        raise InvalidSequence(
            f"digits fail the admissibility rules at {list(report.violations)}"
        )
    return {"preperiod": preperiod, "period": period}


def _execute_recover(args, job):
    if job["preperiod"].a:
        result = recover_cubic_eventual(job["preperiod"], job["period"])
        method = "eventual"
    else:
        result = recover_cubic_pure(job["period"])
        method = "pure"
    lo, hi = result.field.root_interval
    num, den = result.beta_expr
    payload = {
        "min_poly": list(result.poly),
        "interval": [fraction_str(lo), fraction_str(hi)],
        "beta_expr": _ratfunc_str(num, den),
        "alpha_dec": result.alpha.approximate(args.digits).text,
        "beta_dec": result.beta.approximate(args.digits).text,
        "method": method,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        lines = [
            "min_poly: " + ",".join(str(c) for c in result.poly),
            f"interval: ({fraction_str(lo)}, {fraction_str(hi)})",
            f"beta_expr: {payload['beta_expr']}",
            f"alpha_dec: {payload['alpha_dec']}",
            f"beta_dec: {payload['beta_dec']}",
            f"method: {method}",
        ]
        print("\n".join(lines))
    return 0


# -- scan --------------------------------------------------------------------


def _parse_range(text, flag):
    lo_text, sep, hi_text = text.partition(":")
    if not sep:
        raise ParseError(f"{flag}: expected LO:HI, got {text!r}")
    try:
        lo, hi = int(lo_text, 10), int(hi_text, 10)
    except ValueError:
        raise ParseError(
            f"{flag}: expected integer endpoints, got {text!r}"
        ) from None
    if lo > hi:
        raise ParseError(f"{flag}: empty range {text!r}")
    return range(lo, hi + 1)


def _prepare_scan(args):
    c2 = _parse_range(args.c2, "--c2")
    c1 = _parse_range(args.c1, "--c1")
    c0 = _parse_range(args.c0, "--c0")
    family = [
        (1, x2, x1, x0) for x2 in c2 for x1 in c1 for x0 in c0
    ]
    if args.beta:
        candidates = []
        for literal in args.beta:
            value = parse_number(literal)
            if not isinstance(value, RatFunc):
                raise ParseError(
                    f"--beta: expected a ratfunc: literal, got {literal!r}"
                )
            candidates.append((value.num, value.den))
    else:
        candidates = list(_DEFAULT_SCAN_BETAS)
    return {"family": family, "candidates": candidates}


def _execute_scan(args, job):
    records = conjecture_scan(
        job["family"],
        job["candidates"],
        horizon=args.horizon,
        jobs=args.jobs,
        preview_digits=args.preview,
    )
    for record in records:
        interval = None
        if record.interval is not None:
            interval = [fraction_str(record.interval[0]),
                        fraction_str(record.interval[1])]
        beta_expr = None
        if record.beta_expr is not None:
            beta_expr = _ratfunc_str(*record.beta_expr)
        preview = None
        if record.digits_preview is not None:
            preview = {
                "a": list(record.digits_preview[0]),
                "b": list(record.digits_preview[1]),
            }
        _emit_json(
            {
                "min_poly": list(record.min_poly),
                "interval": interval,
                "beta_expr": beta_expr,
                "status": record.status,
                "preperiod": record.preperiod,
                "period": record.period,
                "digits_preview": preview,
            }
        )
    return 0


# -- parser ------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="bcf",
        description=(
            "Exact bifurcating continued fractions: expand pairs of numbers "
            "into paired digit sequences, evaluate and render them, validate "
            "digit pairs, recover cubic polynomials from periodic "
            "expansions, and scan cubic fields for periodicity."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser(
        "expand", help="expand a pair (alpha, beta) into digit sequences"
    )
    expand.add_argument("--alpha", required=True, help="number literal")
    expand.add_argument(
        "--beta", required=True,
        help="number literal; ratfunc: literals are evaluated at alpha",
    )
    expand.add_argument("--terms", type=_positive_int, default=64)
    expand.add_argument("--digits", type=_positive_int, default=12)
    expand.add_argument("--format", choices=("json", "text"), default="json")
    expand.add_argument(
        "--approx", action="store_true",
        help="heuristic decimal mode (enables dec: literals)",
    )
    expand.add_argument("--guard-digits", type=_positive_int, default=12)
    expand.set_defaults(prepare=_prepare_expand, execute=_execute_expand)

    evaluate = sub.add_parser(
        "eval", help="evaluate the n-term convergent of a digit pair"
    )
    evaluate.add_argument("--a", required=True, help="comma-separated digits")
    evaluate.add_argument("--b", required=True, help="comma-separated digits")
    evaluate.add_argument("--n", type=_nonnegative_int, default=None)
    evaluate.add_argument("--digits", type=_positive_int, default=12)
    evaluate.add_argument("--format", choices=("json", "text"), default="json")
    evaluate.set_defaults(prepare=_prepare_eval, execute=_execute_eval)

    render = sub.add_parser(
        "render", help="render the fraction towers of a digit pair"
    )
    render.add_argument("--a", required=True)
    render.add_argument("--b", required=True)
    render.add_argument("--depth", type=_nonnegative_int, default=2)
    render.add_argument("--style", choices=("ascii", "latex"), default="ascii")
    render.add_argument("--format", choices=("json", "text"), default="text")
    render.add_argument("--preperiod", type=_nonnegative_int, default=None)
    render.add_argument("--period", type=_positive_int, default=None)
    render.set_defaults(prepare=_prepare_render, execute=_execute_render)

    check = sub.add_parser(
        "validate", help="apply the admissibility rules to a digit pair"
    )
    check.add_argument("--a", required=True)
    check.add_argument("--b", required=True)
    check.add_argument("--preperiod", type=_nonnegative_int, default=None)
    check.add_argument("--period", type=_positive_int, default=None)
    check.add_argument(
        "--terminal", default=None,
        help="exact terminal value for a terminated pair",
    )
    check.add_argument("--format", choices=("json", "text"), default="json")
    check.set_defaults(prepare=_prepare_validate, execute=_execute_validate)

    recover = sub.add_parser(
        "recover", help="recover the cubic behind a periodic digit pair"
    )
    recover.add_argument("--period-a", required=True)
    recover.add_argument("--period-b", required=True)
    recover.add_argument("--preperiod-a", default="")
    recover.add_argument("--preperiod-b", default="")
    recover.add_argument("--digits", type=_positive_int, default=12)
    recover.add_argument("--format", choices=("json", "text"), default="json")
    recover.set_defaults(prepare=_prepare_recover, execute=_execute_recover)

    scan = sub.add_parser(
        "scan", help="scan monic cubics for eventually periodic expansions"
    )
    range_hint = "range LO:HI (write --c2=-3:1 when LO is negative)"
    scan.add_argument("--c2", default="-2:2", help=f"x^2 coefficient {range_hint}")
    scan.add_argument("--c1", default="-2:2", help=f"x coefficient {range_hint}")
    scan.add_argument("--c0", default="-2:2", help=f"constant {range_hint}")
    scan.add_argument(
        "--beta", action="append", default=None,
        help="ratfunc: literal for a beta candidate (repeatable)",
    )
    scan.add_argument("--horizon", type=_positive_int, default=64)
    scan.add_argument("--jobs", type=_positive_int, default=None)
    scan.add_argument("--preview", type=_positive_int, default=8)
    scan.set_defaults(prepare=_prepare_scan, execute=_execute_scan)

    return parser


_PARSER = _build_parser()


def run(argv):
    """Run one CLI invocation; returns the process exit code."""
    try:
        args = _PARSER.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    try:
        job = args.prepare(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.execute(args, job)
    except (BcfError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
