"""Command-line surface: family printing, certified evaluation, suite runs.

All rational inputs use the exact "p/q" text form (no decimals).  Exit codes:
0 on success / all checks passing, 1 when any check fails or errors, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from qhahn._version import __version__
from qhahn.errors import QhahnError
from qhahn.families import cauchy_p, cauchy_p_general, hahn_h, hahn_psi, trivariate_f
from qhahn.numeric import phi_numeric, qpochhammer_inf
from qhahn.polyring import VARIABLES
from qhahn.pseries import ScaledMonomial
from qhahn.qkernel import q_binomial, q_pochhammer, rational
from qhahn.verify import (
    CheckConfig,
    default_configs,
    registered_checks,
    report_csv,
    report_json,
    run_suite,
)

_DEFAULT_EPS = Fraction(1, 10**30)
_EPS_POWER_RE = re.compile(r"1/10\^(\d+)")


class UsageError(Exception):
    pass


def _parse_rational(text: str) -> Fraction:
    try:
        return rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from None


def _parse_eps(text: str) -> Fraction:
    match = _EPS_POWER_RE.fullmatch(text.strip())
    if match:
        return Fraction(1, 10 ** int(match.group(1)))
    value = _parse_rational(text)
    if value <= 0:
        raise UsageError("eps must be positive")
    return value


def _parse_params(text: str | None) -> dict:
    """Comma-separated name=value pairs; values are rationals or a variable name."""
    params: dict = {}
    if not text:
        return params
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise UsageError(f"bad parameter assignment {piece!r} (want name=value)")
        name, value = piece.split("=", 1)
        name = name.strip()
        value = value.strip()
        if value in VARIABLES:
            params[name] = ScaledMonomial.of(1, **{value: 1})
        else:
            params[name] = _parse_rational(value)
    return params


def _rational_params(params: dict) -> dict:
    return {k: v for k, v in params.items() if isinstance(v, Fraction)}


def _decimal_text(value: Fraction, digits: int) -> str:
    """Exact decimal expansion of a rational, truncated to ``digits`` places."""
    sign = "-" if value < 0 else ""
    value = abs(value)
    whole, rest = divmod(value.numerator, value.denominator)
    scaled = rest * 10**digits // value.denominator
    return f"{sign}{whole}.{scaled:0{digits}d}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhahn",
        description="Exact q-series engine: polynomial families, certified "
        "evaluation, and the identity verification suite.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="print a family member in canonical form")
    poly.add_argument(
        "family",
        choices=["cauchy", "cauchy-general", "hahn", "psi-one", "psi-two", "trivariate-f"],
    )
    poly.add_argument("--n", type=int, required=True, help="family index")
    poly.add_argument("--q", default="1/2", help='base q as "p/q"')
    poly.add_argument(
        "--params",
        default=None,
        help="comma-separated name=value pairs (a, b, z; values rational or a variable name)",
    )
    poly.add_argument("--json", action="store_true", help="emit JSON term list")

    ev = sub.add_parser("eval", help="evaluate a certified or exact quantity")
    ev.add_argument("quantity", choices=["qpochinf", "phi", "qpoch", "qbinom"])
    ev.add_argument("--a", default=None, help="parameter a")
    ev.add_argument("--q", default="1/2", help='base q as "p/q"')
    ev.add_argument("--z", default=None, help="argument z (phi)")
    ev.add_argument("--num", default="", help="comma-separated upper parameters (phi)")
    ev.add_argument("--den", default="", help="comma-separated lower parameters (phi)")
    ev.add_argument("--n", type=int, default=None, help="index n (qpoch, qbinom)")
    ev.add_argument("--k", type=int, default=None, help="index k (qbinom)")
    ev.add_argument("--eps", default=None, help='error budget, "p/q" or "1/10^N"')
    ev.add_argument("--digits", type=int, default=None, help="also print a decimal preview")
    ev.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="run the identity verification suite")
    _add_suite_arguments(ver)
    ver.add_argument("--json", action="store_true", help="emit the JSON report")
    ver.add_argument("--csv", action="store_true", help="emit the CSV summary")

    sub.add_parser("list", help="list registered checks").add_argument(
        "--json", action="store_true"
    )

    rep = sub.add_parser("report", help="run the suite and write the JSON report to a file")
    _add_suite_arguments(rep)
    rep.add_argument("--out", required=True, help="output file path")
    rep.add_argument("--csv", action="store_true", help="write CSV instead of JSON")
    return parser


def _add_suite_arguments(sub: argparse.ArgumentParser):
    sub.add_argument("--check", default=None, help='name pattern, e.g. "C14*"')
    sub.add_argument("--order-t", type=int, default=8, help="truncation order in t")
    sub.add_argument("--order-s", type=int, default=8, help="truncation order in s")
    sub.add_argument("--q", default=None, help='base q as "p/q" (default: both built-in sets)')
    sub.add_argument("--params", default=None, help="comma-separated name=value pairs")
    sub.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    sub.add_argument(
        "--timings", action="store_true", help="include elapsed_ms in the JSON report"
    )


def _suite_configs(args) -> list:
    base = default_configs()
    if args.q is None and args.params is None:
        return [
            CheckConfig(
                q=cfg.q,
                params=cfg.params,
                cap_t=args.order_t,
                cap_s=args.order_s,
                seed=args.seed,
            )
            for cfg in base
        ]
    params = dict(base[0].params)
    params.update(_rational_params(_parse_params(args.params)))
    q = _parse_rational(args.q) if args.q is not None else base[0].q
    return [
        CheckConfig(
            q=q, params=params, cap_t=args.order_t, cap_s=args.order_s, seed=args.seed
        )
    ]


def _cmd_poly(args) -> int:
    q = _parse_rational(args.q)
    params = _parse_params(args.params)
    rational_params = _rational_params(params)
    a = rational_params.get("a", Fraction(1, 7))
    b = params.get("b", Fraction(1, 3))
    z = params.get("z", Fraction(1, 4))
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.family == "cauchy":
        poly = cauchy_p(args.n, q)
    elif args.family == "cauchy-general":
        poly = cauchy_p_general(args.n, q, a)
    elif args.family == "hahn":
        poly = hahn_h(args.n, q, a, b)
    elif args.family == "psi-one":
        poly = hahn_psi("one", args.n, a, q)
    elif args.family == "psi-two":
        poly = hahn_psi("two", args.n, a, q, params.get("b"))
    else:
        poly = trivariate_f(args.n, q, z)
    if args.json:
        print(json.dumps({"family": args.family, "n": args.n, "q": str(q),
                          "terms": poly.to_pairs()}))
    else:
        print(poly)
    return 0


def _cmd_eval(args) -> int:
    q = _parse_rational(args.q)
    eps = _parse_eps(args.eps) if args.eps else _DEFAULT_EPS
    if args.quantity == "qpochinf":
        if args.a is None:
            raise UsageError("qpochinf needs --a")
        value = qpochhammer_inf(_parse_rational(args.a), q, eps)
        approx, bound = value.approx, value.error_bound
    elif args.quantity == "phi":
        if args.z is None:
            raise UsageError("phi needs --z")
        upper = [_parse_rational(p) for p in args.num.split(",") if p.strip()]
        lower = [_parse_rational(p) for p in args.den.split(",") if p.strip()]
        value = phi_numeric(upper, lower, q, _parse_rational(args.z), eps)
        approx, bound = value.approx, value.error_bound
    elif args.quantity == "qpoch":
        if args.a is None or args.n is None:
            raise UsageError("qpoch needs --a and --n")
        approx, bound = q_pochhammer(_parse_rational(args.a), q, args.n), Fraction(0)
    else:  # qbinom
        if args.n is None or args.k is None:
            raise UsageError("qbinom needs --n and --k")
        approx, bound = q_binomial(args.n, args.k, q), Fraction(0)
    if args.json:
        print(json.dumps({"approx": str(approx), "bound": str(bound)}))
    else:
        print(f"{approx} ± {bound}")
        if args.digits:
            print(f"≈ {_decimal_text(approx, args.digits)}")
    return 0


def _cmd_verify(args, out=None) -> int:
    out = out if out is not None else sys.stdout
    configs = _suite_configs(args)
    results = run_suite(configs, name_filter=args.check)
    if args.json:
        out.write(report_json(results, include_timings=args.timings))
    elif args.csv:
        out.write(report_csv(results))
    else:
        for index, config in enumerate(configs, start=1):
            for result in results:
                if result.config is not config:
                    continue
                line = f"{result.status:5s} {result.name} [config {index}]"
                if result.detail:
                    line += f" ({result.detail})"
                if args.timings:
                    line += f" [{int(round(result.elapsed * 1000))} ms]"
                out.write(line + "\n")
        passed = sum(1 for r in results if r.status == "pass")
        out.write(f"{passed}/{len(results)} checks passed\n")
    return 0 if all(r.status == "pass" for r in results) else 1


def _cmd_list(args) -> int:
    checks = registered_checks()
    if args.json:
        print(json.dumps([{"name": n, "description": d} for n, d in checks], indent=2))
    else:
        width = max(len(name) for name, _ in checks)
        for name, description in checks:
            print(f"{name:<{width}}  {description}")
    return 0


def _cmd_report(args) -> int:
    configs = _suite_configs(args)
    results = run_suite(configs, name_filter=args.check)
    if args.csv:
        text = report_csv(results)
    else:
        text = report_json(results, include_timings=args.timings)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(text)
    failed = sum(1 for r in results if r.status != "pass")
    print(f"wrote {args.out} ({len(results)} checks, {failed} not passing)")
    return 0 if failed == 0 else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "poly":
            return _cmd_poly(args)
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "list":
            return _cmd_list(args)
        return _cmd_report(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QhahnError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
