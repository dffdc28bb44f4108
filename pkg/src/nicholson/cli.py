"""Command-line front end.

Subcommands::

    eval      evaluate one function at one point
    table     relative peak-amplitude errors (delta12 or delta34)
    figure    aligned samples of an exact function and its approximant
    scaling   log-log slope of peak amplitude or lobe offset against order
    bigorder  F1 at nu = 5000000.2, x = 5000000.1 against the literature value

Output goes to stdout as CSV with a header row (or a single JSON object with
``--format json``); diagnostics go to stderr. Exit status is 0 on success,
1 on evaluation or domain errors and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from typing import Callable, Sequence

from . import analysis, asymptotics, lattice, special
from .errors import NicholsonError

EXIT_OK = 0
EXIT_EVAL = 1
EXIT_USAGE = 2

DEFAULT_PRECISION = 15

TABLES = {
    "delta12": (("bessel", "bessel_prime"), (2, 6, 10, 20)),
    "delta34": (("lommel", "lommel_prime"), (6, 10, 20, 40)),
}


class UsageError(Exception):
    pass


def format_number(value: float, precision: int = DEFAULT_PRECISION) -> str:
    """Shortest round-trip text of ``value`` after rounding to ``precision`` significant digits."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return repr(float(f"{value:.{precision}g}"))


def _json_number(value, precision):
    value = float(value)
    return None if not math.isfinite(value) else float(f"{value:.{precision}g}")


def _parse_orders(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"orders must be a comma-separated list of numbers, got {text!r}") from None


def _as_order(value: float):
    return int(value) if float(value).is_integer() else value


# ---------------------------------------------------------------- eval

def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--fn {args.fn} requires --{name.replace('_', '-')}")
    return [getattr(args, name) for name in names]


def _olver_a(args) -> float:
    if args.a is not None:
        return args.a
    nu, x = _need(args, "n", "x")
    return asymptotics.OlverCoord.from_argument(nu, x).a


def _lattice(args) -> lattice.LatticeParams:
    k, t = _need(args, "k", "t")
    if not float(k).is_integer():
        raise UsageError("--k must be an integer")
    return lattice.LatticeParams(c=args.c, k=int(k), t=t)


def _evaluate(args) -> tuple[float, float | None]:
    fn = args.fn
    z_funcs = {
        "ai": special.airy_ai,
        "aip": special.airy_ai_prime,
        "gi": special.scorer_gi,
        "gip": special.scorer_gi_prime,
    }
    order_funcs = {
        "jn": special.bessel_j,
        "jnp": special.bessel_j_prime,
        "s0n": special.lommel_s0,
        "s0np": special.lommel_s0_prime,
    }
    approx_funcs = {
        "f1": asymptotics.f1_bessel,
        "f2": asymptotics.f2_bessel_prime,
        "f3": asymptotics.f3_lommel,
        "f4": asymptotics.f4_lommel_prime,
    }
    lattice_funcs = {
        "u": lattice.u_exact,
        "v": lattice.v_exact,
        "u-qf": lattice.u_quasifront,
        "v-qf": lattice.v_quasifront,
    }
    if fn in z_funcs:
        (z,) = _need(args, "x")
        res = z_funcs[fn](z)
        return res.value, res.abs_err_est
    if fn in order_funcs:
        n, x = _need(args, "n", "x")
        res = order_funcs[fn](n, x)
        return res.value, res.abs_err_est
    if fn in approx_funcs:
        n, x = _need(args, "n", "x")
        return approx_funcs[fn](n, x), None
    if fn == "olver-j":
        (nu,) = _need(args, "n")
        return asymptotics.olver_two_term_j(nu, _olver_a(args)), None
    if fn == "olver-jp":
        (nu,) = _need(args, "n")
        return asymptotics.olver_two_term_jprime(nu, _olver_a(args)), None
    return lattice_funcs[fn](_lattice(args)), None


def cmd_eval(args, out) -> int:
    value, err = _evaluate(args)
    if args.format == "json":
        obj = {"fn": args.fn, "value": _json_number(value, args.precision)}
        if err is not None:
            obj["abs_err_est"] = _json_number(err, args.precision)
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(format_number(value, args.precision) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- table

def cmd_table(args, out) -> int:
    families, default_orders = TABLES[args.which]
    orders = _parse_orders(args.orders) if args.orders else list(default_orders)
    if not orders:
        raise UsageError("no orders given")
    rows = []
    for fam in families:
        for row in analysis.delta_table(fam, [_as_order(n) for n in orders], args.step, args.refine):
            rows.append((fam, row))
    p = args.precision
    failed = [r for _, r in rows if not r.ok]
    for fam, r in rows:
        if not r.ok:
            print(f"error: {fam} n={r.n}: {r.error}", file=sys.stderr)
    if args.format == "json":
        payload = {
            "which": args.which,
            "step": args.step,
            "rows": [
                {
                    "family": fam,
                    "n": r.n,
                    "max_exact": _json_number(r.max_exact, p),
                    "max_approx": _json_number(r.max_approx, p),
                    "delta_pct": _json_number(r.delta_pct, p),
                    "error": r.error,
                }
                for fam, r in rows
            ],
        }
        out.write(json.dumps(payload) + "\n")
    else:
        out.write("family,n,max_exact,max_approx,delta_pct,error\n")
        for fam, r in rows:
            if r.ok:
                fields = [format_number(v, p) for v in (r.max_exact, r.max_approx, r.delta_pct)]
                out.write(f"{fam},{r.n},{','.join(fields)},\n")
            else:
                kind = r.error.split(":", 1)[0]
                out.write(f"{fam},{r.n},,,,{kind}\n")
    return EXIT_EVAL if failed else EXIT_OK


# ---------------------------------------------------------------- figure

def _figure_grid(args) -> analysis.GridSpec:
    lo, hi = analysis.principal_window(args.n)
    t_min = args.t_min if args.t_min is not None else max(args.step, args.step * math.floor(lo / args.step))
    t_max = args.t_max if args.t_max is not None else args.step * math.ceil(hi / args.step)
    if t_min > t_max:
        raise UsageError(f"empty range: --t-min {t_min} > --t-max {t_max}")
    return analysis.GridSpec(t_min, t_max, args.step)


def cmd_figure(args, out) -> int:
    if args.fixed_t is not None:
        if args.n_min is None or args.n_max is None:
            raise UsageError("--fixed-t requires --n-min and --n-max")
        if args.n_min > args.n_max:
            raise UsageError(f"empty range: --n-min {args.n_min} > --n-max {args.n_max}")
        series = analysis.figure_series_fixed_t(args.which, args.fixed_t, args.n_min, args.n_max)
    else:
        if args.n is None:
            raise UsageError("--n is required")
        n = args.n if args.which == 5 else _as_order(args.n)
        series = analysis.figure_series(args.which, n, _figure_grid(args))
    cols = series.columns()
    p = args.precision
    # the order column of a fixed-t sweep holds integers
    rows = [[int(row[0]), *row[1:]] if cols[0] == "n" else list(row) for row in series.rows()]
    if args.format == "json":
        payload = {
            "figure": args.which,
            "columns": cols,
            "rows": [[v if isinstance(v, int) else _json_number(v, p) for v in row] for row in rows],
        }
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(",".join(cols) + "\n")
        for row in rows:
            out.write(",".join(str(v) if isinstance(v, int) else format_number(v, p) for v in row) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- scaling

def cmd_scaling(args, out) -> int:
    orders = [_as_order(n) for n in _parse_orders(args.orders)]
    fit = analysis.scaling_fit(args.quantity, args.family, orders, source=args.source, against=args.against)
    p = args.precision
    if args.format == "json":
        payload = {
            "quantity": args.quantity,
            "family": args.family,
            "source": args.source,
            "against": fit.against,
            "points": [
                {"n": n, "t_at": _json_number(t, p), "measured": _json_number(m, p)}
                for n, t, m in zip(fit.orders, fit.t_at, fit.measured)
            ],
            "fit_exponent": _json_number(fit.exponent, p),
            "intercept": _json_number(fit.intercept, p),
            "max_residual": _json_number(fit.max_residual, p),
        }
        out.write(json.dumps(payload) + "\n")
    else:
        out.write("n,t_at,measured,fit_exponent\n")
        exp_text = format_number(fit.exponent, p)
        for n, t, m in zip(fit.orders, fit.t_at, fit.measured):
            out.write(f"{n},{format_number(t, p)},{format_number(m, p)},{exp_text}\n")
        out.write(
            f"# fit_exponent={exp_text} intercept={format_number(fit.intercept, p)} "
            f"max_residual={format_number(fit.max_residual, p)} against={fit.against}\n"
        )
    return EXIT_OK


# ---------------------------------------------------------------- bigorder

def cmd_bigorder(args, out) -> int:
    rep = analysis.bigorder_check()
    p = args.precision
    fields = [
        ("nu", rep.nu),
        ("x", rep.x),
        ("f1_value", rep.f1_value),
        ("reference_exact", rep.reference_exact),
        ("published_approx", rep.published_approx),
    ]
    if args.format == "json":
        payload = {k: _json_number(v, p) for k, v in fields}
        payload["agreeing_sig_figs"] = rep.agreeing_sig_figs
        payload["published_approx_sig_figs"] = rep.published_approx_sig_figs
        out.write(json.dumps(payload) + "\n")
    else:
        for k, v in fields:
            out.write(f"{k}: {format_number(v, p)}\n")
        out.write(f"agreeing_sig_figs: {rep.agreeing_sig_figs}\n")
        out.write(f"published_approx_sig_figs: {rep.published_approx_sig_figs}\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser

EVAL_FNS = (
    "ai", "aip", "gi", "gip", "jn", "jnp", "s0n", "s0np",
    "f1", "f2", "f3", "f4", "olver-j", "olver-jp",
    "u", "v", "u-qf", "v-qf",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="significant digits")
    common.add_argument("--c", type=float, default=1.0, help="wave speed for the lattice functions u, v")

    parser = argparse.ArgumentParser(
        prog="nicholson",
        description="Bessel, Lommel, Airy and Scorer functions and their Nicholson-type approximants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate one function")
    p.add_argument("--fn", required=True, choices=EVAL_FNS)
    p.add_argument("--n", type=float, help="order (nu for olver-j/olver-jp)")
    p.add_argument("--x", type=float, help="argument (z for ai/aip/gi/gip)")
    p.add_argument("--a", type=float, help="offset coefficient for olver-j/olver-jp instead of --x")
    p.add_argument("--k", type=float, help="lattice node index for u, v, u-qf, v-qf")
    p.add_argument("--t", type=float, help="time for u, v, u-qf, v-qf")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("table", parents=[common], help="relative peak-amplitude errors")
    p.add_argument("--which", required=True, choices=sorted(TABLES))
    p.add_argument("--orders", help="comma-separated orders (defaults per table)")
    p.add_argument("--step", type=float, default=analysis.DEFAULT_STEP)
    p.add_argument("--refine", action="store_true", help="use parabola-refined peak values")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("figure", parents=[common], help="exact vs approximant samples")
    p.add_argument("--which", required=True, type=int, choices=(1, 2, 3, 4, 5))
    p.add_argument("--n", type=float)
    p.add_argument("--t-min", type=float)
    p.add_argument("--t-max", type=float)
    p.add_argument("--step", type=float, default=analysis.DEFAULT_STEP)
    p.add_argument("--fixed-t", type=float, help="vary the order at this fixed t instead")
    p.add_argument("--n-min", type=float)
    p.add_argument("--n-max", type=float)
    p.set_defaults(handler=cmd_figure)

    p = sub.add_parser("scaling", parents=[common], help="log-log scaling exponent")
    p.add_argument("--quantity", required=True, choices=("amplitude", "width"))
    p.add_argument("--family", required=True, choices=sorted(analysis.FAMILIES))
    p.add_argument("--orders", default="10,100,1000,10000")
    p.add_argument("--source", choices=("exact", "approx"), default="exact")
    p.add_argument("--against", choices=("n", "t"), help="abscissa of the fit")
    p.set_defaults(handler=cmd_scaling)

    p = sub.add_parser("bigorder", parents=[common], help="large-order agreement check")
    p.set_defaults(handler=cmd_bigorder)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    handler: Callable = args.handler
    try:
        return handler(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NicholsonError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
