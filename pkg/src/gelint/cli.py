"""Command-line front end.

Usage:
    gelint eval K --p 3 --q 2 --r 4 --k 0.5
    gelint eval pi --p inf --q 3
    gelint verify legendre --p 2 --q 2 --r 2 --sweep k:0.1:0.9:9 --threshold 1e-10
    gelint verify elliott --a 0 --b 0 --c 0 --x 0.5
    gelint table K --p 3 --q 2 --r 4 --sweep k:0:0.9:10 --format csv

Exit codes: 0 ok, 1 usage, 2 domain, 3 convergence, 4 threshold breach, 5 I/O.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, IntegrandError
from .gci import Backend, GciPoint, eval_E, eval_K
from .gtrig import GTrigParams, arcsin_pq, cos_pq, sin_pq
from .identities import (
    ElliottParams,
    elliott_residual,
    legendre_residual,
    ode_residual,
)
from .params import Exponent, as_exponent, validate_triple
from .special import pi_pq

__all__ = ["main", "cmd_eval", "cmd_verify", "cmd_table", "SweepSpec", "parse_sweep"]

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_CONVERGENCE, EXIT_THRESHOLD, EXIT_IO = range(6)

FUNCTIONS = ("K", "E", "pi", "sin", "cos", "arcsin")
SWEEPABLE = ("p", "q", "r", "k", "x", "theta", "a", "b", "c", "h")
FORMATS = ("table", "csv", "json")
_EPS = 2.220446049250313e-16

LEGENDRE_COLUMNS = ["p", "q", "r", "k", "k_prime", "term_EKp", "term_KEp", "term_KKp",
                    "rhs", "residual", "err_estimate"]
_VERIFY_THRESHOLDS = {"legendre": 1e-8, "elliott": 1e-9, "ode": 1e-6, "constancy": 1e-8}


class UsageError(Exception):
    pass


def default_tol() -> float:
    raw = os.environ.get("GELINT_DEFAULT_TOL")
    if raw is None:
        return 1e-12
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"GELINT_DEFAULT_TOL={raw!r} is not a number") from None


@dataclass(frozen=True)
class SweepSpec:
    name: str
    start: float
    stop: float
    count: int

    def values(self) -> list[float]:
        if self.count == 1:
            return [self.start]
        step = (self.stop - self.start) / (self.count - 1)
        vals = [self.start + i * step for i in range(self.count)]
        vals[-1] = self.stop
        return vals


def parse_sweep(text: str) -> SweepSpec:
    """``name:start:stop:count`` with an inclusive linear grid."""
    parts = text.split(":")
    if len(parts) != 4:
        raise UsageError(f"sweep {text!r} is not name:start:stop:count")
    name = parts[0]
    if name not in SWEEPABLE:
        raise UsageError(f"cannot sweep {name!r}; choose from {', '.join(SWEEPABLE)}")
    try:
        start, stop, count = float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError:
        raise UsageError(f"sweep {text!r} has a malformed number") from None
    if count < 1:
        raise UsageError(f"sweep count must be >= 1, got {count}")
    if start > stop:
        raise UsageError(f"sweep start {start} exceeds stop {stop}")
    return SweepSpec(name, start, stop, count)


def fmt(value) -> str:
    if isinstance(value, Exponent):
        return str(value) if value.is_infinite else format(value.value, ".17g")
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(value, ".17g")
    if isinstance(value, Backend):
        return value.value
    return str(value)


def _json_value(value):
    if isinstance(value, Exponent):
        return "inf" if value.is_infinite else value.value
    if isinstance(value, Backend):
        return value.value
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def render(rows: list[dict], columns: list[str], fmt_name: str) -> str:
    if fmt_name == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([fmt(row[c]) for c in columns])
        return buf.getvalue()
    if fmt_name == "json":
        data = [{c: _json_value(row[c]) for c in columns} for row in rows]
        return json.dumps(data, indent=2, allow_nan=False) + "\n"
    cells = [columns] + [[fmt(row[c]) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def _grid(args) -> tuple[list[dict], list[str]]:
    """Cartesian product of the sweeps (first sweep outermost) over fixed flags."""
    base = {name: getattr(args, name, None) for name in SWEEPABLE}
    sweeps = [parse_sweep(s) for s in (args.sweep or [])]
    names = [s.name for s in sweeps]
    if len(set(names)) != len(names):
        raise UsageError("each parameter may be swept at most once")
    points = []
    for combo in itertools.product(*(s.values() for s in sweeps)):
        point = dict(base)
        point.update(zip(names, combo))
        points.append(point)
    return points, names


def _require(point: dict, *names: str) -> list:
    missing = [n for n in names if point.get(n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))
    return [point[n] for n in names]


def evaluate(function: str, point: dict, backend: Backend, tol: float) -> tuple[float, float, str]:
    """(value, abs_err_estimate, backend label) for one CLI function at one point."""
    if function in ("K", "E"):
        p, q, r, k = _require(point, "p", "q", "r", "k")
        triple = validate_triple(as_exponent(p), float(q), float(r))
        gp = GciPoint.at(triple, float(k))
        res = (eval_K if function == "K" else eval_E)(gp, backend, tol)
        return res.value, res.abs_err_estimate, res.backend_used.value
    if function == "pi":
        p, q = _require(point, "p", "q")
        value = pi_pq(as_exponent(p), float(q))
        return value, 4.0 * _EPS * value, Backend.CLOSED_FORM.value
    p, q = _require(point, "p", "q")
    params = GTrigParams.create(as_exponent(p), float(q))
    if function == "arcsin":
        (x,) = _require(point, "x")
        value = arcsin_pq(params, float(x))
        return value, 1e-14 * (1.0 + value), "gtrig"
    (theta,) = _require(point, "theta")
    value = (sin_pq if function == "sin" else cos_pq)(params, float(theta))
    return value, 1e-12 * (1.0 + abs(value)), "gtrig"


def _map_ordered(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {out}: {exc}") from exc


class _IOFailure(Exception):
    pass


def cmd_eval(args) -> int:
    tol = args.tol if args.tol is not None else default_tol()
    point = {name: getattr(args, name, None) for name in SWEEPABLE}
    value, err, backend = evaluate(args.function, point, Backend(args.backend), tol)
    row = {"function": args.function, "value": value, "abs_err_estimate": err, "backend": backend}
    _emit(render([row], ["function", "value", "abs_err_estimate", "backend"], args.format), args.out)
    return EXIT_OK


def _legendre_row(point: dict, tol: float) -> dict:
    p, q, r, k = _require(point, "p", "q", "r", "k")
    triple = validate_triple(as_exponent(p), float(q), float(r))
    rep = legendre_residual(triple, float(k), tol)
    return {"p": triple.p, "q": triple.q, "r": triple.r, "k": rep.k, "k_prime": rep.k_prime,
            "term_EKp": rep.term_EKp, "term_KEp": rep.term_KEp, "term_KKp": rep.term_KKp,
            "rhs": rep.rhs, "residual": rep.residual, "err_estimate": rep.err_estimate}


def _elliott_row(point: dict, tol: float) -> dict:
    a, b, c, x = (float(v) for v in _require(point, "a", "b", "c", "x"))
    return {"a": a, "b": b, "c": c, "x": x, "residual": elliott_residual(ElliottParams(a, b, c, x))}


def _ode_row(point: dict, tol: float) -> dict:
    p, q, r, k = _require(point, "p", "q", "r", "k")
    h = float(point.get("h") or 1e-5)
    triple = validate_triple(as_exponent(p), float(q), float(r))
    res_e, res_k = ode_residual(triple, float(k), h)
    return {"p": triple.p, "q": triple.q, "r": triple.r, "k": float(k), "h": h,
            "residual_E": res_e, "residual_K": res_k, "residual": max(res_e, res_k)}


_VERIFY = {
    "legendre": (_legendre_row, LEGENDRE_COLUMNS),
    "elliott": (_elliott_row, ["a", "b", "c", "x", "residual"]),
    "ode": (_ode_row, ["p", "q", "r", "k", "h", "residual_E", "residual_K", "residual"]),
}


def cmd_verify(args) -> int:
    tol = args.tol if args.tol is not None else default_tol()
    threshold = args.threshold if args.threshold is not None else _VERIFY_THRESHOLDS[args.identity]
    points, names = _grid(args)
    if args.identity == "constancy":
        if "k" not in names:
            raise UsageError("verify constancy needs --sweep k:start:stop:count")
        rows_raw = _map_ordered(lambda pt: _legendre_row(pt, tol), points, args.jobs)
        groups: dict[tuple, list[dict]] = {}
        for row in rows_raw:
            groups.setdefault(tuple(fmt(row[n]) for n in ("p", "q", "r")), []).append(row)
        rows = [{"p": g[0]["p"], "q": g[0]["q"], "r": g[0]["r"], "n_points": len(g),
                 "rhs": g[0]["rhs"], "residual": max(abs(x["residual"]) for x in g)}
                for g in groups.values()]
        columns = ["p", "q", "r", "n_points", "rhs", "residual"]
    else:
        row_fn, columns = _VERIFY[args.identity]
        rows = _map_ordered(lambda pt: row_fn(pt, tol), points, args.jobs)
    _emit(render(rows, columns, args.format), args.out)
    worst = max((abs(r["residual"]) for r in rows), default=0.0)
    failing = sum(abs(r["residual"]) > threshold for r in rows)
    verdict = "PASS" if failing == 0 else f"FAIL ({failing} of {len(rows)} above threshold)"
    print(f"{args.identity}: {len(rows)} point(s), max |residual| = {worst:.3e}, "
          f"threshold = {threshold:.1e}: {verdict}", file=sys.stderr)
    return EXIT_OK if failing == 0 else EXIT_THRESHOLD


def cmd_table(args) -> int:
    tol = args.tol if args.tol is not None else default_tol()
    points, names = _grid(args)
    if len(names) > 2:
        raise UsageError("table takes at most two sweep axes")
    backend = Backend(args.backend)

    def row_for(pt):
        value, err, used = evaluate(args.function, pt, backend, tol)
        row = {n: pt[n] for n in names}
        row.update(value=value, abs_err_estimate=err, backend=used)
        return row

    rows = _map_ordered(row_for, points, args.jobs)
    for row in rows:
        for n in names:
            if n == "p":
                row[n] = as_exponent(row[n])
    _emit(render(rows, names + ["value", "abs_err_estimate", "backend"], args.format), args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", help="exponent in P* = (-inf, 0) U (1, inf]; 'inf' allowed")
    for name in ("q", "r", "k", "x", "theta", "a", "b", "c", "h"):
        parser.add_argument(f"--{name}", type=float)
    parser.add_argument("--backend", default=Backend.AUTO.value,
                        choices=[b.value for b in Backend if b is not Backend.CLOSED_FORM])
    parser.add_argument("--tol", type=float, default=None,
                        help="evaluation tolerance (default 1e-12 or $GELINT_DEFAULT_TOL)")
    parser.add_argument("--format", default="table", choices=FORMATS)
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--jobs", type=int, default=1, help="worker threads for sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gelint", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="evaluate one function at one point")
    p_eval.add_argument("function", choices=FUNCTIONS)
    _add_params(p_eval)
    p_eval.set_defaults(handler=cmd_eval)

    p_verify = sub.add_parser("verify", help="residuals of an identity over a grid")
    p_verify.add_argument("identity", choices=("legendre", "elliott", "ode", "constancy"))
    _add_params(p_verify)
    p_verify.add_argument("--sweep", action="append", help="name:start:stop:count")
    p_verify.add_argument("--threshold", type=float, default=None)
    p_verify.set_defaults(handler=cmd_verify)

    p_table = sub.add_parser("table", help="tabulate a function over one or two sweeps")
    p_table.add_argument("function", choices=FUNCTIONS)
    _add_params(p_table)
    p_table.add_argument("--sweep", action="append", help="name:start:stop:count")
    p_table.set_defaults(handler=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"gelint: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        where = f" [{exc.param}]" if exc.param else ""
        print(f"gelint: domain error{where}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ConvergenceError, IntegrandError) as exc:
        print(f"gelint: convergence error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except _IOFailure as exc:
        print(f"gelint: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
