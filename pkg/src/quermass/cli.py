"""Batch command line: parse JSON bodies/functions, run computations and
check suites, emit CSV or JSON reports.

Exit codes: 0 all checks satisfied, 1 a violation was found (the witness
row says which), 2 input or parameter error.  Identical configuration and
seed produce byte-identical output; QK_THREADS caps suite parallelism.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import gauss_perimeter as gp
from . import inequalities as ineq
from . import jsonio
from .functionals import (QuadratureSpec, W, dual_mwidth, dual_mwidth_check,
                          euler, integral, mean_width_f, perimeter, psi_table,
                          steiner_check, steiner_poly)
from .geometry import random_subspace
from .qcfun import supconv
from .report import Report, reports_to_csv, reports_to_json


class CliError(Exception):
    pass


def _emit_rows(rows, header, args):
    """rows: list of dicts, emitted in the fixed header order."""
    if args.format == "json":
        text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    else:
        lines = [",".join(header)]
        for r in rows:
            lines.append(",".join(str(r.get(c, "")) for c in header))
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_reports(reports, args):
    text = reports_to_json(reports) if args.format == "json" \
        else reports_to_csv(reports)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.satisfied for r in reports) else 1


def _quad(args) -> QuadratureSpec:
    return QuadratureSpec(mc_samples=args.samples, seed=args.seed,
                          tol=args.tol, grid_step=args.grid)


def _rho_list(args, default=(0.25, 0.5, 1.0, 2.0)):
    if args.rho:
        return [float(r) for r in args.rho.split(",")]
    return list(default)


def cmd_body(args):
    K = jsonio.load_body(args.input[0])
    w = K.quermass()
    rows = [{"i": i, "W_i": repr(float(v))} for i, v in enumerate(w)]
    _emit_rows(rows, ["i", "W_i"], args)
    return 0


def cmd_quermass(args):
    f = jsonio.load_fn(args.input[0])
    q = _quad(args)
    rows = [{"quantity": f"W_{i}", "value": repr(W(f, i, q)), "method": "exact",
             "tol": repr(args.tol)} for i in range(f.dim + 1)]
    for name, val in (("Per", perimeter(f, q)), ("M", mean_width_f(f, q)),
                      ("chi", euler(f, q)), ("I", integral(f, q))):
        rows.append({"quantity": name, "value": repr(val), "method": "exact",
                     "tol": repr(args.tol)})
    _emit_rows(rows, ["quantity", "value", "method", "tol"], args)
    return 0


def cmd_steiner(args):
    f = jsonio.load_fn(args.input[0])
    q = _quad(args)
    poly = steiner_poly(f, q)
    reports = steiner_check(f, _rho_list(args), q,
                            mc_rho=args.mc_rho if args.mc_rho > 0 else None)
    for i, c in enumerate(poly.coeffs):
        reports.insert(i, Report(check=f"steiner_coeff_{i}", lhs=float(c),
                                 rhs=float(c), mode="eq", tol=0.0,
                                 route="exact", params={"n": f.dim, "i": i}))
    return _emit_reports(reports, args)


def cmd_dual_steiner(args):
    f = jsonio.load_fn(args.input[0])
    q = _quad(args)
    rows = [{"rho": repr(float(r)), "psi": repr(float(v))}
            for r, v in psi_table(f, _rho_list(args, (0.25, 0.5, 1.0)), q)]
    mw = dual_mwidth(f, q)
    rows.append({"rho": "dual_mean_width", "psi": "inf" if math.isinf(mw)
                 else repr(mw)})
    if math.isfinite(mw):
        rep = dual_mwidth_check(f, q)
        rows.append({"rho": "fd_check_margin", "psi": repr(rep.margin)})
        if not rep.satisfied:
            _emit_rows(rows, ["rho", "psi"], args)
            return 1
    _emit_rows(rows, ["rho", "psi"], args)
    return 0


def cmd_supconv(args):
    f = jsonio.load_fn(args.input[0])
    g = jsonio.load_fn(args.input[1])
    h = supconv(args.alpha, args.s, f, args.t, g)
    out = jsonio.fn_to_dict(h)
    if args.out:
        jsonio.dump(out, args.out)
    else:
        sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_project(args):
    f = jsonio.load_fn(args.input[0])
    sub = random_subspace(f.dim, args.k, args.seed)
    out = jsonio.fn_to_dict(f.project(sub))
    payload = {"basis": sub.basis.tolist(), "projection": out}
    if args.out:
        jsonio.dump(payload, args.out)
    else:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_kubota(args):
    f = jsonio.load_fn(args.input[0])
    q = _quad(args)
    rep = ineq.check_cauchy_kubota(f, args.i, args.k, args.samples, args.seed, q)
    return _emit_reports([rep], args)


def cmd_counterexample(args):
    phis = np.linspace(0.3, 1.54, args.nodes)
    rows = []
    for phi, l, fp_cap, fp_ball, ratio in gp.phi_sweep(args.n, args.p, phis):
        rows.append({"phi": repr(float(phi)), "l": repr(float(l)),
                     "F_p_cap": repr(float(fp_cap)),
                     "F_p_ball": repr(float(fp_ball)),
                     "ratio": repr(float(ratio))})
    vio = gp.find_violation(args.n, args.p)
    rows.append({"phi": repr(vio.phi), "l": repr(vio.l),
                 "F_p_cap": repr(vio.fp_cap), "F_p_ball": repr(vio.fp_ball),
                 "ratio": repr(vio.fp_cap / vio.fp_ball)})
    _emit_rows(rows, ["phi", "l", "F_p_cap", "F_p_ball", "ratio"], args)
    return 0 if vio.fp_cap > vio.fp_ball else 1


_SINGLE_CHECKS = {
    "isoperimetric": ineq.check_isoperimetric,
    "entropy": ineq.check_entropy,
    "urysohn": ineq.check_urysohn,
}


def cmd_check(args):
    q = _quad(args)
    suite = args.suite
    if suite in ineq.SUITES:
        reports = ineq.SUITES[suite](cases=args.cases, seed=args.seed)
        if args.negative_control:
            reports = ineq.negative_controls(seed=args.seed)
        return _emit_reports(reports, args)
    if suite in _SINGLE_CHECKS:
        f = jsonio.load_fn(args.input[0])
        scale = 0.9 if args.negative_control else 1.0
        rep = _SINGLE_CHECKS[suite](f, q, lhs_scale=scale)
        return _emit_reports([rep], args)
    if suite == "wk-wi":
        f = jsonio.load_fn(args.input[0])
        scale = 0.9 if args.negative_control else 1.0
        rep = ineq.check_wk_wi(f, args.i, args.k, q, lhs_scale=scale)
        return _emit_reports([rep], args)
    if suite == "rearrangement":
        f = jsonio.load_fn(args.input[0])
        rep = ineq.check_rearrangement(f, args.k, q)
        return _emit_reports([rep], args)
    if suite == "valuation":
        f = jsonio.load_fn(args.input[0])
        g = jsonio.load_fn(args.input[1])
        rep = ineq.check_valuation(f, g, args.i, q)
        if args.negative_control:
            rep.lhs *= 0.9
        return _emit_reports([rep], args)
    if suite == "supconv-support":
        K0 = jsonio.load_body(args.input[0])
        K1 = jsonio.load_body(args.input[1])
        rep = gp.check_supconv_support(K0, K1, args.t, grid_step=args.grid)
        return _emit_reports([rep], args)
    if suite == "equality-regression":
        return _emit_reports([ineq.exponential_equality_case()], args)
    raise CliError(f"unknown check suite {suite!r}; see --help")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="quermass",
        description="Quermassintegrals of quasi-concave functions: "
                    "computations and inequality check suites.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, inputs=0):
        if inputs:
            p.add_argument("--input", nargs=inputs, required=True,
                           help="input JSON file(s)")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=10_000)
        p.add_argument("--grid", type=float, default=1e-2)
        p.add_argument("--rho", default="", help="comma-separated rho list")

    p = sub.add_parser("body", help="quermassintegral vector of a body")
    common(p, inputs=1)
    p.set_defaults(func=cmd_body)

    p = sub.add_parser("quermass", help="W_i(f), Per, M, chi of a function")
    common(p, inputs=1)
    p.set_defaults(func=cmd_quermass)

    p = sub.add_parser("steiner", help="Steiner polynomial and two-route check")
    common(p, inputs=1)
    p.add_argument("--mc-rho", type=float, default=0.0,
                   help="also run the Monte-Carlo route at this rho")
    p.set_defaults(func=cmd_steiner)

    p = sub.add_parser("dual-steiner", help="dual expansion table and limit")
    common(p, inputs=1)
    p.set_defaults(func=cmd_dual_steiner)

    p = sub.add_parser("supconv", help="sup-convolution of two functions")
    common(p, inputs=2)
    p.add_argument("--alpha", type=float, default=-math.inf)
    p.add_argument("--s", type=float, default=0.5)
    p.add_argument("--t", type=float, default=0.5)
    p.set_defaults(func=cmd_supconv)

    p = sub.add_parser("project", help="project a function onto a random subspace")
    common(p, inputs=1)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("kubota", help="Monte-Carlo Kubota recovery of W_i(f)")
    common(p, inputs=1)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_kubota)

    p = sub.add_parser("counterexample",
                       help="cap-body sweep showing F_p is not monotone")
    common(p)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--nodes", type=int, default=12)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("check", help="run an inequality check or seeded suite")
    p.add_argument("suite", help="pl1d | generalized | hyperbolic | gradient | "
                   "isoperimetric | entropy | urysohn | wk-wi | rearrangement | "
                   "valuation | supconv-support | equality-regression")
    common(p)
    p.add_argument("--input", nargs="*", default=[], help="input JSON file(s)")
    p.add_argument("--cases", type=int, default=64)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--t", type=float, default=0.5)
    p.add_argument("--negative-control", action="store_true",
                   help="corrupt the checked object by 0.9; must exit 1")
    p.set_defaults(func=cmd_check)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (jsonio.SchemaError, CliError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
