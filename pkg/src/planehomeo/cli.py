"""Command line front end.

Exit codes: 0 success, 1 parse/domain/usage error (a one-line JSON record is
written to stderr), 2 inconclusive certificate under ``--strict``.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize
from .compact import EmptySupport, support_sample
from .errors import InconclusiveError, PlaneHomeoError
from .fixed_points import certify_fixed_point_free, separation_radius, winding_certificate
from .genericity import (
    COMPACTS,
    FAMILIES,
    PAIRS,
    avoid_fixed_points_on_grid,
    lemma3_experiment,
    lemma4_experiment,
    nowhere_dense_escape,
)
from .grammar import ExprDomainError, ParseError, parse_complex, parse_expr
from .homeo import DEFAULT_TOL, Cell2, Disk
from .metric import MetricConfig, dist_report

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _disk(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected cx,cy,r, got {text!r}")
    try:
        cx, cy, r = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three numbers in {text!r}") from None
    return cx, cy, r


def _cell(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected alpha,rho,eta, got {text!r}")
    try:
        return parse_complex(parts[0]), float(parts[1]), float(parts[2])
    except (ValueError, ParseError) as exc:
        raise argparse.ArgumentTypeError(f"bad cell {text!r}: {exc}") from None


def _grid(text):
    try:
        if "x" in text:
            r, a = text.split("x")
            return int(r), int(a)
        n = int(text)
        return n, n
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or RxA, got {text!r}") from None


def _add_metric(p):
    p.add_argument("--N", type=int, default=40, help="series truncation (default 40)")
    p.add_argument("--grid", type=_grid, default=(256, 256), help="polar grid, N or RxA (default 256)")
    p.add_argument("--rigorous", action="store_true", help="pad sampled suprema by Lipschitz slack")


def _cfg(args):
    return MetricConfig(args.N, args.grid[0], args.grid[1], args.rigorous)


def build_parser():
    ap = _Parser(prog="planehomeo", description="Plane homeomorphism toolkit.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dist", help="group metric d(f, g)")
    p.add_argument("-f", required=True)
    p.add_argument("-g", required=True)
    _add_metric(p)

    p = sub.add_parser("certify", help="prove a disk free of fixed points")
    p.add_argument("-f", required=True)
    p.add_argument("--disk", type=_disk, required=True)
    p.add_argument("--spacing", type=float, default=0.1)
    p.add_argument("--max-depth", type=int, default=20)
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("winding", help="winding number of h(z) - z on a circle")
    p.add_argument("-f", required=True)
    p.add_argument("--disk", type=_disk, required=True)
    p.add_argument("--steps", type=int, default=64)
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("separate", help="separation radius at a non-fixed point")
    p.add_argument("-f", required=True)
    p.add_argument("--point", type=parse_complex, required=True)
    p.add_argument("--max-eps", type=float, default=1.0)

    p = sub.add_parser("perturb", help="translate h off its fixed points on a grid")
    p.add_argument("-f", required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--grid-file", required=True)
    _add_metric(p)

    p = sub.add_parser("escape", help="push the support of h out of a 2-cell")
    p.add_argument("-f", required=True)
    p.add_argument("--cell", type=_cell, required=True)
    p.add_argument("--chart", default="id")
    p.add_argument("--eps", type=float, required=True)
    _add_metric(p)

    p = sub.add_parser("converge", help="convergence tables")
    p.add_argument("experiment", choices=("lemma3", "lemma4"))
    p.add_argument("--family", required=True)
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--out", required=True)
    p.add_argument("--set", dest="compact", choices=sorted(COMPACTS), default="circle")
    p.add_argument("--cloud-file")
    _add_metric(p)

    p = sub.add_parser("support", help="sampled support of h on a disk")
    p.add_argument("-f", required=True)
    p.add_argument("--disk", type=_disk, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--resolution", type=float, default=0.05)
    p.add_argument("--out", required=True)
    return ap


def _to_disk(t):
    cx, cy, r = t
    return Disk(complex(cx, cy), r)


def _run(args, out):
    if args.command == "dist":
        rep = dist_report(parse_expr(args.f), parse_expr(args.g), _cfg(args))
        out.write(serialize.dumps({
            "kind": "dist",
            "dist": rep.dist,
            "du_forward": rep.du_forward,
            "du_inverse": rep.du_inverse,
            "truncation_bound": rep.truncation_bound,
            "rigorous": rep.rigorous,
            "N": args.N,
        }))
        return EXIT_OK

    if args.command == "certify":
        cert = certify_fixed_point_free(parse_expr(args.f), _to_disk(args.disk), args.spacing, args.max_depth)
        out.write(serialize.dumps(serialize.certificate_dict(cert)))
        return EXIT_INCONCLUSIVE if args.strict and not cert.conclusive else EXIT_OK

    if args.command == "winding":
        disk = _to_disk(args.disk)
        try:
            res = winding_certificate(parse_expr(args.f), disk, args.steps)
        except InconclusiveError as exc:
            out.write(serialize.dumps({
                "kind": "winding", "verdict": "inconclusive", "reason": exc.reason,
                "witness": serialize.cplx(exc.witness), "boundary": serialize.disk_dict(disk),
            }))
            return EXIT_INCONCLUSIVE if args.strict else EXIT_OK
        out.write(serialize.dumps(serialize.winding_dict(res, disk)))
        return EXIT_OK

    if args.command == "separate":
        eps = separation_radius(parse_expr(args.f), args.point, args.max_eps)
        out.write(serialize.dumps({"kind": "separation", "point": serialize.cplx(args.point), "radius": eps}))
        return EXIT_OK

    if args.command == "perturb":
        grid = serialize.read_cloud(args.grid_file)
        rep = avoid_fixed_points_on_grid(parse_expr(args.f), grid, args.eps, _cfg(args))
        out.write(serialize.dumps(serialize.perturbation_dict(rep)))
        return EXIT_OK

    if args.command == "escape":
        alpha, rho, eta = args.cell
        cell = Cell2(parse_expr(args.chart), alpha, rho, eta)
        rep = nowhere_dense_escape(parse_expr(args.f), cell, args.eps, _cfg(args))
        out.write(serialize.dumps(serialize.escape_dict(rep)))
        return EXIT_OK

    if args.command == "converge":
        cfg = _cfg(args)
        if args.experiment == "lemma3":
            if args.family not in FAMILIES:
                raise UsageError(f"unknown family {args.family!r}; choose from {sorted(FAMILIES)}")
            K = serialize.read_cloud(args.cloud_file) if args.cloud_file else COMPACTS[args.compact]()
            rows = lemma3_experiment(FAMILIES[args.family], K, args.nmax, cfg)
        else:
            if args.family not in PAIRS:
                raise UsageError(f"unknown family pair {args.family!r}; choose from {sorted(PAIRS)}")
            g_fam, h_fam = PAIRS[args.family]
            rows = lemma4_experiment(g_fam, h_fam, args.nmax, cfg)
        with open(args.out, "w", newline="") as fh:
            fh.write(serialize.rows_to_csv(rows))
        out.write(serialize.dumps({
            "kind": "table", "experiment": args.experiment, "family": args.family,
            "rows": len(rows), "out": args.out,
        }))
        return EXIT_OK

    if args.command == "support":
        region = _to_disk(args.disk)
        res = support_sample(parse_expr(args.f), region, args.tol, args.resolution)
        if isinstance(res, EmptySupport):
            out.write(serialize.dumps({"kind": "support", "empty_support": True, "points": 0, "out": None}))
            return EXIT_OK
        serialize.write_cloud(args.out, res)
        out.write(serialize.dumps({
            "kind": "support", "empty_support": False, "points": len(res),
            "net_resolution": res.net_resolution, "out": args.out,
        }))
        return EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")  # pragma: no cover


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except ParseError as exc:
        err.write(serialize.error_line("parse_error", exc.message, offset=exc.offset, expected=list(exc.expected)) + "\n")
    except ExprDomainError as exc:
        err.write(serialize.error_line("domain_error", exc.message, offset=exc.offset) + "\n")
    except UsageError as exc:
        err.write(serialize.error_line("usage_error", str(exc)) + "\n")
    except PlaneHomeoError as exc:
        err.write(serialize.error_line(type(exc).__name__, str(exc)) + "\n")
    except (OSError, ValueError) as exc:
        err.write(serialize.error_line(type(exc).__name__, str(exc)) + "\n")
    return EXIT_ERROR


def entry():
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entry()
