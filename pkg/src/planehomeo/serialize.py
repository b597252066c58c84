"""JSON, CSV and point-cloud formats used by the command line.

Complex numbers are written as ``{"re": x, "im": y}``. Homeomorphisms are
written in the expression syntax of :mod:`planehomeo.grammar`. JSON output
uses sorted keys so reruns are byte-identical.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json

import numpy as np

from .compact import CompactSet
from .errors import DomainError
from .fixed_points import Certificate, FixedPointExists, FixedPointFree, Inconclusive, WindingResult
from .grammar import NotExpressible, to_text

SCHEMA_VERSION = 1


def cplx(z):
    if z is None:
        return None
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def disk_dict(d):
    return {"center": cplx(d.center), "radius": d.radius, "closed": d.closed}


def expr_text(h):
    try:
        return to_text(h)
    except NotExpressible:
        return repr(h)


def certificate_dict(cert: Certificate):
    v = cert.verdict
    out = {"kind": "certificate", "verdict": cert.kind, "witness": cplx(cert.witness)}
    if isinstance(v, FixedPointExists):
        out.update(winding=v.winding, boundary=disk_dict(v.boundary))
    elif isinstance(v, FixedPointFree):
        out.update(region=disk_dict(v.region), margin=v.margin)
    elif isinstance(v, Inconclusive):
        out.update(reason=v.reason)
    return out


def winding_dict(res: WindingResult, disk):
    return {
        "kind": "winding",
        "index": res.index,
        "min_boundary_displacement": res.min_boundary_displacement,
        "refinements": res.refinements,
        "steps": res.steps,
        "boundary": disk_dict(disk),
    }


def perturbation_dict(rep):
    return {
        "kind": "perturbation",
        "original": expr_text(rep.original),
        "perturbed": expr_text(rep.perturbed),
        "translation": cplx(rep.translation),
        "dist_achieved": rep.dist_achieved,
        "grid_min_displacement": rep.grid_min_displacement,
        "grid": {"size": len(rep.grid), "net_resolution": rep.grid.net_resolution},
    }


def escape_dict(rep):
    c = rep.cell
    return {
        "kind": "escape",
        "cell": {"chart": expr_text(c.chart), "alpha": cplx(c.alpha), "rho": c.rho, "eta": c.eta},
        "delta": rep.delta,
        "composite": expr_text(rep.composite),
        "dist_to_original": rep.dist_to_original,
        "escape_witness": cplx(rep.escape_witness),
        "witness_displacement": rep.witness_displacement,
    }


def dumps(obj):
    return json.dumps({"schema": SCHEMA_VERSION, **obj}, sort_keys=True, indent=2, allow_nan=False) + "\n"


def error_line(kind, message, **extra):
    """A single-line machine-readable error record."""
    return json.dumps({"error": kind, "message": message, **extra}, sort_keys=True, allow_nan=False)


# ------------------------------------------------------------------ CSV tables

def rows_to_csv(rows):
    if not rows:
        return ""
    fields = [f.name for f in dataclasses.fields(rows[0])]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in dataclasses.astuple(r)])
    return buf.getvalue()


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


# ----------------------------------------------------------------- point clouds

def format_cloud(K):
    return "".join(f"{z.real!r} {z.imag!r}\n" for z in K.points.tolist())


def write_cloud(path, K):
    with open(path, "w") as fh:
        fh.write(format_cloud(K))


def parse_cloud(text, net_resolution=None):
    pts = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise DomainError(f"cloud line {lineno}: expected 're im', got {line!r}")
        try:
            pts.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            raise DomainError(f"cloud line {lineno}: not a pair of decimals: {line!r}") from None
    return CompactSet(np.array(pts, dtype=np.complex128), net_resolution)


def read_cloud(path, net_resolution=None):
    with open(path) as fh:
        return parse_cloud(fh.read(), net_resolution)
