"""Finite-stage constructions behind the genericity results.

Each routine builds an explicit nearby homeomorphism and checks, on finite
data, the property that the corresponding category argument is about:

* :func:`avoid_fixed_points_on_grid` - a translation ``tau_a o h`` close to
  ``h`` with no fixed point on a given grid;
* :func:`nowhere_dense_escape` - ``h_delta o h`` close to ``h`` whose support
  leaves the 2-cell ``F``;
* :func:`lemma3_experiment`, :func:`lemma4_experiment` - convergence tables
  for images of compacts and for composition.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _accel
from .compact import CompactSet, circle_net, hausdorff, image, singleton
from .errors import ConvergenceError, DomainError
from .fixed_points import min_displacement
from .homeo import (
    DEFAULT_TOL,
    Cell2,
    CellBump,
    Compose,
    Homeo,
    Identity,
    Inverse,
    Rotation,
    Scaling,
    Translation,
    evaluate,
)
from .metric import MetricConfig, dist

# base direction for the translation vector; tried first, then rotated
RAY_ANGLE = math.pi / 7
RAY_TURN = math.pi / 11
RAY_TRIES = 16


@dataclass(frozen=True, eq=False)
class PerturbationReport:
    original: Homeo
    perturbed: Homeo
    translation: complex
    dist_achieved: float
    grid_min_displacement: float
    grid: CompactSet


@dataclass(frozen=True, eq=False)
class EscapeReport:
    cell: Cell2
    delta: float
    composite: Homeo
    dist_to_original: float
    escape_witness: complex
    witness_displacement: float


def _pick_translation(bad, size):
    for j in range(RAY_TRIES):
        a = size * cmath.exp(1j * (RAY_ANGLE + j * RAY_TURN))
        gap = float(_accel.nearest_distances(np.array([a]), bad)[0]) if bad.size else math.inf
        if gap >= size / 2:
            return a
    return None


def avoid_fixed_points_on_grid(h, C, eps, cfg=MetricConfig(), max_halvings=60):
    """Find ``tau_a o h`` within ``eps`` of ``h`` with no fixed point on ``C``.

    ``tau_a o h`` fixes ``c`` exactly when ``a = c - h(c)``, so ``a`` is picked
    at distance at least ``|a| / 2`` from that finite bad set (and from 0),
    then shrunk by halving until the metric drops below ``eps``.
    """
    if not eps > 0:
        raise DomainError("eps must be positive")
    pts = C.points
    bad = pts - evaluate(h, pts)
    size = eps
    for _ in range(max_halvings):
        a = _pick_translation(bad, size)
        if a is not None:
            g = Compose(Translation(a), h)
            d = dist(g, h, cfg)
            if d < eps:
                m, _ = min_displacement(g, C)
                if m > 0:
                    return PerturbationReport(h, g, a, d, m, C)
        size /= 2
    raise ConvergenceError("metric did not shrink")


def _ring_points(cell, n):
    t = 2.0 * np.pi * (np.arange(n) + 0.5) / n
    r = cell.rho + 2.0 * cell.eta * (np.arange(n) % 7 + 1) / 7.0
    return evaluate(cell.chart, cell.alpha + r * np.exp(1j * t))


def nowhere_dense_escape(h, cell, eps, cfg=MetricConfig(), max_halvings=60, tol=DEFAULT_TOL, spot_samples=256):
    """Find ``h_delta o h`` within ``eps`` of ``h`` moving a point outside ``F``.

    ``h`` is expected to have support inside ``F = k[closed D(alpha; rho)]``;
    this is spot-checked on a ring of the cell's margin.
    """
    if not eps > 0:
        raise DomainError("eps must be positive")
    ring = _ring_points(cell, spot_samples)
    moved = float(np.abs(evaluate(h, ring) - ring).max())
    if moved > tol:
        raise DomainError(f"h moves points of the cell margin (by up to {moved:.3g}); its support is not inside F")
    delta = cell.eta
    for _ in range(max_halvings):
        composite = Compose(CellBump(cell, delta), h)
        d = dist(composite, h, cfg)
        if d < eps:
            break
        delta /= 2
    else:
        raise ConvergenceError("metric did not shrink")
    w = cell.alpha + (cell.rho + delta / 2) * cmath.exp(1j * RAY_ANGLE)
    z = evaluate(cell.chart, w)
    if not abs(cell.chart_coords(z) - cell.alpha) > cell.rho:
        raise ConvergenceError("escape witness fell inside F")
    shift = abs(evaluate(composite, z) - z)
    if not shift > 0:
        raise ConvergenceError("escape witness is not moved")
    return EscapeReport(cell, delta, composite, d, z, shift)


# ----------------------------------------------------------- convergence tables

@dataclass(frozen=True)
class Family:
    """A sequence ``n -> h_n`` (n >= 1) converging to ``limit`` by construction."""

    name: str
    member: Callable[[int], Homeo]
    limit: Homeo


def _standard_cell():
    return Cell2.standard()


FAMILIES = {
    "translate": Family("translate", lambda n: Translation(1.0 / n), Identity()),
    "dyadic": Family("dyadic", lambda n: Translation(2.0 ** -n), Identity()),
    "translate-scale": Family(
        "translate-scale", lambda n: Compose(Translation(1.0 / n), Scaling(2.0)), Scaling(2.0)
    ),
    "rotate": Family("rotate", lambda n: Rotation(1.0 / n), Identity()),
    "bump": Family("bump", lambda n: CellBump(_standard_cell(), 0.1 / n), Identity()),
    "constant": Family("constant", lambda n: Scaling(2.0), Scaling(2.0)),
}

PAIRS = {
    "translations": (FAMILIES["translate"], Family("translate-i", lambda n: Translation(1j / n), Identity())),
    "scale-rotate": (FAMILIES["translate-scale"], FAMILIES["rotate"]),
    "dyadic-bump": (FAMILIES["dyadic"], FAMILIES["bump"]),
    "constant": (FAMILIES["constant"], Family("constant-rotate", lambda n: Rotation(1.0), Rotation(1.0))),
}

COMPACTS = {
    "origin": lambda: singleton(0.0),
    "circle": lambda: circle_net(0.0, 1.0, 360),
}


@dataclass(frozen=True)
class Lemma3Row:
    n: int
    dist: float
    hausdorff: float


@dataclass(frozen=True)
class Lemma4Row:
    n: int
    dist_g: float
    dist_h: float
    dist_composite: float


def lemma3_experiment(family, K, n_max, cfg=MetricConfig()):
    """Rows ``(n, d(h_n, h), Hausdorff(h_n[K], h[K]))`` for ``n = 1..n_max``."""
    target = image(family.limit, K)
    rows = []
    for n in range(1, n_max + 1):
        hn = family.member(n)
        rows.append(Lemma3Row(n, dist(hn, family.limit, cfg), hausdorff(image(hn, K), target)))
    return rows


def lemma4_experiment(g_family, h_family, n_max, cfg=MetricConfig()):
    """Rows ``(n, d(g_n, g), d(h_n, h), d(g_n o h_n, g o h))``."""
    g, h = g_family.limit, h_family.limit
    gh = Compose(g, h)
    rows = []
    for n in range(1, n_max + 1):
        gn, hn = g_family.member(n), h_family.member(n)
        rows.append(Lemma4Row(n, dist(gn, g, cfg), dist(hn, h, cfg), dist(Compose(gn, hn), gh, cfg)))
    return rows


def nonincreasing(values, slack=1e-9):
    return all(b <= a + slack for a, b in zip(values, values[1:]))


# --------------------------------------------------------------------- conjugacy

def conjugate(phi, g):
    """``phi o g o phi^-1``."""
    return Compose(phi, Compose(g, Inverse(phi)))


def conjugacy_witness(g, phi, C):
    """Minimal displacement of ``phi o g o phi^-1`` on the grid ``phi[C]``.

    ``phi o g o phi^-1`` fixes ``phi(z)`` iff ``g`` fixes ``z``.
    """
    return min_displacement(conjugate(phi, g), image(phi, C))
