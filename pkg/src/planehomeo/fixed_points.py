"""Certificates about fixed points of plane homeomorphisms.

* existence: a nonzero winding number of ``z -> h(z) - z`` around a circle
  forces a zero of the displacement, i.e. a fixed point, inside the disk;
* absence on a disk: grid evidence lifted to the continuum with a Lipschitz
  bound (see :func:`certify_fixed_point_free`);
* separation disks ``D(c; eps)`` with ``h[D(c; eps)]`` disjoint from ``D(c; eps)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _accel
from .errors import ConvergenceError, DomainError, InconclusiveError, NoBoundError
from .homeo import DEFAULT_TOL, Disk, evaluate, lipschitz_bound

WINDING_TOL = 1e-9
MAX_WINDING_STEPS = 1 << 20


@dataclass(frozen=True)
class FixedPointExists:
    winding: int
    boundary: Disk

    def __post_init__(self):
        if self.winding == 0:
            raise DomainError("an existence certificate needs a nonzero winding number")


@dataclass(frozen=True)
class FixedPointFree:
    region: Disk
    margin: float

    def __post_init__(self):
        if not self.margin > 0:
            raise DomainError("a fixed-point-free certificate needs a positive margin")


@dataclass(frozen=True)
class Inconclusive:
    reason: str


@dataclass(frozen=True)
class Certificate:
    verdict: FixedPointExists | FixedPointFree | Inconclusive
    witness: complex | None = None

    @property
    def kind(self):
        return {FixedPointExists: "exists", FixedPointFree: "free", Inconclusive: "inconclusive"}[type(self.verdict)]

    @property
    def conclusive(self):
        return not isinstance(self.verdict, Inconclusive)


@dataclass(frozen=True)
class WindingResult:
    index: int
    min_boundary_displacement: float
    refinements: int
    steps: int = 0


def min_displacement(h, K):
    """``min_{p in K} |h(p) - p|`` and a point attaining it."""
    pts = K.points if hasattr(K, "points") else np.atleast_1d(np.asarray(K, dtype=np.complex128))
    m, i = _accel.argmin_abs_diff(evaluate(h, pts), pts)
    return m, complex(pts[i])


def winding_certificate(h, disk, steps=64, tol=WINDING_TOL, max_steps=MAX_WINDING_STEPS):
    """Winding number of ``h(z) - z`` along the boundary circle of ``disk``.

    The boundary sampling is doubled until every argument increment is below
    pi/2 in magnitude. Raises :class:`~planehomeo.errors.InconclusiveError` when the
    displacement nearly vanishes on the boundary or the cap is reached.
    """
    if steps < 16:
        raise DomainError("winding computation needs at least 16 boundary steps")
    refinements = 0
    while True:
        z = disk.boundary(steps)
        w = evaluate(h, z) - z
        mags = np.abs(w)
        k = int(np.argmin(mags))
        if mags[k] < tol:
            raise InconclusiveError("displacement vanishes on the boundary circle", complex(z[k]))
        total, worst = _accel.winding_sum(w)
        if worst < math.pi / 2:
            break
        if steps * 2 > max_steps:
            raise InconclusiveError(f"argument increments still >= pi/2 at {steps} steps", complex(z[k]))
        steps *= 2
        refinements += 1
    index = int(round(total / (2.0 * math.pi)))
    if abs(total - 2.0 * math.pi * index) > 1e-6:
        raise InconclusiveError("total argument change is not a multiple of 2 pi")
    return WindingResult(index, float(mags[k]), refinements, steps)


def fixed_point_certificate(h, disk, steps=64):
    """Existence certificate from the winding number, or Inconclusive."""
    try:
        res = winding_certificate(h, disk, steps)
    except InconclusiveError as exc:
        return Certificate(Inconclusive(exc.reason), exc.witness)
    if res.index == 0:
        return Certificate(Inconclusive("winding number 0 on the boundary"))
    return Certificate(FixedPointExists(res.index, disk))


def certify_fixed_point_free(h, region, spacing, max_depth=20, tol=DEFAULT_TOL, max_cells=20_000_000):
    """Try to prove ``h(z) != z`` for every ``z`` in the closed disk ``region``.

    The region is covered by square cells of half-diagonal ``s <= spacing``.
    With ``L`` a Lipschitz bound for ``h`` on ``D(c; R + s)``, a cell with
    center ``p`` is certified when ``|h(p) - p| > (L + 1) s``, because for any
    ``z`` in the cell ``|h(z) - z| >= |h(p) - p| - L|z - p| - |z - p|``.
    Cells that fail are split into four (at most ``max_depth`` times). The
    margin is the least slack ``|h(p) - p| - (L + 1) s`` over the final cells.
    """
    if not spacing > 0:
        raise DomainError("spacing must be positive")
    c, R = region.center, region.radius
    half = spacing * (1.0 - 1e-6)
    try:
        L = lipschitz_bound(h, Disk(c, R + half))
    except NoBoundError:
        return Certificate(Inconclusive("no modulus of continuity"))
    side = half * math.sqrt(2.0)
    k = int(math.ceil(R / side))
    idx = np.arange(-k, k + 1) * side
    X, Y = np.meshgrid(idx, idx, indexing="ij")
    centers = c + (X + 1j * Y).ravel()
    centers = centers[np.abs(centers - c) <= R + half]

    margin = math.inf
    best_d, best_p = math.inf, None
    evaluated = 0
    for depth in range(max_depth + 1):
        d = np.abs(evaluate(h, centers) - centers)
        evaluated += centers.size
        i = int(np.argmin(d))
        if d[i] < best_d:
            best_d, best_p = float(d[i]), complex(centers[i])
        if best_d <= tol:
            return Certificate(Inconclusive(f"grid point is numerically fixed (|h(p) - p| = {best_d:.3g})"), best_p)
        slack = d - (L + 1.0) * half
        ok = slack > 0
        if np.any(ok):
            margin = min(margin, float(slack[ok].min()))
        bad = centers[~ok]
        if bad.size == 0:
            return Certificate(FixedPointFree(region, margin), best_p)
        if depth == max_depth or evaluated + 4 * bad.size > max_cells:
            return Certificate(
                Inconclusive(f"{bad.size} cells uncertified at half-diagonal {half:.3g}"), best_p
            )
        q = side / 4.0
        offsets = np.array([q + 1j * q, q - 1j * q, -q + 1j * q, -q - 1j * q])
        half /= 2.0
        side /= 2.0
        centers = (bad[:, None] + offsets[None, :]).ravel()
        centers = centers[np.abs(centers - c) <= R + half]
        if centers.size == 0:
            # every child cell lies outside the region
            return Certificate(FixedPointFree(region, margin if math.isfinite(margin) else best_d), best_p)
    raise AssertionError("unreachable")


def separation_radius(h, c, max_eps, tol=DEFAULT_TOL, max_halvings=60):
    """A radius ``eps`` with ``h[D(c; eps)]`` disjoint from ``D(c; eps)``.

    Starts at ``min(max_eps, |h(c) - c| / 3)`` and halves until
    ``|h(c) - c| > eps (L + 1)`` with ``L`` a Lipschitz bound on the closed
    disk: then ``h[D(c; eps)]`` lies in ``D(h(c); L eps)``, which misses
    ``D(c; eps)``.
    """
    c = complex(c)
    gap = abs(evaluate(h, c) - c)
    if not gap > tol:
        raise DomainError(f"c = {c!r} is (numerically) fixed by h")
    if not max_eps > 0:
        raise DomainError("max_eps must be positive")
    eps = min(max_eps, gap / 3.0)
    for _ in range(max_halvings):
        L = lipschitz_bound(h, Disk(c, eps))
        if gap > eps * (L + 1.0):
            return eps
        eps /= 2.0
    raise ConvergenceError("no separating radius found within the halving cap")
