"""Finite point clouds standing in for compact subsets of the plane."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _accel
from .errors import DomainError, NoBoundError
from .homeo import Disk, evaluate, lipschitz_bound


@dataclass(frozen=True, eq=False)
class CompactSet:
    """A nonempty finite cloud with a declared net resolution.

    ``net_resolution`` is the fineness of the cloud as an epsilon-net of the
    compact it represents; ``None`` means unknown.
    """

    points: np.ndarray
    net_resolution: float | None = None

    def __post_init__(self):
        pts = np.atleast_1d(np.asarray(self.points, dtype=np.complex128)).ravel()
        if pts.size == 0:
            raise DomainError("a compact set needs at least one point")
        if not np.all(np.isfinite(pts)):
            raise DomainError("compact set coordinates must be finite")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return self.points.size

    def __eq__(self, other):
        if not isinstance(other, CompactSet):
            return NotImplemented
        return np.array_equal(self.points, other.points) and self.net_resolution == other.net_resolution

    def enclosing_disk(self):
        lo = complex(self.points.real.min(), self.points.imag.min())
        hi = complex(self.points.real.max(), self.points.imag.max())
        c = (lo + hi) / 2
        r = float(np.abs(self.points - c).max())
        return Disk(c, max(r, 1e-12))


@dataclass(frozen=True)
class EmptySupport:
    """Returned by :func:`support_sample` when no grid point moves."""

    region: Disk
    tol: float
    samples: int = field(default=0)


# --------------------------------------------------------------------- builders

def singleton(z):
    return CompactSet(np.array([complex(z)]), 0.0)


def circle_net(center=0.0, radius=1.0, n=360):
    t = 2.0 * np.pi * np.arange(n) / n
    pts = center + radius * np.exp(1j * t)
    return CompactSet(pts, radius * math.sin(math.pi / n))


def square_grid(lo, hi, n):
    """``n x n`` lattice over the square ``[lo, hi]^2`` (real and imaginary parts)."""
    xs = np.linspace(lo, hi, n)
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    step = (hi - lo) / (n - 1) if n > 1 else 0.0
    return CompactSet((X + 1j * Y).ravel(), step / math.sqrt(2.0))


def lattice_in_disk(disk, spacing):
    """Points of the lattice ``center + spacing * (Z + iZ)`` lying in ``disk``."""
    if not spacing > 0:
        raise DomainError("lattice spacing must be positive")
    k = int(math.floor(disk.radius / spacing))
    idx = np.arange(-k, k + 1) * spacing
    X, Y = np.meshgrid(idx, idx, indexing="ij")
    pts = disk.center + (X + 1j * Y).ravel()
    return pts[disk.contains(pts)]


# ------------------------------------------------------------------- operations

def hausdorff(K, L):
    """Exact Hausdorff distance between two point clouds."""
    return max(_accel.directed_hausdorff(K.points, L.points), _accel.directed_hausdorff(L.points, K.points))


def directed(K, L):
    """``sup_{p in K} inf_{q in L} |p - q|``."""
    return _accel.directed_hausdorff(K.points, L.points)


def image(h, K):
    """``h[K]`` as a cloud; the net resolution is rescaled by a Lipschitz bound when one exists."""
    pts = evaluate(h, K.points)
    res = None
    if K.net_resolution is not None:
        try:
            L = lipschitz_bound(h, K.enclosing_disk())
            res = K.net_resolution * L
        except NoBoundError:
            res = None
    return CompactSet(pts, res)


def in_neighborhood(K, L, eps, closed=False):
    """True iff every point of ``K`` lies in ``B(L; eps)`` (the closed ball if ``closed``)."""
    if not eps > 0:
        raise DomainError("neighborhood radius must be positive")
    d = _accel.directed_hausdorff(K.points, L.points)
    return bool(d <= eps) if closed else bool(d < eps)


@dataclass
class LimitReport:
    distances: list
    liminf_ok: bool
    limsup_ok: bool
    liminf_from: int | None
    limsup_from: int | None
    converged: bool
    tol: float
    approximate: bool = True

    def rows(self):
        return [(n, d) for n, d in enumerate(self.distances)]


def _tail_start(flags):
    """First index from which ``flags`` holds through the end, or None."""
    start = None
    for i in range(len(flags) - 1, -1, -1):
        if not flags[i]:
            break
        start = i
    return start


def limit_test(Ks, K, tol):
    """Finite-sequence surrogate for topological liminf/limsup/limit.

    ``for all large n`` is read as ``from some index through the end of the
    given sequence``; the report is flagged approximate.
    """
    Ks = list(Ks)
    if not Ks:
        raise DomainError("limit_test needs a nonempty sequence")
    dists, lower, upper = [], [], []
    for Kn in Ks:
        to_kn = directed(K, Kn)
        from_kn = directed(Kn, K)
        dists.append(max(to_kn, from_kn))
        lower.append(to_kn <= tol)
        upper.append(from_kn <= tol)
    li = _tail_start(lower)
    ls = _tail_start(upper)
    return LimitReport(
        distances=dists,
        liminf_ok=li is not None,
        limsup_ok=ls is not None,
        liminf_from=li,
        limsup_from=ls,
        converged=dists[-1] <= tol,
        tol=tol,
    )


def support_sample(h, region, tol, resolution):
    """Grid points of ``region`` moved by more than ``tol``: a sampled ``supp(h)``."""
    if not (tol > 0 and resolution > 0):
        raise DomainError("tol and resolution must be positive")
    pts = lattice_in_disk(region, resolution)
    if pts.size == 0:
        return EmptySupport(region, tol, 0)
    moved = np.abs(evaluate(h, pts) - pts) > tol
    if not np.any(moved):
        return EmptySupport(region, tol, int(pts.size))
    return CompactSet(pts[moved], resolution / math.sqrt(2.0))
