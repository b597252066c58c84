"""Symbolic plane homeomorphisms with closed-form inverses.

A :class:`Homeo` is a finite expression tree. Leaves are primitives
(identity, translation, rotation, scaling, complex conjugation); inner nodes
are composition, inversion, transport of a disk map to the plane through
``u(z) = z / (1 - |z|)``, and the localized bump ``h_delta`` built on a
closed 2-cell. Every node knows its own inverse, so ``h^-1`` is evaluated
exactly rather than by numerical root finding.

Evaluation is vectorized: ``evaluate(h, z)`` accepts a scalar or any complex
array and applies the tree elementwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import _accel
from .errors import DomainError, MalformedTreeError, NoBoundError, OverflowGuardError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise DomainError(f"disk radius must be positive and finite, got {self.radius!r}")
        if not cmath.isfinite(self.center):
            raise DomainError("disk center must be finite")

    def contains(self, z):
        d = np.abs(np.asarray(z) - self.center)
        return d <= self.radius if self.closed else d < self.radius

    def boundary(self, steps):
        t = 2.0 * np.pi * np.arange(steps) / steps
        return self.center + self.radius * np.exp(1j * t)


# ------------------------------------------------------------------ plane maps

class Homeo:
    """A plane homeomorphism given as an expression tree."""

    def _fwd(self, z):
        raise NotImplementedError

    def _inv(self, w):
        raise NotImplementedError

    def __call__(self, z):
        return evaluate(self, z)

    def __matmul__(self, other):
        return Compose(self, other)


class Primitive(Homeo):
    pass


@dataclass(frozen=True)
class Identity(Primitive):
    def _fwd(self, z):
        return z

    def _inv(self, w):
        return w


@dataclass(frozen=True)
class Translation(Primitive):
    a: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        if not cmath.isfinite(self.a):
            raise DomainError("translation vector must be finite")

    def _fwd(self, z):
        return z + self.a

    def _inv(self, w):
        return w - self.a


@dataclass(frozen=True)
class Rotation(Primitive):
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta))
        if not math.isfinite(self.theta):
            raise DomainError("rotation angle must be finite")

    def _fwd(self, z):
        return z * cmath.exp(1j * self.theta)

    def _inv(self, w):
        return w * cmath.exp(-1j * self.theta)


@dataclass(frozen=True)
class Scaling(Primitive):
    s: float

    def __post_init__(self):
        object.__setattr__(self, "s", float(self.s))
        if not (self.s > 0 and math.isfinite(self.s)):
            raise DomainError(f"scale factor must be positive and finite, got {self.s!r}")

    def _fwd(self, z):
        return z * self.s

    def _inv(self, w):
        return w / self.s


@dataclass(frozen=True)
class Conjugation(Primitive):
    def _fwd(self, z):
        return np.conj(z)

    def _inv(self, w):
        return np.conj(w)


@dataclass(frozen=True)
class Compose(Homeo):
    """``left o right``: ``right`` is applied first."""

    left: Homeo
    right: Homeo

    def _fwd(self, z):
        return self.left._fwd(self.right._fwd(z))

    def _inv(self, w):
        return self.right._inv(self.left._inv(w))


@dataclass(frozen=True)
class Inverse(Homeo):
    child: Homeo

    def _fwd(self, z):
        return self.child._inv(z)

    def _inv(self, w):
        return self.child._fwd(w)


def plane_to_disk(w):
    """``u^-1(w) = w / (1 + |w|)``, a homeomorphism of C onto D(0;1)."""
    w = np.asarray(w, dtype=np.complex128)
    return w / (1.0 + np.abs(w))


def disk_to_plane(z):
    """``u(z) = z / (1 - |z|)`` on the open unit disk."""
    z = np.asarray(z, dtype=np.complex128)
    m = np.abs(z)
    if np.any(~(m < 1.0)):
        raise OverflowGuardError("disk point reached modulus >= 1 before transport to the plane")
    return z / (1.0 - m)


@dataclass(frozen=True)
class DiskConjugate(Homeo):
    """The plane map ``u o psi o u^-1`` for a disk map ``psi``."""

    disk_map: DiskHomeo

    def _fwd(self, z):
        return disk_to_plane(self.disk_map._fwd(plane_to_disk(z)))

    def _inv(self, w):
        return disk_to_plane(self.disk_map._inv(plane_to_disk(w)))


# ------------------------------------------------------------------- disk maps

class DiskHomeo:
    """A homeomorphism of the open unit disk, as an expression tree."""

    def _fwd(self, z):
        raise NotImplementedError

    def _inv(self, w):
        raise NotImplementedError

    def __call__(self, z):
        return evaluate(self, z)


@dataclass(frozen=True)
class DiskIdentity(DiskHomeo):
    def _fwd(self, z):
        return z

    def _inv(self, w):
        return w


def _radial_apply(z, alpha, rho, delta, profile):
    z = np.asarray(z, dtype=np.complex128)
    if delta == 0.0:
        return z
    d = z - alpha
    r = np.abs(d)
    rn = profile(r, rho, delta)
    scale = np.divide(rn, r, out=np.ones_like(r), where=r > 0)
    return np.where(r >= rho + 2.0 * delta, z, alpha + d * scale)


@dataclass(frozen=True)
class RadialBump(DiskHomeo):
    """Radial push of the disk ``D(alpha; rho)`` out to radius ``rho + delta``.

    Outside ``D(alpha; rho + 2 delta)`` the map is the identity, so it also
    makes sense as a map of the whole plane.
    """

    alpha: complex
    rho: float
    delta: float
    eta: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        for name in ("rho", "delta", "eta"):
            object.__setattr__(self, name, float(getattr(self, name)))
        check_cell_params(self.alpha, self.rho, self.eta)
        if not (0.0 <= self.delta <= self.eta):
            raise DomainError(f"bump delta must lie in [0, eta={self.eta!r}], got {self.delta!r}")

    def _fwd(self, z):
        return _radial_apply(z, self.alpha, self.rho, self.delta, _accel.radial_forward)

    def _inv(self, w):
        return _radial_apply(w, self.alpha, self.rho, self.delta, _accel.radial_inverse)

    def profile(self, r):
        return _accel.radial_forward(r, self.rho, self.delta)

    def inverse_profile(self, r):
        return _accel.radial_inverse(r, self.rho, self.delta)


@dataclass(frozen=True)
class DiskCompose(DiskHomeo):
    left: DiskHomeo
    right: DiskHomeo

    def _fwd(self, z):
        return self.left._fwd(self.right._fwd(z))

    def _inv(self, w):
        return self.right._inv(self.left._inv(w))


@dataclass(frozen=True)
class DiskInverse(DiskHomeo):
    child: DiskHomeo

    def _fwd(self, z):
        return self.child._inv(z)

    def _inv(self, w):
        return self.child._fwd(w)


# ---------------------------------------------------------------------- 2-cells

def check_cell_params(alpha, rho, eta):
    if not (rho > 0 and eta > 0):
        raise DomainError(f"need rho > 0 and eta > 0, got rho={rho!r}, eta={eta!r}")
    if not abs(alpha) + rho + 2.0 * eta < 1.0:
        raise DomainError(
            f"closed disk D(alpha; rho + 2 eta) must sit inside D(0;1): "
            f"|alpha| + rho + 2 eta = {abs(alpha) + rho + 2.0 * eta!r} >= 1"
        )


@dataclass(frozen=True)
class Cell2:
    """A closed 2-cell ``F = k[closed D(alpha; rho)]`` with margin ``eta``."""

    chart: Homeo
    alpha: complex
    rho: float
    eta: float
    samples: int = field(default=64, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "eta", float(self.eta))
        check_cell_params(self.alpha, self.rho, self.eta)
        rng = np.random.default_rng(0)
        n = self.samples
        pts = self.alpha + (self.rho + 2 * self.eta) * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
        back = evaluate_inverse(self.chart, evaluate(self.chart, pts))
        err = float(np.abs(back - pts).max())
        if not err <= DEFAULT_TOL:
            raise DomainError(f"chart does not round-trip on the cell (max error {err:.3g})")

    @classmethod
    def standard(cls, alpha=0.0, rho=0.25, eta=0.1):
        return cls(Identity(), alpha, rho, eta)

    def chart_coords(self, p):
        return evaluate_inverse(self.chart, p)

    def in_cell(self, p, radius=None):
        """Membership in ``k[closed D(alpha; radius)]`` (default ``radius = rho``)."""
        radius = self.rho if radius is None else radius
        return np.abs(self.chart_coords(p) - self.alpha) <= radius


@dataclass(frozen=True)
class CellBump(Homeo):
    """``h_delta``: ``k o psi_delta o k^-1`` on ``k[closed D(alpha; rho + 2 delta)]``, identity elsewhere."""

    cell: Cell2
    delta: float

    def __post_init__(self):
        object.__setattr__(self, "delta", float(self.delta))
        if not (0.0 <= self.delta <= self.cell.eta):
            raise DomainError(f"bump delta must lie in [0, eta={self.cell.eta!r}], got {self.delta!r}")

    @property
    def bump(self):
        c = self.cell
        return RadialBump(c.alpha, c.rho, self.delta, c.eta)

    def _apply(self, p, forward):
        p = np.asarray(p, dtype=np.complex128)
        if self.delta == 0.0:
            return p
        c = self.cell
        w = c.chart._inv(p)
        inside = np.abs(w - c.alpha) <= c.rho + 2.0 * self.delta
        if not np.any(inside):
            return p
        out = p.copy()
        bump = self.bump
        moved = bump._fwd(w[inside]) if forward else bump._inv(w[inside])
        out[inside] = c.chart._fwd(moved)
        return out

    def _fwd(self, z):
        return self._apply(z, True)

    def _inv(self, w):
        return self._apply(w, False)


# ----------------------------------------------------------------- operations

_PLANE_LEAVES = (Identity, Translation, Rotation, Scaling, Conjugation, CellBump)


def validate(h):
    """Raise :class:`MalformedTreeError` unless ``h`` is a well-formed plane or disk tree."""
    if isinstance(h, DiskHomeo):
        _check_disk(h)
    else:
        _check_plane(h)
    return h


def _check_plane(h):
    if isinstance(h, _PLANE_LEAVES):
        return
    if isinstance(h, Compose):
        _check_plane(h.left)
        _check_plane(h.right)
    elif isinstance(h, Inverse):
        _check_plane(h.child)
    elif isinstance(h, DiskConjugate):
        _check_disk(h.disk_map)
    else:
        raise MalformedTreeError(f"not a plane map node: {h!r}")


def _check_disk(h):
    if isinstance(h, (DiskIdentity, RadialBump)):
        return
    if isinstance(h, DiskCompose):
        _check_disk(h.left)
        _check_disk(h.right)
    elif isinstance(h, DiskInverse):
        _check_disk(h.child)
    else:
        raise MalformedTreeError(f"not a disk map node: {h!r}")


def _as_input(z):
    arr = np.asarray(z, dtype=np.complex128)
    return arr, arr.ndim == 0


def evaluate(h, z):
    """``h(z)`` for a plane or disk map; scalars in, scalars out."""
    validate(h)
    arr, scalar = _as_input(z)
    out = np.asarray(h._fwd(arr), dtype=np.complex128)
    return complex(out) if scalar else out


def evaluate_inverse(h, w):
    """``h^-1(w)``, using the closed-form inverse of every node."""
    validate(h)
    arr, scalar = _as_input(w)
    out = np.asarray(h._inv(arr), dtype=np.complex128)
    return complex(out) if scalar else out


def compose(g, h):
    return Compose(g, h)


def inverse(h):
    if isinstance(h, DiskHomeo):
        return DiskInverse(h)
    return Inverse(h)


def plane_from_disk(psi):
    """Transport a disk homeomorphism to the plane: ``u o psi o u^-1``."""
    return DiskConjugate(psi)


def cell_bump(cell, delta):
    return CellBump(cell, delta)


def translate(a):
    return Translation(a)


# ----------------------------------------------------------- Lipschitz bounds

def _meets(disk, center, radius):
    return abs(disk.center - center) - disk.radius <= radius


def _bump_lip(alpha, rho, delta, disk, inv):
    if delta == 0.0 or not _meets(disk, alpha, rho + 2.0 * delta):
        return 1.0, disk
    if not inv:
        lip = (rho + delta) / rho
        c_img = complex(_radial_apply(disk.center, alpha, rho, delta, _accel.radial_forward))
    else:
        inner = abs(disk.center - alpha) + disk.radius < rho + delta
        lip = rho / (rho + delta) if inner else 2.0
        c_img = complex(_radial_apply(disk.center, alpha, rho, delta, _accel.radial_inverse))
    # |psi(z) - z| <= delta, so the image also sits in D(center; R + delta)
    if lip * disk.radius <= disk.radius + delta:
        return lip, Disk(c_img, lip * disk.radius)
    return lip, Disk(disk.center, disk.radius + delta)


def _lip(node, disk, inv):
    """Lipschitz constant of ``node`` (or its inverse) on ``disk`` and an image enclosure."""
    if isinstance(node, (Identity, DiskIdentity)):
        return 1.0, disk
    if isinstance(node, Translation):
        a = -node.a if inv else node.a
        return 1.0, Disk(disk.center + a, disk.radius)
    if isinstance(node, Rotation):
        t = -node.theta if inv else node.theta
        return 1.0, Disk(disk.center * cmath.exp(1j * t), disk.radius)
    if isinstance(node, Scaling):
        s = 1.0 / node.s if inv else node.s
        return s, Disk(disk.center * s, disk.radius * s)
    if isinstance(node, Conjugation):
        return 1.0, Disk(disk.center.conjugate(), disk.radius)
    if isinstance(node, (Compose, DiskCompose)):
        first, second = (node.left, node.right) if inv else (node.right, node.left)
        l1, d1 = _lip(first, disk, inv)
        l2, d2 = _lip(second, d1, inv)
        return l1 * l2, d2
    if isinstance(node, (Inverse, DiskInverse)):
        return _lip(node.child, disk, not inv)
    if isinstance(node, RadialBump):
        return _bump_lip(node.alpha, node.rho, node.delta, disk, inv)
    if isinstance(node, CellBump):
        c = node.cell
        l1, d1 = _lip(c.chart, disk, True)
        l2, d2 = _bump_lip(c.alpha, c.rho, node.delta, d1, inv)
        l3, d3 = _lip(c.chart, d2, False)
        return l1 * l2 * l3, d3
    if isinstance(node, DiskConjugate):
        # u^-1 is radial with profile r/(1+r): slope <= 1/(1+r_min)
        r_min = max(0.0, abs(disk.center) - disk.radius)
        r_out = abs(disk.center) + disk.radius
        l1 = 1.0 / (1.0 + r_min)
        c1 = complex(plane_to_disk(disk.center))
        d1 = Disk(c1, max(l1 * disk.radius, 1e-300))
        if r_out / (1.0 + r_out) < d1.radius:
            d1 = Disk(0.0, r_out / (1.0 + r_out))
        supp = _disk_support(node.disk_map)
        if supp is None or not _meets(d1, supp.center, supp.radius):
            return 1.0, disk
        l2, d2 = _lip(node.disk_map, d1, inv)
        # u is radial with profile r/(1-r): slope 1/(1-r)^2 dominates r/(1-r)/r
        r_max = abs(d2.center) + d2.radius
        if not r_max < 1.0:
            raise NoBoundError("disk enclosure touches the unit circle; no Lipschitz bound for u")
        l3 = 1.0 / (1.0 - r_max) ** 2
        c3 = complex(disk_to_plane(d2.center))
        return l1 * l2 * l3, Disk(c3, l3 * d2.radius)
    raise NoBoundError(f"no Lipschitz data for node {type(node).__name__}")


def _disk_support(node):
    """A closed disk outside of which the disk map is the identity (None: identity)."""
    if isinstance(node, DiskIdentity):
        return None
    if isinstance(node, RadialBump):
        return None if node.delta == 0.0 else Disk(node.alpha, node.rho + 2.0 * node.delta)
    if isinstance(node, DiskInverse):
        return _disk_support(node.child)
    if isinstance(node, DiskCompose):
        a, b = _disk_support(node.left), _disk_support(node.right)
        if a is None or b is None:
            return a or b
        # a bump maps its support disk onto itself, so the union of supports bounds the composite
        d = abs(a.center - b.center)
        radius = max(a.radius, b.radius, (d + a.radius + b.radius) / 2.0)
        if radius == a.radius and d + b.radius <= a.radius:
            return a
        if radius == b.radius and d + a.radius <= b.radius:
            return b
        t = (radius - a.radius) / d if d > 0 else 0.0
        return Disk(a.center + (b.center - a.center) * t, radius)
    raise NoBoundError(f"no support data for node {type(node).__name__}")


def lipschitz_bound(h, disk):
    """Return ``L`` with ``|h(z) - h(w)| <= L |z - w|`` for ``z, w`` in ``disk``.

    Bounds are propagated through the tree: each node reports a constant valid
    on an enclosing disk of its input together with an enclosure of its image,
    and composition multiplies constants along the enclosures.
    """
    return _lip(h, disk, False)[0]


def image_enclosure(h, disk):
    """A disk guaranteed to contain ``h[disk]``."""
    return _lip(h, disk, False)[1]
