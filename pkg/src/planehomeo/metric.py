"""The metric of uniform convergence on compacts, and the group metric.

``du(f, g) = sum_n 2^-n s_n / (1 + s_n)`` with ``s_n = sup_{|z| <= n} |f(z) - g(z)|``,
truncated at ``n = N``; ``dist(f, g) = du(f, g) + du(f^-1, g^-1)``.

Suprema are taken over a polar grid. In the default mode the grid maximum is
returned, which can only under-estimate the true supremum. With
``rigorous=True`` the grid maximum is padded by ``(L_f + L_g) * mesh`` where
``mesh`` is the covering radius of the grid, giving a certified upper bound.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from . import _accel
from .errors import DomainError, PlaneHomeoError
from .homeo import Disk, evaluate, inverse, lipschitz_bound

# suprema above this clamp their term to 2^-n (the limit of s / (1 + s))
OVERFLOW_CLAMP = 1e15


@dataclass(frozen=True)
class MetricConfig:
    N: int = 40
    radial_samples: int = 256
    angular_samples: int = 256
    rigorous: bool = False

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"truncation N must be a positive integer, got {self.N!r}")
        if self.radial_samples < 8 or self.angular_samples < 8:
            raise DomainError("need at least 8 radial and 8 angular samples")

    def mesh(self, n):
        """Covering radius of the polar grid on ``|z| <= n``."""
        dr = n / (self.radial_samples - 1)
        return dr / 2.0 + 2.0 * n * math.sin(math.pi / (2.0 * self.angular_samples))


@functools.lru_cache(maxsize=16)
def _unit_polar_grid(radial, angular):
    r = np.linspace(0.0, 1.0, radial)[1:]
    t = 2.0 * np.pi * np.arange(angular) / angular
    pts = (r[:, None] * np.exp(1j * t)[None, :]).ravel()
    grid = np.concatenate(([0.0 + 0.0j], pts))
    grid.setflags(write=False)
    return grid


def polar_grid(n, cfg):
    return n * _unit_polar_grid(cfg.radial_samples, cfg.angular_samples)


def sup_on_disk(f, g, n, cfg=MetricConfig()):
    """Estimate ``sup_{|z| <= n} |f(z) - g(z)|`` (lower bound, or upper bound when rigorous)."""
    if n < 1:
        raise DomainError("disk index n must be >= 1")
    z = polar_grid(n, cfg)
    s = _accel.max_abs_diff(evaluate(f, z), evaluate(g, z))
    if math.isnan(s):
        raise PlaneHomeoError(f"evaluation produced NaN on |z| <= {n}")
    if cfg.rigorous:
        disk = Disk(0.0, float(n))
        s += (lipschitz_bound(f, disk) + lipschitz_bound(g, disk)) * cfg.mesh(n)
    return s


def series_term(n, s):
    if s > OVERFLOW_CLAMP:
        return 2.0 ** -n
    return 2.0 ** -n * (s / (1.0 + s))


def sup_profile(f, g, cfg=MetricConfig()):
    """The suprema ``s_1 .. s_N``."""
    return [sup_on_disk(f, g, n, cfg) for n in range(1, cfg.N + 1)]


def series(sups):
    return math.fsum(series_term(n, s) for n, s in enumerate(sups, start=1))


def du(f, g, cfg=MetricConfig()):
    """Truncated uniform-on-compacts distance; within ``2^-N`` of the full series."""
    return series(sup_profile(f, g, cfg))


def dist(f, g, cfg=MetricConfig()):
    """The group metric ``du(f, g) + du(f^-1, g^-1)``."""
    return du(f, g, cfg) + du(inverse(f), inverse(g), cfg)


@dataclass(frozen=True)
class DistReport:
    dist: float
    du_forward: float
    du_inverse: float
    truncation_bound: float
    rigorous: bool


def dist_report(f, g, cfg=MetricConfig()):
    fwd = du(f, g, cfg)
    bwd = du(inverse(f), inverse(g), cfg)
    return DistReport(fwd + bwd, fwd, bwd, 2.0 * truncation_error_bound(cfg), cfg.rigorous)


def truncation_error_bound(cfg=MetricConfig()):
    """Tail of the series past ``N``: every term is below ``2^-n``."""
    return 2.0 ** -cfg.N
