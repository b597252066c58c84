import cmath
import math

import numpy as np
from hypothesis import strategies as st

from planehomeo import (
    Cell2,
    CellBump,
    Compose,
    Conjugation,
    DiskConjugate,
    Identity,
    Inverse,
    RadialBump,
    Rotation,
    Scaling,
    Translation,
)


def random_leaf(rng):
    kind = rng.integers(7)
    if kind == 0:
        return Identity()
    if kind == 1:
        return Translation(complex(*rng.uniform(-2, 2, 2)))
    if kind == 2:
        return Rotation(float(rng.uniform(-math.pi, math.pi)))
    if kind == 3:
        return Scaling(float(rng.uniform(0.5, 2.0)))
    if kind == 4:
        return Conjugation()
    alpha = 0.3 * cmath.rect(float(rng.uniform(0, 1)), float(rng.uniform(0, 2 * math.pi)))
    rho = float(rng.uniform(0.05, 0.3))
    eta = float(rng.uniform(0.01, (1 - abs(alpha) - rho) / 2 * 0.99))
    delta = float(rng.uniform(0, eta))
    if kind == 5:
        return CellBump(Cell2(Identity(), alpha, rho, eta), delta)
    return DiskConjugate(RadialBump(alpha, rho, delta, eta))


def random_tree(rng, depth=3):
    if depth == 0 or rng.random() < 0.3:
        return random_leaf(rng)
    k = rng.integers(3)
    if k == 0:
        return Inverse(random_tree(rng, depth - 1))
    return Compose(random_tree(rng, depth - 1), random_tree(rng, depth - 1))


@st.composite
def trees(draw, depth=3):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_tree(np.random.default_rng(seed), depth)


def random_points(rng, n, radius):
    return radius * np.sqrt(rng.random(n)) * np.exp(2j * np.pi * rng.random(n))


def bisect_increasing(f, target, lo, hi, iters=200):
    """Solve f(r) = target for increasing f on [lo, hi]."""
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
