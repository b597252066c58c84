import os
import subprocess
import sys

import numpy as np
import pytest

from planehomeo import _accel

needs_numba = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")


def _brute_directed(a, b):
    return max(min(abs(p - q) for q in b) for p in a)


@pytest.fixture
def clouds(rng):
    a = rng.normal(size=300) + 1j * rng.normal(size=300)
    b = rng.normal(size=200) + 1j * rng.normal(size=200) + 0.5
    return a, b


@pytest.mark.parametrize("backend", ["numpy", pytest.param("numba", marks=needs_numba)])
def test_directed_hausdorff_matches_brute_force(backend, clouds):
    k = getattr(_accel, f"{backend}_kernels")
    a, b = clouds
    assert k.directed_hausdorff(a, b) == pytest.approx(_brute_directed(a, b), abs=1e-12)
    assert k.directed_hausdorff(b, a) == pytest.approx(_brute_directed(b, a), abs=1e-12)
    near = k.nearest_distances(a, b)
    assert near.max() == pytest.approx(_brute_directed(a, b), abs=1e-12)


@needs_numba
def test_backends_agree(rng, clouds):
    a, b = clouds
    nk, jk = _accel.numpy_kernels, _accel.numba_kernels
    assert np.allclose(nk.nearest_distances(a, b), jk.nearest_distances(a, b), atol=1e-13)
    x = rng.normal(size=1000) + 1j * rng.normal(size=1000)
    y = x + 0.01 * rng.normal(size=1000)
    assert nk.argmin_abs_diff(x, y)[1] == jk.argmin_abs_diff(x, y)[1]
    assert nk.max_abs_diff(x, y) == pytest.approx(jk.max_abs_diff(x, y), rel=1e-14)
    r = np.linspace(0, 1, 1001)
    assert np.array_equal(nk.radial_forward(r, 0.3, 0.05), jk.radial_forward(r, 0.3, 0.05))
    assert np.array_equal(nk.radial_inverse(r, 0.3, 0.05), jk.radial_inverse(r, 0.3, 0.05))
    w = np.exp(2j * np.pi * np.arange(64) / 64) * 2
    t1, m1 = nk.winding_sum(w)
    t2, m2 = jk.winding_sum(w)
    assert t1 == pytest.approx(t2, abs=1e-12) and m1 == pytest.approx(m2, abs=1e-12)


@pytest.mark.parametrize("backend", ["numpy", pytest.param("numba", marks=needs_numba)])
def test_radial_kernels_keep_shape(backend):
    k = getattr(_accel, f"{backend}_kernels")
    r = np.array(0.2)
    assert np.asarray(k.radial_forward(r, 0.3, 0.05)).shape == ()
    r2 = np.ones((3, 4)) * 0.1
    assert k.radial_inverse(r2, 0.3, 0.05).shape == (3, 4)


def test_env_flag_selects_numpy():
    env = dict(os.environ, PLANEHOMEO_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "import planehomeo; print(planehomeo.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"
