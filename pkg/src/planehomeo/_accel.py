"""Hot numeric kernels, compiled with numba when available.

Set ``PLANEHOMEO_DISABLE_NUMBA=1`` to force the pure-numpy path. Both
implementations are importable as ``numpy_kernels`` / ``numba_kernels`` so
they can be compared directly; the module-level names are bound to the
selected backend.
"""

import os
import types

import numpy as np

_DISABLE = os.environ.get("PLANEHOMEO_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _DISABLE
BACKEND = "numba" if USE_NUMBA else "numpy"

# elements per chunk of the broadcast distance matrix in the numpy path
_CHUNK_ELEMS = 1 << 22


# --------------------------------------------------------------- numpy path

def _np_nearest_distances(a, b):
    a = np.ascontiguousarray(a, dtype=np.complex128)
    b = np.ascontiguousarray(b, dtype=np.complex128)
    out = np.empty(a.shape[0])
    step = max(1, _CHUNK_ELEMS // max(1, b.shape[0]))
    for i in range(0, a.shape[0], step):
        blk = a[i:i + step, None] - b[None, :]
        out[i:i + step] = np.abs(blk).min(axis=1)
    return out


def _np_directed_hausdorff(a, b):
    return float(_np_nearest_distances(a, b).max())


def _np_argmin_abs_diff(x, y):
    d = np.abs(np.asarray(x) - np.asarray(y))
    i = int(np.argmin(d))
    return float(d[i]), i


def _np_max_abs_diff(x, y):
    return float(np.abs(np.asarray(x) - np.asarray(y)).max())


def _np_radial_forward(r, rho, delta):
    r = np.asarray(r, dtype=np.float64)
    return np.where(
        r < rho,
        r * ((rho + delta) / rho),
        np.where(r < rho + 2.0 * delta, 0.5 * (r - rho) + rho + delta, r),
    )


def _np_radial_inverse(r, rho, delta):
    r = np.asarray(r, dtype=np.float64)
    return np.where(
        r < rho + delta,
        r * (rho / (rho + delta)),
        np.where(r < rho + 2.0 * delta, 2.0 * (r - rho - delta) + rho, r),
    )


def _np_winding_sum(w):
    w = np.asarray(w, dtype=np.complex128)
    nxt = np.roll(w, -1)
    inc = np.angle(nxt / w)
    return float(inc.sum()), float(np.abs(inc).max())


numpy_kernels = types.SimpleNamespace(
    nearest_distances=_np_nearest_distances,
    directed_hausdorff=_np_directed_hausdorff,
    argmin_abs_diff=_np_argmin_abs_diff,
    max_abs_diff=_np_max_abs_diff,
    radial_forward=_np_radial_forward,
    radial_inverse=_np_radial_inverse,
    winding_sum=_np_winding_sum,
)


# --------------------------------------------------------------- numba path

if HAVE_NUMBA:
    from numba import njit

    @njit(cache=True, nogil=True)
    def _nb_nearest_distances(a, b):
        out = np.empty(a.shape[0])
        for i in range(a.shape[0]):
            best = np.inf
            ar = a[i].real
            ai = a[i].imag
            for j in range(b.shape[0]):
                dr = ar - b[j].real
                di = ai - b[j].imag
                d2 = dr * dr + di * di
                if d2 < best:
                    best = d2
            out[i] = np.sqrt(best)
        return out

    @njit(cache=True, nogil=True)
    def _nb_directed_hausdorff_impl(a, b):
        # early break: once a point's running min drops below the current max
        # it cannot raise the max
        cmax = 0.0
        for i in range(a.shape[0]):
            cmin = np.inf
            ar = a[i].real
            ai = a[i].imag
            for j in range(b.shape[0]):
                dr = ar - b[j].real
                di = ai - b[j].imag
                d2 = dr * dr + di * di
                if d2 < cmin:
                    cmin = d2
                    if cmin <= cmax:
                        break
            if cmin > cmax:
                cmax = cmin
        return np.sqrt(cmax)

    @njit(cache=True, nogil=True)
    def _nb_argmin_abs_diff_impl(x, y):
        best = np.inf
        k = 0
        for i in range(x.shape[0]):
            d = abs(x[i] - y[i])
            if d < best:
                best = d
                k = i
        return best, k

    @njit(cache=True, nogil=True)
    def _nb_max_abs_diff_impl(x, y):
        best = 0.0
        for i in range(x.shape[0]):
            d = abs(x[i] - y[i])
            if d > best or d != d:
                best = d
        return best

    @njit(cache=True, nogil=True)
    def _nb_radial_forward_impl(r, rho, delta):
        out = np.empty_like(r)
        scale = (rho + delta) / rho
        outer = rho + 2.0 * delta
        for i in range(r.shape[0]):
            x = r[i]
            if x < rho:
                out[i] = x * scale
            elif x < outer:
                out[i] = 0.5 * (x - rho) + rho + delta
            else:
                out[i] = x
        return out

    @njit(cache=True, nogil=True)
    def _nb_radial_inverse_impl(r, rho, delta):
        out = np.empty_like(r)
        scale = rho / (rho + delta)
        mid = rho + delta
        outer = rho + 2.0 * delta
        for i in range(r.shape[0]):
            x = r[i]
            if x < mid:
                out[i] = x * scale
            elif x < outer:
                out[i] = 2.0 * (x - rho - delta) + rho
            else:
                out[i] = x
        return out

    @njit(cache=True, nogil=True)
    def _nb_winding_sum_impl(w):
        n = w.shape[0]
        total = 0.0
        worst = 0.0
        for k in range(n):
            q = w[(k + 1) % n] / w[k]
            inc = np.arctan2(q.imag, q.real)
            total += inc
            if abs(inc) > worst:
                worst = abs(inc)
        return total, worst

    def _c128(x):
        return np.ascontiguousarray(x, dtype=np.complex128).ravel()

    def _nb_nearest_distances_w(a, b):
        return _nb_nearest_distances(_c128(a), _c128(b))

    def _nb_directed_hausdorff(a, b):
        return float(_nb_directed_hausdorff_impl(_c128(a), _c128(b)))

    def _nb_argmin_abs_diff(x, y):
        x = _c128(x)
        y = _c128(y)
        d, k = _nb_argmin_abs_diff_impl(x, y)
        return float(d), int(k)

    def _nb_max_abs_diff(x, y):
        return float(_nb_max_abs_diff_impl(_c128(x), _c128(y)))

    def _nb_radial(impl):
        def run(r, rho, delta):
            arr = np.asarray(r, dtype=np.float64)
            flat = impl(np.ascontiguousarray(arr.ravel()), float(rho), float(delta))
            return flat.reshape(arr.shape)
        return run

    def _nb_winding_sum(w):
        total, worst = _nb_winding_sum_impl(_c128(w))
        return float(total), float(worst)

    numba_kernels = types.SimpleNamespace(
        nearest_distances=_nb_nearest_distances_w,
        directed_hausdorff=_nb_directed_hausdorff,
        argmin_abs_diff=_nb_argmin_abs_diff,
        max_abs_diff=_nb_max_abs_diff,
        radial_forward=_nb_radial(_nb_radial_forward_impl),
        radial_inverse=_nb_radial(_nb_radial_inverse_impl),
        winding_sum=_nb_winding_sum,
    )
else:  # pragma: no cover
    numba_kernels = None


kernels = numba_kernels if USE_NUMBA else numpy_kernels

nearest_distances = kernels.nearest_distances
directed_hausdorff = kernels.directed_hausdorff
argmin_abs_diff = kernels.argmin_abs_diff
max_abs_diff = kernels.max_abs_diff
radial_forward = kernels.radial_forward
radial_inverse = kernels.radial_inverse
winding_sum = kernels.winding_sum
