"""Compiled scalar kernels shared by the public map API, the orbit engine and
the grid classifier.

Everything here works on bare ``(x, y)`` float pairs so that numba can
compile it; the wrappers in :mod:`qrdynamics.maps` add types and checks.
Using one set of kernels everywhere keeps scalar calls and grid runs
bit-identical.
"""

import math

import numpy as np
from numba import njit

KIND_H = 0
KIND_F = 1
KIND_G = 2
KIND_P = 3
KIND_FT = 4

UNDECIDED = 0
ESCAPED = 1
CONVERGED = 2

SATURATION = 1e100
LOG_SATURATION = math.log(SATURATION)


@njit(cache=True, nogil=True)
def saturate(x, y):
    """Clamp a point to magnitude ``SATURATION``; returns (x, y, clamped)."""
    if math.isnan(x) or math.isnan(y):
        return SATURATION, 0.0, True
    if math.isinf(x) or math.isinf(y):
        sx = 0.0 if not math.isinf(x) else math.copysign(1.0, x)
        sy = 0.0 if not math.isinf(y) else math.copysign(1.0, y)
        r = math.hypot(sx, sy)
        return SATURATION * sx / r, SATURATION * sy / r, True
    r = math.hypot(x, y)
    if r > SATURATION:
        s = SATURATION / r
        return x * s, y * s, True
    return x, y, False


@njit(cache=True, nogil=True)
def dyadic_index(y):
    """Integer m with 2**-(m+1) < y <= 2**-m, for finite y > 0."""
    mant, e = math.frexp(y)
    m = 1 - e if mant == 0.5 else -e
    # frexp is exact, but keep the half-open convention honest at powers of two
    while math.ldexp(1.0, -m) < y:
        m -= 1
    while math.ldexp(1.0, -(m + 1)) >= y:
        m += 1
    return m


@njit(cache=True, nogil=True)
def half_width(y):
    """Half-width of the closed diamond W_0 at height y in [1/2, 1]."""
    if y <= 0.75:
        return y - 0.5
    return 1.0 - y


@njit(cache=True, nogil=True)
def profile_region(y, ax):
    """0: inside closed W_0, 1: lower ramp, 2: upper ramp, 3: |x| >= y."""
    if ax <= half_width(y):
        return 0
    if ax >= y:
        return 3
    if y <= 0.75:
        return 1
    return 2


@njit(cache=True, nogil=True)
def profile(y, x):
    ax = abs(x)
    reg = profile_region(y, ax)
    if reg == 0:
        return 1.0
    if reg == 3:
        return 4.0
    if reg == 1:
        return 6.0 * ax - 6.0 * y + 4.0
    return (3.0 * ax + 5.0 * y - 4.0) / (2.0 * y - 1.0)


@njit(cache=True, nogil=True)
def profile_slope(y, x):
    """d/dx of the stretch profile; one-sided (from the larger |x|) on kinks."""
    ax = abs(x)
    s = 1.0 if x >= 0.0 else -1.0
    if ax < half_width(y) or ax >= y:
        return 0.0
    if y <= 0.75:
        return 6.0 * s
    return 3.0 * s / (2.0 * y - 1.0)


@njit(cache=True, nogil=True)
def stretch_xy(x, y):
    return profile(y, x) * x, y


@njit(cache=True, nogil=True)
def dyadic_xy(x, y):
    if y <= 0.0 or abs(x) >= y:
        return 2.0 * x, 0.5 * y
    m = dyadic_index(y)
    sx = math.ldexp(x, m)
    sy = math.ldexp(y, m)
    hx = profile(sy, sx) * sx
    return math.ldexp(hx, -(m + 1)), math.ldexp(sy, -(m + 1))


@njit(cache=True, nogil=True)
def cpow(x, y, d):
    """Complex integer power by binary exponentiation (exactly odd-symmetric)."""
    rx, ry = 1.0, 0.0
    bx, by = x, y
    n = d
    while n > 0:
        if n & 1:
            rx, ry = rx * bx - ry * by, rx * by + ry * bx
        n >>= 1
        if n > 0:
            bx, by = bx * bx - by * by, 2.0 * bx * by
    return rx, ry


@njit(cache=True, nogil=True)
def degree_xy(x, y, d, delta):
    r = math.hypot(x, y)
    if r <= 1.0:
        return x, y
    c = delta * (r - 1.0) if r <= 2.0 else delta
    if math.log(c) + d * math.log(r) > LOG_SATURATION:
        ux, uy = cpow(x / r, y / r, d)
        return ux * SATURATION, uy * SATURATION
    px, py = cpow(x, y, d)
    ox, oy, _ = saturate(x + c * px, y + c * py)
    return ox, oy


@njit(cache=True, nogil=True)
def poly_xy(x, y, d, delta):
    fx, fy = dyadic_xy(x, y)
    return degree_xy(fx, fy, d, delta)


@njit(cache=True, nogil=True)
def transcendental_xy(x, y, delta):
    if y >= 0.0:
        return dyadic_xy(x, y)
    c = -delta * y if y >= -1.0 else delta
    # exp(-z^2) = exp(y^2 - x^2) * (cos(2xy) - i sin(2xy))
    lg = y * y - x * x
    t = 2.0 * x * y
    if math.log(c) + lg > LOG_SATURATION:
        return math.cos(t) * SATURATION, -math.sin(t) * SATURATION
    e = math.exp(lg)
    ox, oy, _ = saturate(2.0 * x + c * e * math.cos(t), 2.0 * y - c * e * math.sin(t))
    return ox, oy


@njit(cache=True, nogil=True)
def evaluate_xy(kind, x, y, d, delta):
    if kind == KIND_F:
        ox, oy = dyadic_xy(x, y)
    elif kind == KIND_P:
        return poly_xy(x, y, d, delta)
    elif kind == KIND_G:
        return degree_xy(x, y, d, delta)
    elif kind == KIND_FT:
        return transcendental_xy(x, y, delta)
    else:
        ox, oy = stretch_xy(x, y)
    ox, oy, _ = saturate(ox, oy)
    return ox, oy


# -- branch codes: two points with equal codes lie on one smooth formula ----

_AFFINE = 1


@njit(cache=True, nogil=True)
def stretch_code(x, y):
    if y < 0.5 or y > 1.0:
        return -1
    reg = profile_region(y, abs(x))
    if reg == 1 or reg == 2:
        return 2 * reg + (1 if x < 0.0 else 0)
    return reg


@njit(cache=True, nogil=True)
def dyadic_code(x, y):
    if y <= 0.0 or abs(x) >= y:
        return _AFFINE
    m = dyadic_index(y)
    return 16 * (m + 4096) + stretch_code(math.ldexp(x, m), math.ldexp(y, m))


@njit(cache=True, nogil=True)
def degree_code(x, y):
    r = math.hypot(x, y)
    if r <= 1.0:
        return 0
    if r <= 2.0:
        return 1
    return 2


@njit(cache=True, nogil=True)
def branch_code(kind, x, y, d, delta):
    if kind == KIND_H:
        return stretch_code(x, y)
    if kind == KIND_F:
        return dyadic_code(x, y)
    if kind == KIND_G:
        return degree_code(x, y)
    if kind == KIND_P:
        fx, fy = dyadic_xy(x, y)
        return 4 * dyadic_code(x, y) + degree_code(fx, fy)
    if y >= 0.0:
        return dyadic_code(x, y)
    if y >= -1.0:
        return -2
    return -3


# -- orbits -----------------------------------------------------------------

@njit(cache=True, nogil=True)
def halving_set(kind, x, y):
    """True if z lies where the map acts as exact halving near 0.

    Close to 0 the maps f, p, ft are invariant under z -> 2z, so smallness
    alone says nothing; only the closed diamonds and the imaginary axis
    (upper half for ft) are carried to 0.
    """
    if kind == KIND_G:
        return x == 0.0 and y == 0.0
    if kind == KIND_H:
        return False
    if kind == KIND_FT and y < 0.0:
        return False
    if x == 0.0:
        return True
    if y <= 0.0:
        return False
    m = dyadic_index(y)
    sy = math.ldexp(y, m)
    return abs(math.ldexp(x, m)) <= half_width(sy)


@njit(cache=True, nogil=True)
def orbit(kind, x, y, d, delta, radius, zero_tol, max_iter, horizon):
    """Iterate until escape, confirmed convergence to 0, or ``max_iter``.

    Returns (label, n, x_n, y_n).
    """
    n = 0
    while True:
        r = math.hypot(x, y)
        if r > radius:
            return ESCAPED, n, x, y
        if r < zero_tol and halving_set(kind, x, y):
            cx, cy = x, y
            held = True
            for _ in range(horizon):
                cx, cy = evaluate_xy(kind, cx, cy, d, delta)
                if not math.hypot(cx, cy) < zero_tol:
                    held = False
                    break
            if held:
                return CONVERGED, n, x, y
        if n >= max_iter:
            return UNDECIDED, n, x, y
        x, y = evaluate_xy(kind, x, y, d, delta)
        n += 1


@njit(cache=True, nogil=True)
def classify_rows(kind, d, delta, radius, zero_tol, max_iter, horizon,
                  x0, y1, dx, dy, row_lo, row_hi, labels, iters, fx, fy):
    width = labels.shape[1]
    for j in range(row_lo, row_hi):
        y = y1 - (j + 0.5) * dy
        for i in range(width):
            x = x0 + (i + 0.5) * dx
            lab, n, ex, ey = orbit(kind, x, y, d, delta, radius, zero_tol,
                                   max_iter, horizon)
            labels[j, i] = lab
            iters[j, i] = n
            fx[j, i] = ex
            fy[j, i] = ey


@njit(cache=True, nogil=True)
def evaluate_many(kind, xs, ys, d, delta):
    ox = np.empty_like(xs)
    oy = np.empty_like(ys)
    for k in range(xs.shape[0]):
        ox[k], oy[k] = evaluate_xy(kind, xs[k], ys[k], d, delta)
    return ox, oy


@njit(cache=True, nogil=True)
def difference_matrices(kind, xs, ys, d, delta, step):
    """Central-difference derivative entries and a seam flag per sample.

    A sample is flagged when any point at distance 2*step along the axes
    lies on a different branch than the centre.
    """
    n = xs.shape[0]
    a = np.empty((n, 4))
    flagged = np.zeros(n, dtype=np.bool_)
    for k in range(n):
        x = xs[k]
        y = ys[k]
        c = branch_code(kind, x, y, d, delta)
        if (c == -1
                or branch_code(kind, x + 2 * step, y, d, delta) != c
                or branch_code(kind, x - 2 * step, y, d, delta) != c
                or branch_code(kind, x, y + 2 * step, d, delta) != c
                or branch_code(kind, x, y - 2 * step, d, delta) != c):
            flagged[k] = True
        px, py = evaluate_xy(kind, x + step, y, d, delta)
        mx, my = evaluate_xy(kind, x - step, y, d, delta)
        qx, qy = evaluate_xy(kind, x, y + step, d, delta)
        nx, ny = evaluate_xy(kind, x, y - step, d, delta)
        a[k, 0] = (px - mx) / (2 * step)
        a[k, 1] = (qx - nx) / (2 * step)
        a[k, 2] = (py - my) / (2 * step)
        a[k, 3] = (qy - ny) / (2 * step)
    return a, flagged
