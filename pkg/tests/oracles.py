"""Independent reference implementations used only by the tests.

These follow the verbal definitions of the maps in exact rational
arithmetic and share no code with the package.
"""

from fractions import Fraction as Fr

HALF = Fr(1, 2)
THREE_QUARTERS = Fr(3, 4)


def in_closed_w0(x, y):
    # convex hull of i, i/2, (3i+1)/4, (3i-1)/4
    return abs(x) + abs(y - THREE_QUARTERS) <= Fr(1, 4)


def stretch_factor(y, x):
    """1 on the closed diamond, 4 once |x| >= y, linear in |x| in between."""
    ax = abs(x)
    if ax >= y:
        return Fr(4)
    if in_closed_w0(x, y):
        return Fr(1)
    edge = y - HALF if y <= THREE_QUARTERS else 1 - y
    return 1 + 3 * (ax - edge) / (y - edge)


def f_exact(x, y):
    x, y = Fr(x), Fr(y)
    if y <= 0:
        return 2 * x, y / 2
    m = 0
    scale = Fr(1)
    while y * scale > 1:
        m -= 1
        scale /= 2
    while y * scale <= HALF:
        m += 1
        scale *= 2
    X, Y = x * scale, y * scale
    return stretch_factor(Y, X) * X / (2 * scale), y / 2


def first_exit_exact(x, y, cap=10_000):
    x, y = Fr(x), Fr(y)
    for n in range(cap):
        if x > y:
            return n
        x, y = f_exact(x, y)
    raise RuntimeError("no exit")
