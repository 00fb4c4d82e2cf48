"""Membership and sampling for the sets of the construction: the diamonds
W_k = 2**-k W_0, the strips S and D, and the escape seeds I_1, I_2.

W_0 is the open diamond with vertices i, i/2, (3i+1)/4, (3i-1)/4. Diamonds
are open, I_1 is closed and I_2 is half-open; pass ``closed=True`` for the
closures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .maps import PlanarPoint, as_point

_UNIT_VERTICES = ((0.0, 1.0), (0.0, 0.5), (0.25, 0.75), (-0.25, 0.75))


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"diamond index must be >= 0, got {k}")


def _diamond_level(x: float, y: float, k: int) -> float:
    """2^k |x| + |2^k y - 3/4| - 1/4: negative inside W_k, zero on its edge."""
    sx = abs(math.ldexp(x, k))
    sy = math.ldexp(y, k)
    return sx + abs(sy - 0.75) - 0.25


def in_diamond(z, k: int, closed: bool = False) -> bool:
    _check_k(k)
    z = as_point(z)
    sy = math.ldexp(z.y, k)
    if not 0.5 <= sy <= 1.0:
        return False
    # same half-width test the maps use, so membership and "f = z/2" agree
    w = K.half_width(sy)
    sx = abs(math.ldexp(z.x, k))
    return sx <= w if closed else sx < w


def in_any_diamond(z, closed: bool = True) -> bool:
    """Membership in the union of 2**-k W_0 over all integers k."""
    z = as_point(z)
    if not (z.y > 0 and math.isfinite(z.y)):
        return False
    m = int(K.dyadic_index(z.y))
    sy = math.ldexp(z.y, m)
    sx = abs(math.ldexp(z.x, m))
    w = K.half_width(sy)
    if closed:
        return sx <= w
    # sy == 1 is the top vertex of one diamond and the bottom of the next
    return sx < w


def diamond_index(z) -> int | None:
    """The k >= 0 with z in the closed W_k, or None."""
    z = as_point(z)
    if not in_any_diamond(z, closed=True):
        return None
    m = int(K.dyadic_index(z.y))
    return m if m >= 0 else None


def diamond_vertices(k: int) -> list[PlanarPoint]:
    """Vertices of W_k in the order top, bottom, right, left."""
    _check_k(k)
    return [PlanarPoint(math.ldexp(x, -k), math.ldexp(y, -k)) for x, y in _UNIT_VERTICES]


def diamond_center(k: int) -> PlanarPoint:
    _check_k(k)
    return PlanarPoint(0.0, math.ldexp(0.75, -k))


def diamond_boundary_distance(z, k: int) -> float:
    """Euclidean distance from z to the boundary of W_k."""
    _check_k(k)
    z = as_point(z)
    verts = diamond_vertices(k)
    ring = [verts[0], verts[2], verts[1], verts[3], verts[0]]
    return min(_segment_distance(z, a, b) for a, b in zip(ring, ring[1:]))


def _segment_distance(p: PlanarPoint, a: PlanarPoint, b: PlanarPoint) -> float:
    ax, ay = b.x - a.x, b.y - a.y
    t = ((p.x - a.x) * ax + (p.y - a.y) * ay) / (ax * ax + ay * ay)
    t = min(1.0, max(0.0, t))
    return math.hypot(p.x - (a.x + t * ax), p.y - (a.y + t * ay))


def sample_boundary(k: int, n: int) -> list[PlanarPoint]:
    """n points on the boundary of W_k, evenly spaced by arc length and
    starting at the top vertex, going clockwise (top, right, bottom, left).

    Every edge contributes its start vertex, so all four vertices are
    present. Points lie exactly on the closed diamond in binary64.
    """
    _check_k(k)
    if n < 4:
        raise ValueError("need at least 4 boundary samples")
    per_edge = [n // 4 + (1 if e < n % 4 else 0) for e in range(4)]
    pts = []
    for edge, count in enumerate(per_edge):
        for i in range(count):
            t = i / count
            pts.append(_edge_point(edge, t))
    return [PlanarPoint(math.ldexp(x, -k), math.ldexp(y, -k)) for x, y in pts]


def _edge_point(edge: int, t: float) -> tuple[float, float]:
    # x is derived from y with the exact half-width so the point is on the
    # closed diamond bit-for-bit
    if edge == 0:       # top -> right
        y = 1.0 - 0.25 * t
        return K.half_width(y), y
    if edge == 1:       # right -> bottom
        y = 0.75 - 0.25 * t
        return K.half_width(y), y
    if edge == 2:       # bottom -> left
        y = 0.5 + 0.25 * t
        return -K.half_width(y), y
    y = 0.75 + 0.25 * t  # left -> top
    return -K.half_width(y), y


def sample_interior(k: int, n: int, seed: int = 0) -> list[PlanarPoint]:
    """n points strictly inside W_k (uniform in the diamond)."""
    _check_k(k)
    rng = np.random.default_rng(seed)
    # the diamond is the image of the open unit square under a rotation
    u = rng.uniform(0.0, 1.0, size=(n, 2))
    u = np.clip(u, 1e-9, 1 - 1e-9)
    xs = 0.25 * (u[:, 0] - u[:, 1])
    ys = 0.5 + 0.25 * (u[:, 0] + u[:, 1])
    out = []
    for x, y in zip(xs, ys):
        p = PlanarPoint(math.ldexp(float(x), -k), math.ldexp(float(y), -k))
        if in_diamond(p, k):
            out.append(p)
        else:
            out.append(diamond_center(k))
    return out


def in_strip_S(z, closed: bool = False) -> bool:
    y = as_point(z).y
    return 0.5 <= y <= 1.0 if closed else 0.5 < y < 1.0


def in_strip_D(z, closed: bool = False) -> bool:
    y = as_point(z).y
    return -1.0 <= y <= 0.0 if closed else -1.0 < y < 0.0


@dataclass(frozen=True)
class EscapeSeeds:
    """The seed boxes I_1 = [1/4, 1] x [0, eps] and I_2 = {y < x <= 1/4, 0 <= y <= eps}."""

    epsilon: float = 1.0 / 32

    def __post_init__(self):
        if not 0 < self.epsilon < 0.25:
            raise ValueError(f"epsilon must lie in (0, 1/4), got {self.epsilon!r}")


def in_I1(z, seeds: EscapeSeeds) -> bool:
    z = as_point(z)
    return 0.25 <= z.x <= 1.0 and 0.0 <= z.y <= seeds.epsilon


def in_I2(z, seeds: EscapeSeeds, closed: bool = False) -> bool:
    z = as_point(z)
    if not (z.x <= 0.25 and 0.0 <= z.y <= seeds.epsilon):
        return False
    return z.y <= z.x if closed else z.y < z.x


def sample_I1(seeds: EscapeSeeds, n: int, seed: int = 0) -> list[PlanarPoint]:
    rng = np.random.default_rng(seed)
    xs = rng.uniform(0.25, 1.0, n)
    ys = rng.uniform(0.0, seeds.epsilon, n)
    return [PlanarPoint(float(x), float(y)) for x, y in zip(xs, ys)]
