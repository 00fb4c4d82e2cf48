"""The five planar maps: the strip stretch ``h``, the dyadic map ``f``, the
degree map ``g``, the composite ``p = g o f`` and the transcendental map
``ft``.

All maps act on :class:`PlanarPoint` and are pure. Magnitudes above
``SATURATION`` are clamped (see :func:`is_saturated`) so iteration never
produces non-finite coordinates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from . import _kernels as K

SATURATION = K.SATURATION

DEMO_D = 5
DEMO_DELTA = 0.01
DEMO_DELTA_FT = 0.1


class DomainError(ValueError):
    """A map was evaluated outside the set it is defined on."""


class PlanarPoint(NamedTuple):
    x: float
    y: float

    @classmethod
    def from_complex(cls, z: complex) -> "PlanarPoint":
        return cls(float(z.real), float(z.imag))

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def __abs__(self) -> float:
        return math.hypot(self.x, self.y)

    def conj(self) -> "PlanarPoint":
        return PlanarPoint(self.x, -self.y)

    def reflect(self) -> "PlanarPoint":
        """The point -conj(z), mirror image in the imaginary axis."""
        return PlanarPoint(-self.x, self.y)


def as_point(z) -> PlanarPoint:
    if isinstance(z, PlanarPoint):
        return z
    if isinstance(z, complex):
        return PlanarPoint.from_complex(z)
    if isinstance(z, (int, float)):
        return PlanarPoint(float(z), 0.0)
    x, y = z
    return PlanarPoint(float(x), float(y))


def is_saturated(z: PlanarPoint) -> bool:
    return abs(z) >= SATURATION * (1 - 1e-12)


class MapKind(enum.Enum):
    STRETCH_H = "h"
    DYADIC_F = "f"
    DEGREE_G = "g"
    POLY_P = "p"
    TRANSCENDENTAL_FT = "ftilde"

    @property
    def code(self) -> int:
        return _KIND_CODES[self]


_KIND_CODES = {
    MapKind.STRETCH_H: K.KIND_H,
    MapKind.DYADIC_F: K.KIND_F,
    MapKind.DEGREE_G: K.KIND_G,
    MapKind.POLY_P: K.KIND_P,
    MapKind.TRANSCENDENTAL_FT: K.KIND_FT,
}


class Mode(enum.Enum):
    DEMO = "demo"
    FAITHFUL = "faithful"


@dataclass(frozen=True)
class MapSpec:
    """Which map to evaluate, with its parameters.

    In faithful mode ``k_hat`` (the sampled dilatation bound of ``h``) must
    be recorded and ``d`` must exceed ``2 * k_hat``.
    """

    kind: MapKind
    d: int = DEMO_D
    delta: float = DEMO_DELTA
    mode: Mode = Mode.DEMO
    k_hat: float | None = None

    def __post_init__(self):
        if not isinstance(self.kind, MapKind):
            object.__setattr__(self, "kind", MapKind(self.kind))
        if not isinstance(self.mode, Mode):
            object.__setattr__(self, "mode", Mode(self.mode))
        if int(self.d) != self.d or self.d < 3 or self.d % 2 == 0:
            raise ValueError(f"d must be an odd integer >= 3, got {self.d!r}")
        if not (self.delta > 0 and math.isfinite(self.delta)):
            raise ValueError(f"delta must be positive, got {self.delta!r}")
        if self.mode is Mode.FAITHFUL:
            if self.k_hat is None:
                raise ValueError("faithful mode needs a dilatation estimate k_hat")
            if not self.d > 2 * self.k_hat:
                raise ValueError(
                    f"faithful mode needs d > 2*K_hat = {2 * self.k_hat:.4g}, got d={self.d}")

    @classmethod
    def demo(cls, kind: MapKind | str) -> "MapSpec":
        kind = MapKind(kind)
        delta = DEMO_DELTA_FT if kind is MapKind.TRANSCENDENTAL_FT else DEMO_DELTA
        return cls(kind, DEMO_D, delta, Mode.DEMO)

    @classmethod
    def faithful(cls, kind: MapKind | str, k_hat: float | None = None) -> "MapSpec":
        """Smallest odd d above 2*K_hat, with delta = 0.01 * 2**(1-d)."""
        if k_hat is None:
            from .qc import default_k_hat
            k_hat = default_k_hat()
        d = math.floor(2 * k_hat) + 1
        if d % 2 == 0:
            d += 1
        return cls(MapKind(kind), d, 0.01 * 2.0 ** (1 - d), Mode.FAITHFUL, k_hat)

    def with_kind(self, kind: MapKind | str) -> "MapSpec":
        return replace(self, kind=MapKind(kind))


# -- individual maps --------------------------------------------------------

def stretch_profile(y: float, x: float) -> float:
    """Stretch factor h_y(x) in [1, 4]: 1 on the closed diamond W_0, 4 for
    |x| >= y, linear in |x| in between."""
    if not 0.5 <= y <= 1.0:
        raise DomainError(f"stretch profile needs 1/2 <= y <= 1, got y={y!r}")
    return K.profile(float(y), float(x))


def stretch_map(z) -> PlanarPoint:
    z = as_point(z)
    if not 0.5 <= z.y <= 1.0:
        raise DomainError(f"h is defined only on the closed strip 1/2 <= Im z <= 1, got {z}")
    return PlanarPoint(*K.stretch_xy(z.x, z.y))


def dyadic_map(z) -> PlanarPoint:
    z = as_point(z)
    x, y, _ = K.saturate(*K.dyadic_xy(z.x, z.y))
    return PlanarPoint(x, y)


def dyadic_index(y: float) -> int:
    """The integer m with 2**-(m+1) < y <= 2**-m."""
    if not (y > 0 and math.isfinite(y)):
        raise ValueError(f"dyadic index needs finite y > 0, got {y!r}")
    return int(K.dyadic_index(float(y)))


def degree_map(z, spec: MapSpec) -> PlanarPoint:
    z = as_point(z)
    return PlanarPoint(*K.degree_xy(z.x, z.y, spec.d, spec.delta))


def poly_map(z, spec: MapSpec) -> PlanarPoint:
    z = as_point(z)
    return PlanarPoint(*K.poly_xy(z.x, z.y, spec.d, spec.delta))


def transcendental_map(z, spec: MapSpec) -> PlanarPoint:
    z = as_point(z)
    return PlanarPoint(*K.transcendental_xy(z.x, z.y, spec.delta))


def evaluate(spec: MapSpec, z) -> PlanarPoint:
    z = as_point(z)
    if spec.kind is MapKind.STRETCH_H:
        return stretch_map(z)
    return PlanarPoint(*K.evaluate_xy(spec.kind.code, z.x, z.y, spec.d, spec.delta))


def evaluate_many(spec: MapSpec, xs, ys) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`evaluate` over coordinate arrays."""
    xs = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    ys = np.ascontiguousarray(ys, dtype=np.float64).ravel()
    if spec.kind is MapKind.STRETCH_H and np.any((ys < 0.5) | (ys > 1.0)):
        raise DomainError("h is defined only on the closed strip 1/2 <= Im z <= 1")
    return K.evaluate_many(spec.kind.code, xs, ys, spec.d, spec.delta)


def iterate(spec: MapSpec, z, n: int) -> list[PlanarPoint]:
    """The orbit z, F(z), ..., F^n(z)."""
    pts = [as_point(z)]
    for _ in range(n):
        pts.append(evaluate(spec, pts[-1]))
    return pts
