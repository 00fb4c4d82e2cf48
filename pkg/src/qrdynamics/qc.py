"""Numerical differential analysis of the maps.

Finite-difference derivative matrices, operator norms, Jacobians and local
dilatation |Df|^2 / J_f, sampled dilatation bounds, and the topological
degree of a map on a circle via the argument principle.
"""

from __future__ import annotations

import functools
import math
from dataclasses import asdict, dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.stats import qmc

from . import _kernels as K
from .maps import DomainError, MapKind, MapSpec, PlanarPoint, as_point, evaluate, evaluate_many

DEFAULT_STEP = 1e-6
RICHARDSON_FACTOR = 10.0
RICHARDSON_RTOL = 1e-3


def singular_values(a11: float, a12: float, a21: float, a22: float) -> tuple[float, float]:
    """Largest and smallest singular value of [[a11, a12], [a21, a22]]."""
    p = math.hypot(a11 + a22, a21 - a12)
    q = math.hypot(a11 - a22, a21 + a12)
    return 0.5 * (p + q), 0.5 * abs(p - q)


def _singular_values_many(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = np.hypot(a[:, 0] + a[:, 3], a[:, 2] - a[:, 1])
    q = np.hypot(a[:, 0] - a[:, 3], a[:, 2] + a[:, 1])
    return 0.5 * (p + q), 0.5 * np.abs(p - q)


@dataclass(frozen=True)
class DerivativeSample:
    a11: float
    a12: float
    a21: float
    a22: float
    op_norm: float
    jac_det: float
    local_K: float
    reliable: bool = True
    refined: bool = False

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]])

    @classmethod
    def from_matrix(cls, a11, a12, a21, a22, reliable=True, refined=False) -> "DerivativeSample":
        smax, _ = singular_values(a11, a12, a21, a22)
        jac = a11 * a22 - a12 * a21
        local_k = smax * smax / jac if jac > 0 else math.inf
        return cls(a11, a12, a21, a22, smax, jac, local_k, reliable, refined)


def _difference_batch(spec: MapSpec, xs: np.ndarray, ys: np.ndarray, step: float):
    """Derivative entries with the Richardson fallback; returns (a, flagged, refined)."""
    a1, flagged = K.difference_matrices(spec.kind.code, xs, ys, spec.d, spec.delta, step)
    a2, _ = K.difference_matrices(spec.kind.code, xs, ys, spec.d, spec.delta,
                                  RICHARDSON_FACTOR * step)
    scale = np.maximum(np.max(np.abs(a1), axis=1), 1e-300)
    refined = np.max(np.abs(a1 - a2), axis=1) > RICHARDSON_RTOL * scale
    if np.any(refined):
        r = RICHARDSON_FACTOR ** 2
        a1[refined] = (r * a1[refined] - a2[refined]) / (r - 1)
    return a1, flagged, refined


def derivative_sample(spec: MapSpec, z, step: float = DEFAULT_STEP) -> DerivativeSample:
    """Central-difference derivative of the map at z.

    ``reliable`` is False when the 2*step neighbourhood straddles a branch
    seam, where the map need not be differentiable.
    """
    if not step > 0:
        raise ValueError("step must be positive")
    z = as_point(z)
    a, flagged, refined = _difference_batch(spec, np.array([z.x]), np.array([z.y]), step)
    return DerivativeSample.from_matrix(*a[0], reliable=not bool(flagged[0]),
                                        refined=bool(refined[0]))


class JacobianValue(NamedTuple):
    value: float
    on_kink: bool


def jacobian_h_analytic(y: float, x: float) -> JacobianValue:
    """J_h = h_y(x) + x * d/dx h_y(x) from the closed-form profile.

    On a line where the profile's slope jumps the value from the larger |x|
    side is returned and ``on_kink`` is set.
    """
    if not 0.5 <= y <= 1.0:
        raise DomainError(f"J_h needs 1/2 <= y <= 1, got y={y!r}")
    ax = abs(x)
    kink = ax == K.half_width(y) or ax == y
    return JacobianValue(K.profile(y, x) + x * K.profile_slope(y, x), kink)


def jacobian_h_many(ys: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """Vectorised closed-form J_h (off kinks)."""
    ys = np.asarray(ys, dtype=float)
    ax = np.abs(np.asarray(xs, dtype=float))
    w = np.where(ys <= 0.75, ys - 0.5, 1.0 - ys)
    lower = 12.0 * ax - 6.0 * ys + 4.0
    upper = (6.0 * ax + 5.0 * ys - 4.0) / (2.0 * ys - 1.0)
    ramp = np.where(ys <= 0.75, lower, upper)
    return np.where(ax <= w, 1.0, np.where(ax >= ys, 4.0, ramp))


# -- sampling regions ---------------------------------------------------------

@dataclass(frozen=True)
class SampleRegion:
    """A box, optionally cut down by a vectorised membership predicate."""

    x0: float
    x1: float
    y0: float
    y1: float
    name: str = "box"
    predicate: Callable[[np.ndarray, np.ndarray], np.ndarray] | None = None

    def points(self, n: int) -> tuple[np.ndarray, np.ndarray]:
        """n deterministic Halton points inside the region."""
        sampler = qmc.Halton(d=2, scramble=False)
        sampler.fast_forward(1)  # skip the corner point (0, 0)
        xs, ys = [], []
        have = 0
        while have < n:
            u = sampler.random(max(2 * (n - have), 64))
            x = self.x0 + (self.x1 - self.x0) * u[:, 0]
            y = self.y0 + (self.y1 - self.y0) * u[:, 1]
            if self.predicate is not None:
                keep = self.predicate(x, y)
                x, y = x[keep], y[keep]
            xs.append(x)
            ys.append(y)
            have += len(x)
        return np.concatenate(xs)[:n], np.concatenate(ys)[:n]


def _h_core(x, y):
    return (np.abs(x) <= y) & (y > 0.5) & (y < 1.0)


def _disk(x, y):
    return np.hypot(x, y) <= 1.0


REGIONS = {
    "h-core": SampleRegion(-1.0, 1.0, 0.5, 1.0, "h-core", _h_core),
    "strip-S": SampleRegion(-2.0, 2.0, 0.5, 1.0, "strip-S", lambda x, y: (y > 0.5) & (y < 1.0)),
    "lower-box": SampleRegion(-2.0, 2.0, -2.0, -0.1, "lower-box"),
    "unit-disk": SampleRegion(-1.0, 1.0, -1.0, 1.0, "unit-disk", _disk),
    "upper-box": SampleRegion(-1.0, 1.0, 0.01, 1.0, "upper-box"),
    "strip-D": SampleRegion(-3.0, 3.0, -1.0, 0.0, "strip-D", lambda x, y: (y > -1.0) & (y < 0.0)),
    "annulus-box": SampleRegion(-3.0, 3.0, -3.0, 3.0, "annulus-box"),
}

DEFAULT_REGION = {
    MapKind.STRETCH_H: "h-core",
    MapKind.DYADIC_F: "lower-box",
    MapKind.DEGREE_G: "unit-disk",
    MapKind.POLY_P: "upper-box",
    MapKind.TRANSCENDENTAL_FT: "strip-D",
}


@dataclass(frozen=True)
class DilatationReport:
    sup_op_norm: float
    sup_local_K: float
    K_hat: float
    n_samples: int
    n_skipped: int
    step: float
    region: str = ""
    min_jac_det: float = math.nan

    def to_dict(self) -> dict:
        return asdict(self)


def estimate_dilatation(spec: MapSpec, region: SampleRegion | str | None = None,
                        n: int = 10_000, step: float = DEFAULT_STEP) -> DilatationReport:
    """Sampled sup of |Df| and |Df|^2/J_f over a low-discrepancy point set.

    Seam-adjacent samples are skipped. ``K_hat = max(16, sup|Df|^2)`` is the
    bound used for the strip map; it is a sampled sup, not a certified one.
    """
    if n < 100:
        raise ValueError("need at least 100 samples")
    if region is None:
        region = DEFAULT_REGION[spec.kind]
    if isinstance(region, str):
        region = REGIONS[region]
    xs, ys = region.points(n)
    a, flagged, _ = _difference_batch(spec, xs, ys, step)
    good = ~flagged
    if not np.any(good):
        raise ValueError(f"every sample in region {region.name!r} is next to a seam")
    a = a[good]
    smax, _ = _singular_values_many(a)
    jac = a[:, 0] * a[:, 3] - a[:, 1] * a[:, 2]
    with np.errstate(divide="ignore", invalid="ignore"):
        local_k = np.where(jac > 0, smax * smax / jac, np.inf)
    m_hat = float(np.max(smax))
    return DilatationReport(
        sup_op_norm=m_hat,
        sup_local_K=float(np.max(local_k)),
        K_hat=max(16.0, m_hat * m_hat),
        n_samples=int(good.sum()),
        n_skipped=int(flagged.sum()),
        step=step,
        region=region.name,
        min_jac_det=float(np.min(jac)),
    )


@functools.lru_cache(maxsize=None)
def default_k_hat(n: int = 100_000, step: float = DEFAULT_STEP) -> float:
    """K_hat for the strip map over {|x| <= y} in S, as used by faithful mode."""
    spec = MapSpec(MapKind.STRETCH_H)
    return estimate_dilatation(spec, "h-core", n, step).K_hat


# -- degree ---------------------------------------------------------------

class WindingError(ValueError):
    pass


def winding_degree(spec: MapSpec, center=0j, radius: float = 10.0, target=0j,
                   n: int = 1024, tol: float = 1e-10, max_depth: int = 40) -> int:
    """Winding number of t -> F(center + radius e^{2 pi i t}) about target.

    Argument increments between consecutive samples are summed on the
    principal branch; any increment above pi/2 is bisected until it is not.
    """
    if n < 256:
        raise ValueError("need at least 256 contour samples")
    c = as_point(center).z
    tgt = as_point(target).z

    def image(t: float) -> complex:
        return evaluate(spec, c + radius * np.exp(2j * np.pi * t)).z - tgt

    ts = np.arange(n + 1) / n
    zs = c + radius * np.exp(2j * np.pi * ts)
    if spec.kind is MapKind.STRETCH_H:
        ws = np.array([image(t) for t in ts])
    else:
        ox, oy = evaluate_many(spec, zs.real, zs.imag)
        ws = ox + 1j * oy - tgt
    ws[-1] = ws[0]  # close the curve exactly

    def check(w: complex) -> None:
        if abs(w) <= tol:
            raise WindingError("target on image curve; enlarge radius")

    def increment(t0: float, w0: complex, t1: float, w1: complex, depth: int) -> float:
        check(w1)
        dphi = math.atan2((w1 / w0).imag, (w1 / w0).real)
        if abs(dphi) <= math.pi / 2:
            return dphi
        if depth >= max_depth:
            raise WindingError("argument increment did not resolve; target may be on the curve")
        tm = 0.5 * (t0 + t1)
        wm = image(tm)
        return (increment(t0, w0, tm, wm, depth + 1)
                + increment(tm, wm, t1, w1, depth + 1))

    check(ws[0])
    total = 0.0
    for k in range(n):
        total += increment(ts[k], ws[k], ts[k + 1], ws[k + 1], 0)
    return int(round(total / (2 * math.pi)))
