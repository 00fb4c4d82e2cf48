"""Orbit iteration, escape/convergence classification, and numerical checks
of the wandering-domain behaviour of p and ft.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _kernels as K
from .maps import (
    DomainError,
    MapKind,
    MapSpec,
    Mode,
    PlanarPoint,
    as_point,
    dyadic_map,
    evaluate,
    iterate,
    poly_map,
)
from .regions import (
    EscapeSeeds,
    diamond_boundary_distance,
    diamond_center,
    in_any_diamond,
    in_diamond,
    in_I1,
    in_I2,
    sample_boundary,
    sample_I1,
    sample_interior,
)

FIRST_EXIT_CAP = 100_000
LEMMA_MAX_ITER = 100_000
DEFAULT_MAX_ITER = 10_000
DEFAULT_ZERO_TOL = 1e-9
DEFAULT_HORIZON = 10
# escape surrogate for the maps that are not of polynomial type
NON_POLY_RADIUS = 1e6


class Label(enum.IntEnum):
    UNDECIDED = K.UNDECIDED
    ESCAPED = K.ESCAPED
    CONVERGED = K.CONVERGED


def degree_escape_radius(d: int, delta: float) -> float:
    """Radius R with |p(z)| >= 2|z| whenever |z| > R.

    Beyond R_g = max(2, (5/delta)^(1/(d-1))) we have |g(w)| >= 4|w|, and
    |f(z)| >= |z|/2 everywhere, so R = 2 R_g works for p = g o f.
    """
    r_g = max(2.0, (5.0 / delta) ** (1.0 / (d - 1)))
    return max(4.0, 2.0 * r_g)


@dataclass(frozen=True)
class DynamicsConfig:
    escape_radius: float = NON_POLY_RADIUS
    zero_tol: float = DEFAULT_ZERO_TOL
    max_iter: int = DEFAULT_MAX_ITER
    check_horizon: int = DEFAULT_HORIZON

    def __post_init__(self):
        if not self.escape_radius >= 4:
            raise ValueError("escape_radius must be >= 4")
        if not 0 < self.zero_tol < 1e-6:
            raise ValueError("zero_tol must lie in (0, 1e-6)")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.check_horizon < 0:
            raise ValueError("check_horizon must be >= 0")

    @classmethod
    def for_spec(cls, spec: MapSpec, **overrides) -> "DynamicsConfig":
        if spec.kind in (MapKind.POLY_P, MapKind.DEGREE_G):
            overrides.setdefault("escape_radius", degree_escape_radius(spec.d, spec.delta))
        return cls(**overrides)


def check_escape_radius(spec: MapSpec, radius: float, n: int = 4096) -> bool:
    """Sample |g(w)| >= 4|w| on circles just beyond radius/2."""
    ok = True
    for scale in (0.5, 0.75, 1.0, 2.0):
        t = np.arange(n) / n
        w = scale * radius * np.exp(2j * np.pi * t)
        out = np.array([abs(complex(*K.degree_xy(z.real, z.imag, spec.d, spec.delta)))
                        for z in w])
        ok &= bool(np.all(out >= 4 * np.abs(w) * (1 - 1e-12)))
    return ok


@dataclass
class OrbitResult:
    label: Label
    n: int
    final: PlanarPoint
    trace: list[PlanarPoint] | None = None

    def __str__(self):
        if self.label is Label.UNDECIDED:
            return "Undecided"
        name = "Escaped" if self.label is Label.ESCAPED else "ConvergedToZero"
        return f"{name}({self.n})"


def iterate_orbit(spec: MapSpec, z0, cfg: DynamicsConfig | None = None,
                  trace: bool = False) -> OrbitResult:
    """Iterate until |z_n| > escape_radius, |z_n| < zero_tol for
    check_horizon further steps, or max_iter steps have been taken."""
    cfg = cfg or DynamicsConfig.for_spec(spec)
    z0 = as_point(z0)
    if spec.kind is MapKind.STRETCH_H and not 0.5 <= z0.y <= 1.0:
        raise DomainError(f"h orbits must start in the closed strip, got {z0}")
    lab, n, x, y = K.orbit(spec.kind.code, z0.x, z0.y, spec.d, spec.delta,
                           cfg.escape_radius, cfg.zero_tol, cfg.max_iter, cfg.check_horizon)
    pts = iterate(spec, z0, int(n)) if trace else None
    return OrbitResult(Label(lab), int(n), PlanarPoint(x, y), pts)


# -- Lemma: every point right of the diamonds eventually has Re > Im ------

def first_exit_time(z0, cap: int = FIRST_EXIT_CAP) -> int:
    """Least N >= 0 with Re f^N(z0) > Im f^N(z0).

    Requires Re z0 > 0 and z0 outside every closed diamond. Hitting the cap
    would contradict the lemma and is reported as an error.
    """
    z = as_point(z0)
    if not z.x > 0:
        raise ValueError(f"first_exit_time needs Re z > 0, got {z}")
    if in_any_diamond(z, closed=True):
        raise ValueError(f"{z} lies in a closed diamond; its orbit never exits")
    for n in range(cap + 1):
        if z.x > z.y:
            return n
        z = dyadic_map(z)
    raise RuntimeError(f"no exit within {cap} steps from {z0}: lemma violated (bug)")


@dataclass
class LemmaReport:
    z0: PlanarPoint
    N: int
    passed: bool
    final_label: str
    failures: list[str] = field(default_factory=list)
    f_orbit: list[PlanarPoint] = field(default_factory=list)


def verify_lemma_orbit(z0, seeds: EscapeSeeds | None = None,
                       cfg: DynamicsConfig | None = None,
                       spec: MapSpec | None = None) -> LemmaReport:
    """Check the boundary-escape chain for one seed.

    Up to the first exit time N the orbit stays in the unit disk, so p and
    f agree there; f^N(z0) then lies in I_1 or I_2.
    """
    seeds = seeds or EscapeSeeds()
    spec = spec or MapSpec.demo(MapKind.POLY_P)
    z0 = as_point(z0)
    if not 0 <= z0.y <= seeds.epsilon:
        raise ValueError(f"need 0 <= Im z0 <= epsilon={seeds.epsilon}, got {z0}")
    N = first_exit_time(z0, LEMMA_MAX_ITER)
    cfg = cfg or DynamicsConfig.for_spec(spec, max_iter=LEMMA_MAX_ITER)
    f_orbit = [z0]
    p_orbit = [z0]
    for _ in range(N):
        f_orbit.append(dyadic_map(f_orbit[-1]))
        p_orbit.append(poly_map(p_orbit[-1], spec))
    failures = []
    for n, (fz, pz) in enumerate(zip(f_orbit, p_orbit)):
        if not abs(fz) < 1:
            failures.append(f"|f^{n}(z0)| = {abs(fz):.3g} >= 1")
        if abs(fz.z - pz.z) > 1e-14:
            failures.append(f"p^{n}(z0) != f^{n}(z0)")
    last = f_orbit[-1]
    if not (in_I1(last, seeds) or in_I2(last, seeds)):
        failures.append(f"f^N(z0) = {last} is in neither I_1 nor I_2")
    label = iterate_orbit(spec, z0, cfg)
    return LemmaReport(z0, N, not failures, str(label), failures, f_orbit)


# -- diamonds map onto diamonds --------------------------------------------

@dataclass
class DiamondStepReport:
    k: int
    n_samples: int
    max_boundary_deviation: float
    interior_ok: bool
    center_image: PlanarPoint
    passed: bool

    def to_dict(self):
        return asdict(self)


def verify_diamond_step(k: int, n_samples: int = 1000, spec: MapSpec | None = None,
                        tol: float = 1e-12) -> DiamondStepReport:
    """Map the boundary and interior of W_k through p and compare with W_{k+1}."""
    spec = spec or MapSpec.demo(MapKind.POLY_P)
    dev = 0.0
    for w in sample_boundary(k, n_samples):
        dev = max(dev, diamond_boundary_distance(poly_map(w, spec), k + 1))
    interior_ok = all(in_diamond(poly_map(z, spec), k + 1)
                      for z in sample_interior(k, n_samples, seed=k))
    c = poly_map(diamond_center(k), spec)
    center_ok = c == diamond_center(k + 1)
    return DiamondStepReport(k, n_samples, dev, interior_ok, c,
                             dev <= tol and interior_ok and center_ok)


# -- boundary points of the diamonds are on the boundary of I(p) -------------

def right_boundary(j: int, n: int) -> list[PlanarPoint]:
    """n points on the right half of the boundary of W_j, top to bottom."""
    pts = []
    for i in range(n):
        y = 1.0 - 0.5 * i / (n - 1) if n > 1 else 0.75
        pts.append(PlanarPoint(math.ldexp(K.half_width(y), -j), math.ldexp(y, -j)))
    return pts


@dataclass
class BoundaryEscapeReport:
    j: int
    eta: float
    n_samples: int
    escaped_fraction: float
    boundary_escaped_fraction: float
    mirrored_fraction: float
    symmetry_ok: bool
    undecided: int
    passed: bool


def _symmetric_orbit(spec: MapSpec, z: PlanarPoint, n: int, rtol: float = 1e-12) -> bool:
    """p(-conj z_k) == -conj z_{k+1} along the first n steps of the orbit."""
    for _ in range(n):
        nxt = evaluate(spec, z)
        mirrored = evaluate(spec, z.reflect())
        if abs(mirrored.z - nxt.reflect().z) > rtol * max(1.0, abs(nxt)):
            return False
        z = nxt
    return True


def boundary_escape_probe(j: int, eta: float, seeds: EscapeSeeds | None = None,
                          cfg: DynamicsConfig | None = None, n_samples: int = 100,
                          spec: MapSpec | None = None) -> BoundaryEscapeReport:
    """Escape fraction of w + eta for w on the right half of the boundary of W_j.

    Left-side points -conj(w) - eta are handled through the symmetry
    p(-conj z) = -conj p(z), checked step by step along each orbit.
    """
    seeds = seeds or EscapeSeeds()
    spec = spec or MapSpec.demo(MapKind.POLY_P)
    cfg = cfg or DynamicsConfig.for_spec(spec)
    if math.ldexp(1.0, -j) > seeds.epsilon:
        raise ValueError(f"need 2^-j <= epsilon, got j={j}, epsilon={seeds.epsilon}")
    if eta < 0:
        raise ValueError("eta must be >= 0")
    boundary = right_boundary(j, n_samples)
    escaped = undecided = 0
    symmetric = True
    for w in boundary:
        z = PlanarPoint(w.x + eta, w.y)
        res = iterate_orbit(spec, z, cfg)
        escaped += res.label is Label.ESCAPED
        undecided += res.label is Label.UNDECIDED
        symmetric &= _symmetric_orbit(spec, z, res.n)
    on_boundary = sum(iterate_orbit(spec, w, cfg).label is Label.ESCAPED for w in boundary)
    frac = escaped / n_samples
    bfrac = on_boundary / n_samples
    mirrored = frac if symmetric else math.nan
    if eta > 0:
        passed = frac == 1.0 and bfrac == 0.0 and symmetric
    else:
        passed = frac == 0.0 and symmetric
    return BoundaryEscapeReport(j, eta, n_samples, frac, bfrac, mirrored, symmetric,
                                undecided, passed)


# -- the Julia set differs from the boundary of the escaping set -----------

def disk_samples(center: PlanarPoint, radius: float, n: int) -> list[PlanarPoint]:
    """Sunflower (golden-angle) points filling a disk; the centre alone for radius 0."""
    if radius == 0:
        return [center]
    golden = math.pi * (3 - math.sqrt(5))
    return [PlanarPoint(center.x + radius * math.sqrt((i + 0.5) / n) * math.cos(i * golden),
                        center.y + radius * math.sqrt((i + 0.5) / n) * math.sin(i * golden))
            for i in range(n)]


@dataclass
class JuliaProbeReport:
    j: int
    z0: PlanarPoint
    radius: float
    horizon: int
    n_samples: int
    inside: int
    inside_converged: int
    outside: int
    outside_escaped: int
    visits: int
    passed: bool


def julia_distinction_probe(j: int, disk_radius: float, horizon: int = 30,
                            n_samples: int = 500, spec: MapSpec | None = None,
                            cfg: DynamicsConfig | None = None) -> JuliaProbeReport:
    """Sample a disk U about the midpoint of the upper-right edge of W_j.

    Samples off the closed W_j should escape, samples inside converge, and
    no iterate within ``horizon`` steps may enter W_{j-1}.
    """
    if j < 1:
        raise ValueError("need j >= 1")
    spec = spec or MapSpec.demo(MapKind.POLY_P)
    cfg = cfg or DynamicsConfig.for_spec(spec)
    z0 = PlanarPoint(math.ldexp(0.125, -j), math.ldexp(0.875, -j))
    inside = inside_conv = outside = outside_esc = visits = 0
    for z in disk_samples(z0, disk_radius, n_samples):
        w = z
        for _ in range(horizon):
            w = evaluate(spec, w)
            if in_diamond(w, j - 1):
                visits += 1
                break
        res = iterate_orbit(spec, z, cfg)
        if in_diamond(z, j, closed=True):
            inside += 1
            inside_conv += res.label is Label.CONVERGED
        else:
            outside += 1
            outside_esc += res.label is Label.ESCAPED
    passed = visits == 0 and outside_esc == outside and inside_conv == inside
    return JuliaProbeReport(j, z0, disk_radius, horizon, n_samples if disk_radius else 1,
                            inside, inside_conv, outside, outside_esc, visits, passed)


# -- transcendental map ---------------------------------------------------

@dataclass
class GrowthRow:
    r: float
    log_abs: float
    predicted: float
    rel_dev: float
    saturated: bool


def growth_check_ftilde(r_values, spec: MapSpec | None = None) -> list[GrowthRow]:
    """Compare log|ft(-ir)| with r^2 + log(delta).

    ``rel_dev`` is |log|ft(-ir)| - (r^2 + log delta)| / |r^2 + log delta|.
    """
    spec = spec or MapSpec.demo(MapKind.TRANSCENDENTAL_FT)
    if spec.kind is not MapKind.TRANSCENDENTAL_FT:
        raise ValueError("growth check applies to the transcendental map only")
    rows = []
    for r in r_values:
        if r < 2:
            raise ValueError(f"growth check needs r >= 2, got {r}")
        w = evaluate(spec, PlanarPoint(0.0, -float(r)))
        sat = abs(w) >= K.SATURATION * (1 - 1e-12)
        log_abs = math.log(abs(w))
        predicted = r * r + math.log(spec.delta)
        rel = abs(log_abs - predicted) / abs(predicted) if predicted else math.inf
        rows.append(GrowthRow(float(r), log_abs, predicted, rel, sat))
    return rows


@dataclass
class WanderingReport:
    k: int
    n_samples: int
    max_modulus: float
    worst_steps: int
    passed: bool


def bounded_wandering_check(k: int, n_samples: int = 1000, steps: int = 60,
                            spec: MapSpec | None = None, tol: float = 1e-9,
                            seed: int = 0) -> WanderingReport:
    """Orbits of samples of W_k stay in the closed unit disk and drop below tol."""
    spec = spec or MapSpec.demo(MapKind.TRANSCENDENTAL_FT)
    top = 0.0
    worst = 0
    ok = True
    for z in sample_interior(k, n_samples, seed=seed + k):
        reached = None
        for n in range(steps + 1):
            top = max(top, abs(z))
            if reached is None and abs(z) < tol:
                reached = n
            if n < steps:
                z = evaluate(spec, z)
        if reached is None:
            ok = False
            reached = steps + 1
        worst = max(worst, reached)
    return WanderingReport(k, n_samples, top, worst, ok and top <= 1.0)


@dataclass
class SaddleReport:
    axis_converged: int
    axis_samples: int
    real_escaped: int
    real_samples: int
    passed: bool


def saddle_probe(spec: MapSpec | None = None, cfg: DynamicsConfig | None = None,
                 n_samples: int = 50, k_max: int = 5) -> SaddleReport:
    """Orbits on the imaginary axis inside the diamonds tend to 0 while
    orbits from +-t, t in [1/4, 1], on the real axis escape."""
    spec = spec or MapSpec.demo(MapKind.TRANSCENDENTAL_FT)
    cfg = cfg or DynamicsConfig.for_spec(spec)
    axis = [PlanarPoint(0.0, math.ldexp(0.5 + 0.5 * (i + 0.5) / n_samples, -k))
            for k in range(k_max + 1) for i in range(n_samples)]
    real = [PlanarPoint(s * (0.25 + 0.75 * i / (n_samples - 1)), 0.0)
            for s in (1.0, -1.0) for i in range(n_samples)]
    conv = sum(iterate_orbit(spec, z, cfg).label is Label.CONVERGED for z in axis)
    esc = sum(iterate_orbit(spec, z, cfg).label is Label.ESCAPED for z in real)
    return SaddleReport(conv, len(axis), esc, len(real),
                        conv == len(axis) and esc == len(real))


def validate_seeds(seeds: EscapeSeeds, spec: MapSpec | None = None,
                   cfg: DynamicsConfig | None = None, n: int = 1000) -> bool:
    """Every sampled point of I_1 escapes under p."""
    spec = spec or MapSpec.demo(MapKind.POLY_P)
    cfg = cfg or DynamicsConfig.for_spec(spec)
    return all(iterate_orbit(spec, z, cfg).label is Label.ESCAPED
               for z in sample_I1(seeds, n))


# -- grids ----------------------------------------------------------------

@dataclass(frozen=True)
class GridSpec:
    x0: float
    y0: float
    x1: float
    y1: float
    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("grid needs at least one pixel")
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError("grid bounds must satisfy x0 < x1 and y0 < y1")

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Parse ``x0,y0,x1,y1,WxH``."""
        parts = text.split(",")
        if len(parts) != 5 or "x" not in parts[4]:
            raise ValueError(f"grid must look like x0,y0,x1,y1,WxH, got {text!r}")
        w, h = parts[4].lower().split("x")
        return cls(*(float(p) for p in parts[:4]), int(w), int(h))

    def __str__(self):
        return f"{self.x0!r},{self.y0!r},{self.x1!r},{self.y1!r},{self.width}x{self.height}"

    @property
    def dx(self) -> float:
        return (self.x1 - self.x0) / self.width

    @property
    def dy(self) -> float:
        return (self.y1 - self.y0) / self.height

    def pixel_center(self, row: int, col: int) -> PlanarPoint:
        """Row 0 is the top of the picture (largest y)."""
        return PlanarPoint(self.x0 + (col + 0.5) * self.dx, self.y1 - (row + 0.5) * self.dy)

    def to_pixel(self, z) -> tuple[float, float]:
        """Fractional (row, col) of a point."""
        z = as_point(z)
        return (self.y1 - z.y) / self.dy - 0.5, (z.x - self.x0) / self.dx - 0.5


@dataclass
class LabelGrid:
    grid: GridSpec
    labels: np.ndarray      # int8, Label values, row-major, top row first
    iters: np.ndarray       # int64
    final_x: np.ndarray
    final_y: np.ndarray

    def label_at(self, row: int, col: int) -> OrbitResult:
        return OrbitResult(Label(int(self.labels[row, col])), int(self.iters[row, col]),
                           PlanarPoint(float(self.final_x[row, col]),
                                       float(self.final_y[row, col])))

    def counts(self) -> dict[str, int]:
        return {lab.name.lower(): int(np.sum(self.labels == lab)) for lab in Label}


TILE_ROWS = 16


def classify_grid(spec: MapSpec, grid: GridSpec, cfg: DynamicsConfig | None = None,
                  workers: int = 1) -> LabelGrid:
    """Classify the orbit of every pixel centre.

    Rows are cut into fixed tiles and shared among ``workers`` threads; each
    pixel is computed independently, so the result does not depend on the
    worker count.
    """
    cfg = cfg or DynamicsConfig.for_spec(spec)
    if spec.kind is MapKind.STRETCH_H:
        lo = grid.y1 - (grid.height - 0.5) * grid.dy
        hi = grid.y1 - 0.5 * grid.dy
        if lo < 0.5 or hi > 1.0:
            raise DomainError("h grids must lie inside the closed strip 1/2 <= Im z <= 1")
    shape = (grid.height, grid.width)
    labels = np.zeros(shape, dtype=np.int8)
    iters = np.zeros(shape, dtype=np.int64)
    fx = np.zeros(shape)
    fy = np.zeros(shape)

    def run(lo: int) -> None:
        K.classify_rows(spec.kind.code, spec.d, spec.delta, cfg.escape_radius, cfg.zero_tol,
                        cfg.max_iter, cfg.check_horizon, grid.x0, grid.y1, grid.dx, grid.dy,
                        lo, min(lo + TILE_ROWS, grid.height), labels, iters, fx, fy)

    starts = range(0, grid.height, TILE_ROWS)
    if workers <= 1:
        for lo in starts:
            run(lo)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, starts))
    return LabelGrid(grid, labels, iters, fx, fy)


def escaped_components(lg: LabelGrid) -> int:
    """Number of 4-connected components of escaped pixels (qualitative only)."""
    from scipy import ndimage

    _, count = ndimage.label(lg.labels == Label.ESCAPED)
    return int(count)


# -- verification suite ---------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


VERIFY_CHECKS = ("diamond-step", "lemma", "symmetry", "boundary-escape", "julia-probe",
                 "growth", "wandering", "saddle", "seeds")


def run_verification(spec: MapSpec, seeds: EscapeSeeds | None = None,
                     cfg: DynamicsConfig | None = None, eta: float | None = None,
                     checks=None, seed: int = 0) -> list[CheckResult]:
    """Run the selected checks and return one result per check."""
    seeds = seeds or EscapeSeeds()
    if spec.kind is MapKind.POLY_P:
        p_spec = spec
    elif spec.mode is Mode.FAITHFUL:
        p_spec = MapSpec.faithful(MapKind.POLY_P, spec.k_hat)
    else:
        p_spec = MapSpec.demo(MapKind.POLY_P)
    if spec.kind is MapKind.TRANSCENDENTAL_FT:
        ft_spec = spec
    else:
        ft_spec = MapSpec.demo(MapKind.TRANSCENDENTAL_FT)
    cfg = cfg or DynamicsConfig.for_spec(p_spec)
    checks = VERIFY_CHECKS if checks is None else tuple(checks)
    rng = np.random.default_rng(seed)
    out = []
    j = max(1, math.ceil(-math.log2(seeds.epsilon)))
    for name in checks:
        if name == "diamond-step":
            reps = [verify_diamond_step(k, 1000, p_spec) for k in range(11)]
            dev = max(r.max_boundary_deviation for r in reps)
            out.append(CheckResult(name, all(r.passed for r in reps),
                                   f"k=0..10, max boundary deviation {dev:.2e}"))
        elif name == "lemma":
            reps = [verify_lemma_orbit(PlanarPoint(w.x + 1e-3, w.y), seeds, spec=p_spec)
                    for w in right_boundary(j, 20)]
            n_max = max(r.N for r in reps)
            out.append(CheckResult(name, all(r.passed for r in reps),
                                   f"{len(reps)} seeds, max exit time {n_max}"))
        elif name == "symmetry":
            zs = rng.uniform(-3, 3, (10_000, 2))
            err = 0.0
            for x, y in zs:
                a = poly_map(PlanarPoint(-x, y), p_spec)
                b = poly_map(PlanarPoint(x, y), p_spec).reflect()
                err = max(err, abs(a.z - b.z))
            out.append(CheckResult(name, err <= 1e-12, f"max |p(-conj z) + conj p(z)| = {err:.2e}"))
        elif name == "boundary-escape":
            etas = (1e-2, 1e-3, 1e-4) if eta is None else (eta,)
            reps = [boundary_escape_probe(j, e, seeds, cfg, 100, p_spec) for e in etas]
            zero = boundary_escape_probe(j, 0.0, seeds, cfg, 100, p_spec)
            detail = ", ".join(f"eta={r.eta:g}: {100 * r.escaped_fraction:.0f}%" for r in reps)
            out.append(CheckResult(name, all(r.passed for r in reps) and zero.passed,
                                   f"j={j}, {detail}, eta=0: {100 * zero.escaped_fraction:.0f}%"))
        elif name == "julia-probe":
            rep = julia_distinction_probe(6, 1e-3, 30, 500, p_spec, cfg)
            out.append(CheckResult(name, rep.passed,
                                   f"inside {rep.inside_converged}/{rep.inside} converged, "
                                   f"outside {rep.outside_escaped}/{rep.outside} escaped, "
                                   f"visits to W_5: {rep.visits}"))
        elif name == "growth":
            rows = growth_check_ftilde((2.5, 3.0, 3.5), ft_spec)
            worst = max(r.rel_dev for r in rows)
            out.append(CheckResult(name, worst <= 0.1, f"max relative deviation {worst:.3g}"))
        elif name == "wandering":
            reps = [bounded_wandering_check(k, 1000, 60, ft_spec) for k in range(6)]
            out.append(CheckResult(name, all(r.passed for r in reps),
                                   f"max |z| {max(r.max_modulus for r in reps):.3g}, "
                                   f"steps to 1e-9 <= {max(r.worst_steps for r in reps)}"))
        elif name == "saddle":
            rep = saddle_probe(ft_spec)
            out.append(CheckResult(name, rep.passed,
                                   f"axis {rep.axis_converged}/{rep.axis_samples} converged, "
                                   f"real {rep.real_escaped}/{rep.real_samples} escaped"))
        elif name == "seeds":
            ok = validate_seeds(seeds, p_spec, cfg)
            out.append(CheckResult(name, ok, f"1000 samples of I_1 (eps={seeds.epsilon:g})"))
        else:
            raise ValueError(f"unknown check {name!r}")
    return out
