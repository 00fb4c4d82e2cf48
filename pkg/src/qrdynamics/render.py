"""Binary PPM (P6) pictures of classified grids."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import GridSpec, Label, LabelGrid
from .regions import EscapeSeeds, diamond_vertices

GREEN = (0, 255, 0)
YELLOW = (255, 255, 0)


@dataclass(frozen=True)
class Palette:
    """Escaped pixels fade from white (escape at step 0) to blue at
    ``ramp_length`` steps or more."""

    converged: tuple[int, int, int] = (0, 0, 0)
    undecided: tuple[int, int, int] = (255, 0, 0)
    ramp_length: int = 32

    def escaped(self, n: np.ndarray) -> np.ndarray:
        t = np.minimum(np.asarray(n, dtype=np.float64), self.ramp_length) / self.ramp_length
        level = np.rint(255.0 * (1.0 - t)).astype(np.uint8)
        rgb = np.empty(level.shape + (3,), dtype=np.uint8)
        rgb[..., 0] = level
        rgb[..., 1] = level
        rgb[..., 2] = 255
        return rgb


DEFAULT_PALETTE = Palette()


def colorize(labels: np.ndarray, iters: np.ndarray | None = None,
             palette: Palette = DEFAULT_PALETTE) -> np.ndarray:
    labels = np.asarray(labels)
    if labels.ndim != 2 or labels.size == 0:
        raise ValueError("label matrix must be 2-D and non-empty")
    if iters is None:
        iters = np.zeros(labels.shape, dtype=np.int64)
    rgb = np.empty(labels.shape + (3,), dtype=np.uint8)
    rgb[...] = palette.undecided
    esc = labels == Label.ESCAPED
    rgb[esc] = palette.escaped(np.asarray(iters)[esc])
    rgb[labels == Label.CONVERGED] = palette.converged
    return rgb


def encode_ppm(rgb: np.ndarray) -> bytes:
    rgb = np.ascontiguousarray(rgb, dtype=np.uint8)
    height, width = rgb.shape[:2]
    return f"P6\n{width} {height}\n255\n".encode("ascii") + rgb.tobytes()


def render_image(labels, iters=None, palette: Palette = DEFAULT_PALETTE,
                 overlays=()) -> bytes:
    """PPM bytes for a label matrix (or a :class:`LabelGrid`).

    ``overlays`` is a sequence of (boolean mask, rgb) pairs painted on top in
    order.
    """
    if isinstance(labels, LabelGrid):
        labels, iters = labels.labels, labels.iters
    rgb = colorize(labels, iters, palette)
    for mask, color in overlays:
        rgb[mask] = color
    return encode_ppm(rgb)


def stroke(grid: GridSpec, polyline) -> np.ndarray:
    """Mask of pixels touched by a polyline given in plane coordinates."""
    mask = np.zeros((grid.height, grid.width), dtype=bool)
    pts = [complex(p) if isinstance(p, (int, float, complex)) else complex(*p) for p in polyline]
    for a, b in zip(pts, pts[1:]):
        ra, ca = grid.to_pixel(a)
        rb, cb = grid.to_pixel(b)
        steps = max(2, int(math.ceil(2 * math.hypot(rb - ra, cb - ca))) + 1)
        t = np.linspace(0.0, 1.0, steps)
        fr = ra + t * (rb - ra)
        fc = ca + t * (cb - ca)
        # points on the outer edge of the extent belong to the edge pixels
        ok = (fr >= -0.5) & (fr <= grid.height - 0.5) & (fc >= -0.5) & (fc <= grid.width - 0.5)
        rows = np.clip(np.rint(fr[ok]), 0, grid.height - 1).astype(np.int64)
        cols = np.clip(np.rint(fc[ok]), 0, grid.width - 1).astype(np.int64)
        mask[rows, cols] = True
    return mask


def construction_overlays(grid: GridSpec, diamonds=range(9),
                          seeds: EscapeSeeds | None = None) -> list:
    """Outlines of the diamonds W_k (green) and of I_1, I_2 (yellow)."""
    out = []
    for k in diamonds:
        top, bottom, right, left = diamond_vertices(k)
        ring = [top, right, bottom, left, top]
        m = stroke(grid, [complex(p.x, p.y) for p in ring])
        out.append((m, GREEN))
    if seeds is not None:
        e = seeds.epsilon
        i1 = [0.25, 1.0, 1.0 + 1j * e, 0.25 + 1j * e, 0.25]
        i2 = [0.0, 0.25, 0.25 + 1j * e, e + 1j * e, 0.0]
        out.append((stroke(grid, i1) | stroke(grid, i2), YELLOW))
    return out
