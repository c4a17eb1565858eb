"""Geographic view layouts: circle maps, Dorling cartograms, choropleths, hex maps."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..core import ContentBox, Viewport, fit_content
from ..data import GeoFeatureCollection
from ..projection import ProjectedGeo


@dataclass(frozen=True)
class CircleLayout:
    """Value-scaled circles over a fitted map."""

    circles: tuple  # (feature id, x px, y px, radius px, category)
    map_scale: float
    offset_x: float
    offset_y: float
    viewport: Viewport
    content: ContentBox


@dataclass(frozen=True)
class GridLayout:
    """Equal-size cell layouts (hex maps, waffle charts)."""

    cell_width: float  # hex flat-to-flat width or square side, px
    cells: tuple  # (feature id, x px, y px, category)
    rows: int
    cols: int
    orientation: Optional[str] = None


def circle_radii(values: Sequence[float], k: float, scale: float) -> np.ndarray:
    """radius_i = k * sqrt(value_i) * scale"""
    return k * np.sqrt(np.asarray(values, dtype=float)) * scale


def circle_map_layout(pg: ProjectedGeo, values: Sequence[float], v: Viewport, k: float,
                      categories: Optional[Sequence[str]] = None) -> CircleLayout:
    """Fit the projected map into the viewport and place one circle per feature."""
    if min(values) < 0:
        raise ValueError("circle values must be non-negative")
    fit = fit_content(v, pg.content)
    radii = circle_radii(values, k, fit.scale)
    cats = categories if categories is not None else [None] * len(values)
    circles = tuple(
        (fid, fit.offset_x + cx * fit.scale, fit.offset_y + cy * fit.scale, r, cat)
        for fid, (cx, cy), r, cat in zip(pg.feature_ids, pg.centroids, radii, cats)
    )
    return CircleLayout(circles=circles, map_scale=fit.scale,
                        offset_x=fit.offset_x, offset_y=fit.offset_y,
                        viewport=v, content=pg.content)


# Dorling relaxation operates in content units, so the displaced positions are
# shared across viewports; keyed by the normalized inputs.
_DORLING_CACHE: dict = {}

_SEPARATION_DAMPING = 0.5
_ATTRACTION = 0.02


def _dorling_relax(pos0: np.ndarray, radii: np.ndarray, seed: int,
                   max_iterations: int, eps: float) -> tuple[np.ndarray, float]:
    """Iterative pairwise collision resolution with centroid attraction.

    Returns the relaxed positions and the residual maximum overlap.
    """
    n = len(radii)
    pos = pos0.copy()
    rsum = radii[:, None] + radii[None, :]
    np.fill_diagonal(rsum, 0.0)
    rng = np.random.RandomState(seed)
    jitter = rng.uniform(0, 2 * math.pi, size=(n, n))
    jitter = np.triu(jitter, 1)
    jitter = jitter + jitter.T  # symmetric pairwise fallback directions

    max_overlap = 0.0
    for it in range(max_iterations):
        diff = pos[:, None, :] - pos[None, :, :]
        d = np.sqrt(np.sum(diff * diff, axis=2))
        overlap = rsum - d
        np.fill_diagonal(overlap, -1.0)
        max_overlap = float(overlap.max(initial=0.0))
        attracting = it < max_iterations // 2
        if max_overlap <= eps and not attracting:
            break
        mask = overlap > 0
        if mask.any():
            with np.errstate(invalid="ignore", divide="ignore"):
                ux = np.where(d > 0, diff[:, :, 0] / d, np.cos(jitter))
                uy = np.where(d > 0, diff[:, :, 1] / d, np.sin(jitter))
            push = np.where(mask, overlap, 0.0) * _SEPARATION_DAMPING * 0.5
            pos[:, 0] += np.sum(ux * push, axis=1)
            pos[:, 1] += np.sum(uy * push, axis=1)
        # attraction back to the geographic centroid, released in the second
        # half of the budget so separation can win
        if attracting:
            pos += _ATTRACTION * (pos0 - pos)
        elif not mask.any():
            break
    return pos, max_overlap


def dorling_layout(cl: CircleLayout, seed: int = 0, max_iterations: int = 2000,
                   epsilon: float = 0.5) -> CircleLayout:
    """Displace circles so they no longer overlap, staying near their centroids.

    The relaxation runs once in content units (cached), then is rescaled per
    viewport, so normalized positions are identical across viewport sizes.
    """
    s = cl.map_scale
    norm_pos = np.array([[(x - cl.offset_x) / s, (y - cl.offset_y) / s]
                         for _, x, y, _, _ in cl.circles])
    norm_r = np.array([r / s for _, _, _, r, _ in cl.circles])
    # convergence threshold in content units, small enough that the residual
    # stays far below `epsilon` px at any on-screen scale
    eps_c = 1e-5 * (cl.content.width + cl.content.height)

    key = (norm_pos.tobytes(), norm_r.tobytes(), seed, max_iterations)
    cached = _DORLING_CACHE.get(key)
    if cached is None:
        relaxed, residual = _dorling_relax(norm_pos, norm_r, seed, max_iterations, eps_c)
        if residual > eps_c:
            warnings.warn(f"dorling relaxation did not converge: residual overlap "
                          f"{residual:.3g} content units after {max_iterations} iterations")
        _DORLING_CACHE[key] = relaxed
        cached = relaxed

    circles = tuple(
        (fid, cl.offset_x + px * s, cl.offset_y + py * s, r, cat)
        for (fid, _, _, r, cat), (px, py) in zip(cl.circles, cached)
    )
    return CircleLayout(circles=circles, map_scale=s, offset_x=cl.offset_x,
                        offset_y=cl.offset_y, viewport=cl.viewport, content=cl.content)


def choropleth_metrics(pg: ProjectedGeo, v: Viewport) -> tuple[float, list[float]]:
    """Rendered (on-screen) polygon areas in px^2: projected area * scale^2.

    Returns (smallest rendered area, all rendered areas in feature order).
    """
    if not pg.areas:
        raise ValueError("no features to measure")
    fit = fit_content(v, pg.content)
    rendered = [a * fit.scale * fit.scale for a in pg.areas]
    return min(rendered), rendered


def hex_grid_shape(geo: GeoFeatureCollection) -> tuple[int, int]:
    if geo.hex_coords is None:
        raise ValueError("dataset has no hex grid coordinates")
    rows = max(r for r, _ in geo.hex_coords.values()) + 1
    cols = max(c for _, c in geo.hex_coords.values()) + 1
    return rows, cols


def hex_width_for_viewport(rows: int, cols: int, v: Viewport) -> float:
    """Maximal flat-to-flat hex width such that an offset grid fits the viewport."""
    # offset rows shift by w/2, so the grid is (cols + 0.5) hexes wide; with
    # pointy-top hexes of height 2w/sqrt(3), vertical pitch is 3/4 height
    w_from_width = v.width / (cols + 0.5)
    w_from_height = v.height * math.sqrt(3.0) / (1.5 * rows + 0.5)
    return min(w_from_width, w_from_height)


def hex_area(width: float) -> float:
    """Area of a regular hexagon with flat-to-flat width w: (sqrt(3)/2) w^2."""
    return math.sqrt(3.0) / 2.0 * width * width


def hexgrid_layout(geo: GeoFeatureCollection, v: Viewport,
                   category_field: Optional[str] = None) -> GridLayout:
    """Lay out one equal-size hexagon per feature on its (row, col) grid cell."""
    rows, cols = hex_grid_shape(geo)
    w = hex_width_for_viewport(rows, cols, v)
    hh = 2.0 * w / math.sqrt(3.0)
    grid_w = (cols + 0.5) * w
    grid_h = hh * (0.75 * rows + 0.25)
    ox = (v.width - grid_w) / 2.0
    oy = (v.height - grid_h) / 2.0
    cells = []
    for f in geo.features:
        r, c = geo.hex_coords[f.id]
        x = ox + (c + 0.5 + (0.5 if r % 2 else 0.0)) * w
        y = oy + hh / 2.0 + r * 0.75 * hh
        cat = f.properties.get(category_field) if category_field else None
        cells.append((f.id, x, y, cat))
    return GridLayout(cell_width=w, cells=tuple(cells), rows=rows, cols=cols)
