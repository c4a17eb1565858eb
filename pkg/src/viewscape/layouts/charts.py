"""Chart layouts: waffle charts, bar charts, scatterplots, binned heatmaps."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..core import Viewport
from .geo import GridLayout

DEFAULT_BAR_PITCH = 14.0  # px per bar: legible label height plus padding
DEFAULT_MARK_RADIUS = 2.0
DEFAULT_SCATTER_MARGIN = 30.0


@dataclass(frozen=True)
class BarLayout:
    bars: tuple  # (label, value, length px), descending by value
    pitch: float  # px per bar along the cross axis
    orientation: str
    shown_count: int
    total_count: int


@dataclass(frozen=True)
class ScatterLayout:
    marks: tuple  # (x px, y px, radius px)
    mark_radius: float
    dropped_rows: int
    viewport: Viewport


@dataclass(frozen=True)
class HeatmapLayout:
    cell_width: float
    cell_height: float
    counts: tuple  # row-major (ny rows, nx cols) cell counts
    nx: int
    ny: int


def waffle_side_for_viewport(group_counts: Sequence[int], v: Viewport, orientation: str,
                             gap: float = 0.0) -> float:
    """Maximal square side such that all group blocks fit along the orientation axis."""
    if orientation == "horizontal":
        along, across = v.width, v.height
    else:
        along, across = v.height, v.width
    total_gap = gap * (len(group_counts) - 1)

    def fits(s: float) -> bool:
        lanes = math.floor(across / s)
        if lanes < 1:
            return False
        blocks = sum(math.ceil(n / lanes) for n in group_counts)
        return blocks * s + total_gap <= along

    lo, hi = 0.0, min(v.width, v.height)
    if not fits(hi):
        for _ in range(80):
            mid = (lo + hi) / 2.0
            if mid == lo or mid == hi:
                break
            if fits(mid):
                lo = mid
            else:
                hi = mid
        return lo
    return hi


def waffle_layout(ids: Sequence[str], categories: Sequence[str], groups: Sequence[str],
                  group_order: Sequence[str], v: Viewport, orientation: str,
                  gap: float = 0.0) -> GridLayout:
    """Equal squares in per-group blocks stacked along the orientation axis."""
    order = list(group_order) if group_order else sorted(set(groups))
    by_group: dict[str, list[int]] = {g: [] for g in order}
    for i, g in enumerate(groups):
        by_group.setdefault(g, []).append(i)
    counts = [len(by_group[g]) for g in order if by_group[g]]
    s = waffle_side_for_viewport(counts, v, orientation, gap)
    if s <= 0:
        return GridLayout(cell_width=0.0, cells=(), rows=0, cols=0, orientation=orientation)

    horizontal = orientation == "horizontal"
    across = v.height if horizontal else v.width
    lanes = max(1, math.floor(across / s))
    cells = []
    offset = 0.0
    for g in order:
        members = by_group.get(g, [])
        if not members:
            continue
        blocks = math.ceil(len(members) / lanes)
        for j, i in enumerate(members):
            lane, block = j % lanes, j // lanes
            if horizontal:
                x = offset + (block + 0.5) * s
                y = (lane + 0.5) * s
            else:
                x = (lane + 0.5) * s
                y = offset + (block + 0.5) * s
            cells.append((ids[i], x, y, categories[i]))
        offset += blocks * s + gap
    return GridLayout(cell_width=s, cells=tuple(cells), rows=lanes,
                      cols=int(math.ceil(len(ids) / lanes)), orientation=orientation)


def bars_shown(v: Viewport, orientation: str, min_pitch: float, total: int) -> int:
    cross = v.width if orientation == "vertical" else v.height
    return min(int(math.floor(cross / min_pitch)), total)


def bar_layout(labels: Sequence[str], values: Sequence[float], v: Viewport,
               orientation: str, min_pitch: float = DEFAULT_BAR_PITCH) -> BarLayout:
    """Descending bars, truncated to as many as fit at the minimum label pitch."""
    pairs = sorted(zip(labels, values), key=lambda lv: (-lv[1], lv[0]))
    count = bars_shown(v, orientation, min_pitch, len(pairs))
    shown = pairs[:count]
    main = v.height if orientation == "vertical" else v.width
    vmax = max((val for _, val in shown), default=0.0)
    bars = tuple((label, val, (val / vmax) * main if vmax > 0 else 0.0)
                 for label, val in shown)
    cross = v.width if orientation == "vertical" else v.height
    pitch = cross / count if count else 0.0
    return BarLayout(bars=bars, pitch=pitch, orientation=orientation,
                     shown_count=count, total_count=len(pairs))


def scatter_positions(tx: np.ndarray, ty: np.ndarray, v: Viewport,
                      margin: float) -> tuple[np.ndarray, np.ndarray]:
    """Map normalized [0,1] data coordinates into the plot area (y inverted)."""
    ex = v.width - 2.0 * margin
    ey = v.height - 2.0 * margin
    if ex > 0:
        xs = margin + tx * ex
    else:
        xs = np.full_like(tx, v.width / 2.0)
    if ey > 0:
        ys = margin + (1.0 - ty) * ey
    else:
        ys = np.full_like(ty, v.height / 2.0)
    return xs, ys


def normalize_column(values: Sequence) -> tuple[np.ndarray, np.ndarray]:
    """Return (mask of present rows, values scaled to [0, 1])."""
    arr = np.array([math.nan if x is None else float(x) for x in values], dtype=float)
    mask = np.isfinite(arr)
    out = arr.copy()
    lo, hi = (arr[mask].min(), arr[mask].max()) if mask.any() else (0.0, 1.0)
    if hi > lo:
        out = (arr - lo) / (hi - lo)
    else:
        out = np.where(mask, 0.5, arr)
    return mask, out


def scatter_layout(xs: Sequence, ys: Sequence, v: Viewport,
                   mark_radius: float = DEFAULT_MARK_RADIUS,
                   margin: float = DEFAULT_SCATTER_MARGIN) -> ScatterLayout:
    """Fixed-radius marks on linear scales; rows with missing values dropped."""
    mx, tx = normalize_column(xs)
    my, ty = normalize_column(ys)
    keep = mx & my
    px, py = scatter_positions(tx[keep], ty[keep], v, margin)
    marks = tuple((x, y, mark_radius) for x, y in zip(px, py))
    return ScatterLayout(marks=marks, mark_radius=mark_radius,
                         dropped_rows=int((~keep).sum()), viewport=v)


def heatmap_layout(xs: Sequence, ys: Sequence, bins: tuple[int, int],
                   v: Viewport) -> HeatmapLayout:
    """Aggregate points into an nx-by-ny grid of counts covering the viewport."""
    nx, ny = int(bins[0]), int(bins[1])
    if nx < 1 or ny < 1:
        raise ValueError(f"bin counts must be >= 1, got {bins}")
    mx, tx = normalize_column(xs)
    my, ty = normalize_column(ys)
    keep = mx & my
    counts, _, _ = np.histogram2d(tx[keep], ty[keep], bins=[nx, ny],
                                  range=[[0.0, 1.0], [0.0, 1.0]])
    # histogram2d returns x-major; transpose to row-major rows=y
    grid = tuple(tuple(int(c) for c in row) for row in counts.T)
    return HeatmapLayout(cell_width=v.width / nx, cell_height=v.height / ny,
                         counts=grid, nx=nx, ny=ny)
