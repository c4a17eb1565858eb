"""Constraint evaluation: measured values, thresholds, pass/fail margins.

Margins are sign-normalized so that positive always means passing, whatever
the comparison direction of the underlying kind. All threshold comparisons
are inclusive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ContentBox, Viewport, aspect_ratio, content_aspect_ratio, fit_content
from .layouts import (
    BarLayout,
    CircleLayout,
    GridLayout,
    LayoutContext,
    MatrixLayout,
    ScatterLayout,
    ArcLayout,
)
from .layouts.charts import DEFAULT_BAR_PITCH, DEFAULT_MARK_RADIUS, DEFAULT_SCATTER_MARGIN, \
    bars_shown, scatter_positions, waffle_side_for_viewport
from .layouts.geo import choropleth_metrics, circle_radii, hex_width_for_viewport, hex_grid_shape
from .layouts.network import DEFAULT_ARC_GUTTER, DEFAULT_MATRIX_GUTTER, arc_node_pitch, \
    matrix_cell_size
from .spec import ConstraintKind, ConstraintSpec, ViewSpec, ViewType


@dataclass(frozen=True)
class ConstraintResult:
    kind: ConstraintKind
    passed: bool
    measured: float
    threshold: float
    margin: float  # positive iff passing

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "passed": self.passed,
                "measured": self.measured, "threshold": self.threshold,
                "margin": self.margin}


def _at_least(kind, measured, threshold) -> ConstraintResult:
    margin = measured - threshold
    return ConstraintResult(kind, measured >= threshold, measured, threshold, margin)


def _at_most(kind, measured, threshold) -> ConstraintResult:
    margin = threshold - measured
    return ConstraintResult(kind, measured <= threshold, measured, threshold, margin)


# ---------------------------------------------------------------------------
# Overplotting metric

def _lens_ratio(d2, rs, rl):
    """Intersection area of two overlapping disks divided by the smaller disk's
    area, for the partial-overlap regime. Works on scalars and arrays alike."""
    d = np.sqrt(d2)
    a_s = rs * rs * np.arccos(np.clip((d2 + rs * rs - rl * rl) / (2.0 * d * rs), -1.0, 1.0))
    a_l = rl * rl * np.arccos(np.clip((d2 + rl * rl - rs * rs) / (2.0 * d * rl), -1.0, 1.0))
    k = (-d + rs + rl) * (d + rs - rl) * (d - rs + rl) * (d + rs + rl)
    lens = a_s + a_l - 0.5 * np.sqrt(np.maximum(k, 0.0))
    return np.clip(lens / (np.pi * rs * rs), 0.0, 1.0)


def pair_overlap(dx: float, dy: float, r1: float, r2: float) -> float:
    """Overlap of two disks in [0, 1]: 0 = disjoint, 1 = smaller fully covered."""
    rs, rl = (r1, r2) if r1 <= r2 else (r2, r1)
    d2 = dx * dx + dy * dy
    sum_r = rs + rl
    if d2 >= sum_r * sum_r:
        return 0.0
    diff_r = rl - rs
    if d2 <= diff_r * diff_r:
        return 1.0
    return float(_lens_ratio(d2, rs, rl))


def overplotting_brute(marks) -> float:
    """O(n^2) reference: mean pairwise overlap over all C(n, 2) pairs."""
    n = len(marks)
    if n < 2:
        return 0.0
    contributions = []
    for i in range(n):
        xi, yi, ri = marks[i]
        for j in range(i + 1, n):
            xj, yj, rj = marks[j]
            contributions.append(pair_overlap(xi - xj, yi - yj, ri, rj))
    return math.fsum(contributions) / (n * (n - 1) // 2)


def overplotting(marks) -> float:
    """Mean pairwise disk overlap, vectorized over all pairs.

    Bit-identical to `overplotting_brute`: the per-pair formula uses the same
    elementwise operations and the total is accumulated with an exact sum.
    """
    n = len(marks)
    if n < 2:
        return 0.0
    arr = np.asarray(marks, dtype=float)
    x, y, r = arr[:, 0], arr[:, 1], arr[:, 2]
    iu, ju = np.triu_indices(n, k=1)
    dx = x[iu] - x[ju]
    dy = y[iu] - y[ju]
    d2 = dx * dx + dy * dy
    rs = np.minimum(r[iu], r[ju])
    rl = np.maximum(r[iu], r[ju])
    sum_r = rs + rl
    diff_r = rl - rs
    values = np.zeros(len(iu))
    contained = d2 <= diff_r * diff_r
    values[contained] = 1.0
    partial = ~contained & (d2 < sum_r * sum_r)
    if partial.any():
        values[partial] = _lens_ratio(d2[partial], rs[partial], rl[partial])
    return math.fsum(values) / (n * (n - 1) // 2)


# ---------------------------------------------------------------------------
# Per-kind evaluators over layouts (used directly in tests and by the
# dispatcher below)

def eval_min_circle_radius(cl: CircleLayout, min_diameter: float,
                           allowed_failure_fraction: float) -> ConstraintResult:
    """measured = fraction of circles with diameter below the threshold."""
    diameters = np.array([2.0 * r for _, _, _, r, _ in cl.circles])
    return _circle_fraction_result(diameters, min_diameter, allowed_failure_fraction)


def _circle_fraction_result(diameters: np.ndarray, min_diameter: float,
                            allowed: float) -> ConstraintResult:
    if len(diameters) == 0:
        raise ValueError("no circles to measure")
    measured = float(np.count_nonzero(diameters < min_diameter)) / len(diameters)
    return ConstraintResult(ConstraintKind.MIN_CIRCLE_RADIUS, measured <= allowed,
                            measured, min_diameter, allowed - measured)


def eval_min_area_size(rendered_areas, min_width: float) -> ConstraintResult:
    if not rendered_areas:
        raise ValueError("no areas to measure")
    measured = math.sqrt(min(rendered_areas))
    return _at_least(ConstraintKind.MIN_AREA_SIZE, measured, min_width)


def eval_min_hex_size(g: GridLayout, min_width: float) -> ConstraintResult:
    return _at_least(ConstraintKind.MIN_HEX_SIZE, g.cell_width, min_width)


def eval_min_square_size(g: GridLayout, min_width: float) -> ConstraintResult:
    return _at_least(ConstraintKind.MIN_SQUARE_SIZE, g.cell_width, min_width)


def eval_min_label_size(m, min_size: float) -> ConstraintResult:
    if isinstance(m, MatrixLayout):
        return _at_least(ConstraintKind.MIN_MATRIX_LABEL_SIZE, m.cell_size, min_size)
    if isinstance(m, ArcLayout):
        return _at_least(ConstraintKind.MIN_ARC_LABEL_SIZE, m.pitch, min_size)
    raise TypeError(f"label-size constraint needs a matrix or arc layout, got {type(m).__name__}")


def eval_max_overplotting(m: ScatterLayout, max_value: float) -> ConstraintResult:
    return _at_most(ConstraintKind.MAX_OVERPLOTTING, overplotting(m.marks), max_value)


def eval_aspect(kind: ConstraintKind, v: Viewport, content: ContentBox | None,
                threshold: float) -> ConstraintResult:
    ar = aspect_ratio(v)
    if kind is ConstraintKind.MIN_ASPECT_RATIO:
        return _at_least(kind, ar, threshold)
    if kind is ConstraintKind.MAX_ASPECT_RATIO:
        return _at_most(kind, ar, threshold)
    if kind is ConstraintKind.MAX_ASPECT_RATIO_DIFF:
        if content is None:
            raise ValueError("aspect-difference constraint needs a content box")
        arc = content_aspect_ratio(content)
        measured = max(ar / arc, arc / ar)
        limit = 1.0 + threshold
        return ConstraintResult(kind, measured <= limit, measured, threshold, limit - measured)
    raise ValueError(f"{kind} is not an aspect kind")


def eval_min_bar_count(m: BarLayout, min_count: float) -> ConstraintResult:
    return _at_least(ConstraintKind.MIN_BAR_COUNT, float(m.shown_count), min_count)


# ---------------------------------------------------------------------------
# Dispatcher: evaluate a ConstraintSpec for a view at a viewport without
# building more layout than the metric needs.

def evaluate_constraint(c: ConstraintSpec, view: ViewSpec, data, v: Viewport,
                        ctx: LayoutContext | None = None) -> ConstraintResult:
    ctx = ctx or LayoutContext(data)
    kind = c.kind
    p = view.params

    if kind is ConstraintKind.MIN_CIRCLE_RADIUS:
        pg = ctx.projected(view)
        scale = fit_content(v, pg.content).scale
        radii = float(p["circle_scale"]) * ctx.sqrt_values(p["value_field"]) * scale
        diameters = 2.0 * radii
        return _circle_fraction_result(diameters, c.threshold, c.allowed_failure_fraction)

    if kind is ConstraintKind.MIN_AREA_SIZE:
        smallest, _ = choropleth_metrics(ctx.projected(view), v)
        return _at_least(kind, math.sqrt(smallest), c.threshold)

    if kind is ConstraintKind.MIN_HEX_SIZE:
        rows, cols = hex_grid_shape(ctx.data)
        return _at_least(kind, hex_width_for_viewport(rows, cols, v), c.threshold)

    if kind is ConstraintKind.MIN_SQUARE_SIZE:
        counts = ctx.waffle_group_counts(view)
        side = waffle_side_for_viewport(counts, v, p["orientation"], float(p.get("gap", 0.0)))
        return _at_least(kind, side, c.threshold)

    if kind is ConstraintKind.MIN_MATRIX_LABEL_SIZE:
        cell = matrix_cell_size(ctx.data, v, float(p.get("label_gutter", DEFAULT_MATRIX_GUTTER)))
        return _at_least(kind, cell, c.threshold)

    if kind is ConstraintKind.MIN_ARC_LABEL_SIZE:
        pitch = arc_node_pitch(ctx.data, v, float(p.get("label_gutter", DEFAULT_ARC_GUTTER)))
        return _at_least(kind, pitch, c.threshold)

    if kind is ConstraintKind.MAX_OVERPLOTTING:
        tx, ty, _ = ctx.scatter_norm(p["x_field"], p["y_field"])
        margin = float(p.get("margin", DEFAULT_SCATTER_MARGIN))
        radius = float(p.get("mark_radius", DEFAULT_MARK_RADIUS))
        xs, ys = scatter_positions(tx, ty, v, margin)
        marks = np.column_stack([xs, ys, np.full(len(xs), radius)])
        return _at_most(kind, overplotting(marks), c.threshold)

    if kind in (ConstraintKind.MIN_ASPECT_RATIO, ConstraintKind.MAX_ASPECT_RATIO,
                ConstraintKind.MAX_ASPECT_RATIO_DIFF):
        content = ctx.content_box(view) if kind is ConstraintKind.MAX_ASPECT_RATIO_DIFF else None
        return eval_aspect(kind, v, content, c.threshold)

    if kind is ConstraintKind.MIN_BAR_COUNT:
        labels, _ = ctx.labels_and_values(p["label_field"], p["value_field"])
        shown = bars_shown(v, p["orientation"], float(p.get("min_pitch", DEFAULT_BAR_PITCH)),
                           len(labels))
        return _at_least(kind, float(shown), c.threshold)

    raise ValueError(f"no evaluator for constraint kind {kind}")
