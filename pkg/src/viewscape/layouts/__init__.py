"""Per-view layout computation and geometry serialization.

`LayoutContext` caches the viewport-independent work for one dataset
(projections, value arrays, normalized scatter columns, Dorling relaxation)
so that per-viewport evaluation stays cheap during landscape sweeps.
"""

from __future__ import annotations

import numpy as np

from ..core import ContentBox, Viewport, fit_content
from ..data import Dataset, GeoFeatureCollection, Network, Table
from ..projection import ProjectedGeo, make_projection, project
from ..spec import ViewSpec, ViewType
from .charts import (
    DEFAULT_BAR_PITCH,
    DEFAULT_MARK_RADIUS,
    DEFAULT_SCATTER_MARGIN,
    BarLayout,
    HeatmapLayout,
    ScatterLayout,
    bar_layout,
    bars_shown,
    heatmap_layout,
    normalize_column,
    scatter_layout,
    waffle_layout,
    waffle_side_for_viewport,
)
from .geo import (
    CircleLayout,
    GridLayout,
    choropleth_metrics,
    circle_map_layout,
    circle_radii,
    dorling_layout,
    hex_area,
    hex_grid_shape,
    hex_width_for_viewport,
    hexgrid_layout,
)
from .network import (
    DEFAULT_ARC_GUTTER,
    DEFAULT_MATRIX_GUTTER,
    ArcLayout,
    MatrixLayout,
    NodeLinkLayout,
    arc_layout,
    arc_node_pitch,
    matrix_cell_size,
    matrix_layout,
    node_link_layout,
)

__all__ = [
    "LayoutContext", "layout_view", "geometry_to_dict",
    "CircleLayout", "GridLayout", "BarLayout", "ScatterLayout", "HeatmapLayout",
    "MatrixLayout", "ArcLayout", "NodeLinkLayout",
    "circle_map_layout", "dorling_layout", "choropleth_metrics", "hexgrid_layout",
    "waffle_layout", "bar_layout", "scatter_layout", "heatmap_layout",
    "matrix_layout", "arc_layout", "node_link_layout", "project",
]


class LayoutError(ValueError):
    pass


def _projection_key(view: ViewSpec):
    proj = view.params["projection"]
    if isinstance(proj, str):
        return proj, ()
    return proj["name"], tuple(sorted(proj.get("params", {}).items()))


class LayoutContext:
    """Caches viewport-independent derived data for one dataset."""

    def __init__(self, data: Dataset):
        self.data = data
        self._projected: dict = {}
        self._rings: dict = {}
        self._sqrt_values: dict = {}
        self._norm_columns: dict = {}

    # -- geographic ---------------------------------------------------------

    def projected(self, view: ViewSpec) -> ProjectedGeo:
        key = _projection_key(view)
        if key not in self._projected:
            name, params = key
            self._projected[key] = project(self.data, name, dict(params))
        return self._projected[key]

    def projected_rings(self, view: ViewSpec):
        """Fitted-space exterior rings per feature, bbox-shifted (for rendering)."""
        key = _projection_key(view)
        if key not in self._rings:
            name, params = key
            fwd = make_projection(name, dict(params))
            raw = []
            min_x = min_y = float("inf")
            for f in self.data.features:
                rings = [[fwd(lon, lat) for lon, lat in poly[0]] for poly in f.polygons]
                raw.append(rings)
                for ring in rings:
                    for x, y in ring:
                        min_x = min(min_x, x)
                        min_y = min(min_y, y)
            self._rings[key] = [
                [[(x - min_x, y - min_y) for x, y in ring] for ring in rings]
                for rings in raw
            ]
        return self._rings[key]

    def sqrt_values(self, field: str) -> np.ndarray:
        if field not in self._sqrt_values:
            vals = np.asarray(self.data.values(field), dtype=float)
            if (vals < 0).any():
                raise LayoutError(f"field {field!r} has negative values")
            self._sqrt_values[field] = np.sqrt(vals)
        return self._sqrt_values[field]

    # -- tabular ------------------------------------------------------------

    def norm_column(self, field: str):
        if field not in self._norm_columns:
            self._norm_columns[field] = normalize_column(self.data.column_values(field))
        return self._norm_columns[field]

    def scatter_norm(self, x_field: str, y_field: str):
        mx, tx = self.norm_column(x_field)
        my, ty = self.norm_column(y_field)
        keep = mx & my
        return tx[keep], ty[keep], int((~keep).sum())

    def waffle_group_counts(self, view: ViewSpec) -> tuple[int, ...]:
        p = view.params
        n = len(self.data.features)
        if not p.get("group_field"):
            return (n,)
        groups = self.data.categories(p["group_field"])
        order = p.get("group_order") or sorted(set(groups))
        counts = [sum(1 for g in groups if g == name) for name in order]
        return tuple(c for c in counts if c)

    def content_box(self, view: ViewSpec) -> ContentBox | None:
        """Intrinsic content box for aspect-difference constraints."""
        if view.view_type is ViewType.ADJACENCY_MATRIX:
            return ContentBox(1.0, 1.0)
        if "projection" in view.params:
            return self.projected(view).content
        if view.view_type is ViewType.HEX_MAP and isinstance(self.data, GeoFeatureCollection):
            rows, cols = hex_grid_shape(self.data)
            # grid footprint at unit hex width
            return ContentBox(cols + 0.5, (2.0 / 3.0 ** 0.5) * (0.75 * rows + 0.25))
        return None

    # -- shared field extraction -------------------------------------------

    def labels_and_values(self, label_field: str, value_field: str):
        data = self.data
        if isinstance(data, GeoFeatureCollection):
            return data.categories(label_field), data.values(value_field)
        if isinstance(data, Table):
            labels = [str(x) for x in data.column_values(label_field)]
            values = [0.0 if x is None else float(x) for x in data.column_values(value_field)]
            return labels, values
        raise LayoutError("bar charts need geographic or tabular data")


def layout_view(view: ViewSpec, data: Dataset, v: Viewport, ctx: LayoutContext | None = None):
    """Compute the renderable layout for one view at one viewport."""
    ctx = ctx or LayoutContext(data)
    t = view.view_type
    p = view.params

    if t in (ViewType.CIRCLE_MAP, ViewType.DORLING_CARTOGRAM):
        pg = ctx.projected(view)
        values = data.values(p["value_field"])
        cats = data.categories(p["category_field"]) if p.get("category_field") else None
        cl = circle_map_layout(pg, values, v, float(p["circle_scale"]), cats)
        if t is ViewType.DORLING_CARTOGRAM:
            cl = dorling_layout(cl, seed=int(p.get("seed", 0)),
                                max_iterations=int(p.get("max_iterations", 2000)))
        return cl

    if t is ViewType.CHOROPLETH:
        # choropleth "layout" for rendering is the fitted feature rings
        pg = ctx.projected(view)
        fit = fit_content(v, pg.content)
        rings = ctx.projected_rings(view)
        cat_field = p.get("category_field")
        features = []
        for f, feature_rings in zip(data.features, rings):
            cat = f.properties.get(cat_field) if cat_field else None
            fitted = [[(fit.offset_x + x * fit.scale, fit.offset_y + y * fit.scale)
                       for x, y in ring] for ring in feature_rings]
            features.append((f.id, fitted, cat))
        return ("choropleth", fit.scale, tuple(features))

    if t is ViewType.HEX_MAP:
        return hexgrid_layout(data, v, p.get("category_field"))

    if t is ViewType.WAFFLE_CHART:
        ids = data.feature_ids()
        cats = data.categories(p["category_field"])
        groups = data.categories(p["group_field"]) if p.get("group_field") else ["all"] * len(ids)
        return waffle_layout(ids, cats, groups, p.get("group_order", ()), v,
                             p["orientation"], float(p.get("gap", 0.0)))

    if t is ViewType.BAR_CHART:
        labels, values = ctx.labels_and_values(p["label_field"], p["value_field"])
        return bar_layout(labels, values, v, p["orientation"],
                          float(p.get("min_pitch", DEFAULT_BAR_PITCH)))

    if t is ViewType.SCATTERPLOT:
        return scatter_layout(data.column_values(p["x_field"]),
                              data.column_values(p["y_field"]), v,
                              float(p.get("mark_radius", DEFAULT_MARK_RADIUS)),
                              float(p.get("margin", DEFAULT_SCATTER_MARGIN)))

    if t is ViewType.HEATMAP:
        return heatmap_layout(data.column_values(p["x_field"]),
                              data.column_values(p["y_field"]),
                              tuple(p["bins"]), v)

    if t is ViewType.ADJACENCY_MATRIX:
        return matrix_layout(data, v, float(p.get("label_gutter", DEFAULT_MATRIX_GUTTER)))

    if t is ViewType.ARC_DIAGRAM:
        return arc_layout(data, v, float(p.get("label_gutter", DEFAULT_ARC_GUTTER)))

    if t is ViewType.NODE_LINK:
        return node_link_layout(data, v, int(p.get("seed", 0)), int(p.get("iterations", 50)))

    raise LayoutError(f"no layout for view type {t}")


def geometry_to_dict(view: ViewSpec, layout) -> dict:
    """Serialize a layout to the JSON shape the service and playground use."""
    t = view.view_type.value
    if isinstance(layout, CircleLayout):
        return {"type": t, "circles": [
            {"id": fid, "x": x, "y": y, "r": r,
             **({"category": c} if c is not None else {})}
            for fid, x, y, r, c in layout.circles]}
    if isinstance(layout, tuple) and layout and layout[0] == "choropleth":
        _, scale, features = layout
        return {"type": t, "features": [
            {"id": fid, "rings": [[[x, y] for x, y in ring] for ring in rings],
             **({"category": c} if c is not None else {})}
            for fid, rings, c in features]}
    if isinstance(layout, GridLayout):
        return {"type": t, "cell_width": layout.cell_width,
                **({"orientation": layout.orientation} if layout.orientation else {}),
                "cells": [
                    {"id": fid, "x": x, "y": y,
                     **({"category": c} if c is not None else {})}
                    for fid, x, y, c in layout.cells]}
    if isinstance(layout, BarLayout):
        return {"type": t, "orientation": layout.orientation, "pitch": layout.pitch,
                "shown": layout.shown_count, "total": layout.total_count,
                "bars": [{"label": l, "value": val, "length": length}
                         for l, val, length in layout.bars]}
    if isinstance(layout, ScatterLayout):
        return {"type": t, "radius": layout.mark_radius, "dropped": layout.dropped_rows,
                "marks": [[x, y] for x, y, _ in layout.marks]}
    if isinstance(layout, HeatmapLayout):
        return {"type": t, "cell_width": layout.cell_width, "cell_height": layout.cell_height,
                "counts": [list(row) for row in layout.counts]}
    if isinstance(layout, MatrixLayout):
        return {"type": t, "cell_size": layout.cell_size, "gutter": layout.gutter,
                "order": list(layout.order),
                "cells": [[i, j, w] for i, j, w in layout.filled]}
    if isinstance(layout, ArcLayout):
        return {"type": t, "pitch": layout.pitch, "gutter": layout.gutter,
                "nodes": [{"id": nid, "x": x} for nid, x in layout.nodes],
                "arcs": [[i, j, w] for i, j, w in layout.arcs]}
    if isinstance(layout, NodeLinkLayout):
        return {"type": t, "seed": layout.seed,
                "nodes": [{"id": nid, "x": x, "y": y} for nid, x, y in layout.nodes],
                "links": [[i, j, w] for i, j, w in layout.links]}
    raise LayoutError(f"cannot serialize layout {type(layout).__name__}")
