"""Per-view layout computations."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from viewscape.core import Viewport, fit_content
from viewscape.layouts import (
    arc_layout,
    bar_layout,
    circle_map_layout,
    dorling_layout,
    heatmap_layout,
    hexgrid_layout,
    matrix_layout,
    node_link_layout,
    scatter_layout,
    waffle_layout,
)
from viewscape.layouts.charts import bars_shown, scatter_positions, waffle_side_for_viewport
from viewscape.layouts.geo import (
    choropleth_metrics,
    circle_radii,
    hex_area,
    hex_grid_shape,
    hex_width_for_viewport,
)
from viewscape.layouts.network import arc_node_pitch, matrix_cell_size


# -- circle maps -------------------------------------------------------------

def test_circle_radius_formula():
    assert list(circle_radii([4.0, 9.0], k=2.0, scale=3.0)) == [12.0, 18.0]


def test_circle_map_positions_follow_fit(world, world_ctx, spec_population):
    view = spec_population.views[0]
    pg = world_ctx.projected(view)
    v = Viewport(720, 360)
    cl = circle_map_layout(pg, world.values("population"), v,
                           float(view.params["circle_scale"]))
    fit = fit_content(v, pg.content)
    assert cl.map_scale == fit.scale == 2.0
    fid, x, y, r, _ = cl.circles[0]
    cx, cy = pg.centroids[0]
    assert x == fit.offset_x + cx * 2.0
    assert y == fit.offset_y + cy * 2.0


def test_circle_map_rejects_negative_values(world_ctx, spec_population):
    view = spec_population.views[0]
    pg = world_ctx.projected(view)
    with pytest.raises(ValueError):
        circle_map_layout(pg, [-1.0] * len(pg.feature_ids), Viewport(100, 100), 1.0)


# -- Dorling cartograms ------------------------------------------------------

@pytest.fixture(scope="module")
def world_dorling(world, world_ctx, spec_population):
    view = spec_population.views[1]
    pg = world_ctx.projected(view)
    values = world.values("population")
    k = float(view.params["circle_scale"])

    def make(v: Viewport):
        return dorling_layout(circle_map_layout(pg, values, v, k), seed=7)

    return make


def _max_overlap_px(cl):
    pts = np.array([[x, y] for _, x, y, _, _ in cl.circles])
    rs = np.array([r for _, _, _, r, _ in cl.circles])
    d = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2))
    overlap = rs[:, None] + rs[None, :] - d
    np.fill_diagonal(overlap, -np.inf)
    return float(overlap.max())


def test_dorling_removes_overlap(world_dorling):
    assert _max_overlap_px(world_dorling(Viewport(800, 400))) <= 0.5


def test_dorling_deterministic(world_dorling):
    a = world_dorling(Viewport(800, 400))
    b = world_dorling(Viewport(800, 400))
    assert a.circles == b.circles


def test_dorling_scale_invariant_normalized_positions(world_dorling):
    a = world_dorling(Viewport(500, 400))
    b = world_dorling(Viewport(1000, 800))

    def norm(cl):
        return np.array([[(x - cl.offset_x) / cl.map_scale,
                          (y - cl.offset_y) / cl.map_scale]
                         for _, x, y, _, _ in cl.circles])

    assert np.abs(norm(a) - norm(b)).max() < 1e-9


def test_dorling_preserves_radii(world_dorling, world, world_ctx, spec_population):
    view = spec_population.views[1]
    pg = world_ctx.projected(view)
    base = circle_map_layout(pg, world.values("population"), Viewport(800, 400),
                             float(view.params["circle_scale"]))
    relaxed = world_dorling(Viewport(800, 400))
    assert [r for *_, r, _ in base.circles] == [r for *_, r, _ in relaxed.circles]


# -- choropleths --------------------------------------------------------------

def test_choropleth_areas_scale_quadratically(uk_ctx, spec_uk):
    pg = uk_ctx.projected(spec_uk.views[0])
    small, areas = choropleth_metrics(pg, Viewport(400, 800))
    small2, areas2 = choropleth_metrics(pg, Viewport(800, 1600))
    assert small2 == pytest.approx(4.0 * small, rel=1e-12)
    assert areas2[17] == pytest.approx(4.0 * areas[17], rel=1e-12)


# -- hex maps -----------------------------------------------------------------

def test_hex_area_formula():
    assert hex_area(5.0) == pytest.approx(math.sqrt(3.0) / 2.0 * 25.0)


def test_hex_width_limits():
    # 29 rows x 23 cols: at 235 wide the width bound (235 / 23.5 = 10) wins
    assert hex_width_for_viewport(29, 23, Viewport(235, 1000)) == pytest.approx(10.0)
    # a short viewport flips to the height bound
    assert hex_width_for_viewport(29, 23, Viewport(1000, 44)) == \
        pytest.approx(44 * math.sqrt(3.0) / 44.0)


def test_hexgrid_layout_covers_all_features(uk):
    rows, cols = hex_grid_shape(uk)
    assert (rows, cols) == (29, 23)
    g = hexgrid_layout(uk, Viewport(470, 600), "party")
    assert len(g.cells) == 650
    xs = [x for _, x, _, _ in g.cells]
    ys = [y for _, _, y, _ in g.cells]
    assert 0 <= min(xs) and max(xs) <= 470
    assert 0 <= min(ys) and max(ys) <= 600


# -- waffle charts ------------------------------------------------------------

def test_waffle_side_fits_definition(uk, uk_ctx, spec_uk):
    view = spec_uk.views[2]
    counts = uk_ctx.waffle_group_counts(view)
    v = Viewport(300, 200)
    s = waffle_side_for_viewport(counts, v, "horizontal")
    lanes = math.floor(200 / s)
    blocks = sum(math.ceil(n / lanes) for n in counts)
    assert blocks * s <= 300 + 1e-9
    # a slightly larger square must no longer fit
    s2 = s * 1.01
    lanes2 = math.floor(200 / s2)
    blocks2 = sum(math.ceil(n / lanes2) for n in counts) if lanes2 else math.inf
    assert lanes2 < 1 or blocks2 * s2 > 300


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=20, max_value=1200), st.floats(min_value=20, max_value=1200),
       st.floats(min_value=1.0, max_value=3.0))
def test_waffle_side_monotone_in_viewport(w, h, grow):
    counts = (533, 59, 40, 18)
    s1 = waffle_side_for_viewport(counts, Viewport(w, h), "vertical")
    s2 = waffle_side_for_viewport(counts, Viewport(w * grow, h * grow), "vertical")
    assert s2 >= s1 - 1e-9


def test_waffle_layout_groups_ordered(uk):
    ids = uk.feature_ids()
    cats = uk.categories("party")
    groups = uk.categories("nation")
    order = ("England", "Scotland", "Wales", "Northern Ireland")
    g = waffle_layout(ids, cats, groups, order, Viewport(600, 300), "horizontal")
    assert len(g.cells) == 650
    by_id = {fid: x for fid, x, _, _ in g.cells}
    # England block sits left of the Northern Ireland block
    eng = [by_id[f.id] for f in uk.features if f.properties["nation"] == "England"]
    ni = [by_id[f.id] for f in uk.features if f.properties["nation"] == "Northern Ireland"]
    assert max(eng) < min(ni)


# -- bar charts ---------------------------------------------------------------

def test_bars_shown_formula():
    assert bars_shown(Viewport(400, 600), "vertical", 14.0, 258) == 28
    assert bars_shown(Viewport(400, 600), "horizontal", 14.0, 258) == 42
    assert bars_shown(Viewport(4000, 600), "vertical", 14.0, 10) == 10


def test_bar_layout_keeps_top_n_descending(world):
    labels = world.categories("name")
    values = world.values("population")
    bl = bar_layout(labels, values, Viewport(400, 600), "vertical")
    assert bl.shown_count == 28
    top = sorted(values, reverse=True)[:28]
    assert [v for _, v, _ in bl.bars] == top
    # longest bar spans the main axis
    assert bl.bars[0][2] == pytest.approx(600.0)
    assert bl.pitch == pytest.approx(400 / 28)


# -- scatterplots -------------------------------------------------------------

def test_scatter_extent_corners():
    sl = scatter_layout([0.0, 10.0], [0.0, 5.0], Viewport(200, 100), margin=30.0)
    assert sl.marks[0][:2] == (30.0, 70.0)   # data minimum: bottom-left
    assert sl.marks[1][:2] == (170.0, 30.0)  # data maximum: top-right


def test_scatter_drops_missing_rows():
    sl = scatter_layout([1.0, None, 3.0], [1.0, 2.0, None], Viewport(200, 100))
    assert len(sl.marks) == 1
    assert sl.dropped_rows == 2


def test_scatter_order_preserved_across_viewports(movies):
    xs = movies.column_values("rating_critics")
    ys = movies.column_values("rating_audience")
    a = scatter_layout(xs, ys, Viewport(300, 200))
    b = scatter_layout(xs, ys, Viewport(900, 700))
    ax = [m[0] for m in a.marks]
    bx = [m[0] for m in b.marks]
    assert np.all(np.argsort(ax, kind="stable") == np.argsort(bx, kind="stable"))


def test_scatter_positions_monotone_in_width():
    tx = np.array([0.2, 0.8])
    ty = np.array([0.5, 0.5])
    x1, _ = scatter_positions(tx, ty, Viewport(100, 100), 30.0)
    x2, _ = scatter_positions(tx, ty, Viewport(200, 100), 30.0)
    assert x2[1] - x2[0] >= x1[1] - x1[0]


# -- heatmaps -----------------------------------------------------------------

def test_heatmap_conserves_counts(movies):
    hm = heatmap_layout(movies.column_values("rating_critics"),
                        movies.column_values("rating_audience"), (20, 20),
                        Viewport(400, 300))
    assert sum(sum(row) for row in hm.counts) == 100
    assert hm.cell_width == 20.0
    assert hm.cell_height == 15.0
    assert len(hm.counts) == 20 and len(hm.counts[0]) == 20


# -- networks -----------------------------------------------------------------

def test_matrix_cell_size_formula(lesmis):
    assert matrix_cell_size(lesmis, Viewport(800, 700)) == pytest.approx((700 - 100) / 77)
    m = matrix_layout(lesmis, Viewport(800, 700))
    assert len(m.order) == 77
    # symmetric fill: every link appears twice
    assert len(m.filled) == 2 * len(lesmis.links)


def test_arc_pitch_independent_of_height(lesmis):
    p1 = arc_node_pitch(lesmis, Viewport(600, 100))
    p2 = arc_node_pitch(lesmis, Viewport(600, 900))
    assert p1 == p2 == pytest.approx((600 - 60) / 77)
    al = arc_layout(lesmis, Viewport(600, 300))
    xs = [x for _, x in al.nodes]
    assert xs == sorted(xs)


def test_node_link_deterministic_and_bounded(lesmis):
    a = node_link_layout(lesmis, Viewport(640, 480), seed=3)
    b = node_link_layout(lesmis, Viewport(640, 480), seed=3)
    c = node_link_layout(lesmis, Viewport(640, 480), seed=4)
    assert a.nodes == b.nodes
    assert a.nodes != c.nodes
    for _, x, y in a.nodes:
        assert 0 <= x <= 640 and 0 <= y <= 480
