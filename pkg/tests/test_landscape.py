"""View landscapes: rasterization, breakpoints, diffs, serialization."""

import numpy as np
import pytest

from viewscape.core import Viewport
from viewscape.landscape import (
    FALLBACK_LABEL,
    ViewLandscape,
    compute_landscape,
    dataset_hash,
    diff_landscape,
    extract_breakpoints,
    landscape_from_dict,
    landscape_to_dict,
    spec_hash,
)
from viewscape.selector import select_view
from viewscape.spec import LandscapeRegion


def _mini_region(step=16.0):
    return LandscapeRegion(w_min=0.0, w_max=640.0, h_min=0.0, h_max=480.0, step=step)


def test_modes_agree_on_network_spec(lesmis, lesmis_ctx, spec_network):
    region = _mini_region()
    fast = compute_landscape(spec_network, lesmis, region=region,
                             mode="monotone_fast", ctx=lesmis_ctx)
    full = compute_landscape(spec_network, lesmis, region=region,
                             mode="full_scan", ctx=lesmis_ctx)
    assert (fast.labels == full.labels).all()
    assert fast.label_names == full.label_names


def test_cells_sample_their_min_corner(lesmis, lesmis_ctx, spec_network):
    region = _mini_region()
    land = compute_landscape(spec_network, lesmis, region=region, ctx=lesmis_ctx)
    for (i, j) in [(3, 5), (20, 11), (39, 29)]:
        w, h = land.cell_coords(i, j)
        assert w == region.w_min + i * region.step
        assert h == region.h_min + j * region.step
        sel = select_view(spec_network, lesmis, Viewport(w, h), lesmis_ctx)
        expected = FALLBACK_LABEL if sel.fallback_used else sel.selected_view_id
        assert land.label_names[land.labels[j, i]] == expected


def test_zero_coordinate_cells_use_minimal_viewport(lesmis, lesmis_ctx, spec_network):
    land = compute_landscape(spec_network, lesmis, region=_mini_region(), ctx=lesmis_ctx)
    w0, h0 = land.cell_coords(0, 0)
    assert w0 == 1.0 and h0 == 1.0  # not 0: a viewport must have positive extent


def test_area_shares_sum_to_one(lesmis, lesmis_ctx, spec_network):
    land = compute_landscape(spec_network, lesmis, region=_mini_region(), ctx=lesmis_ctx)
    assert sum(land.area_shares().values()) == pytest.approx(1.0)


def test_labels_are_read_only(lesmis, lesmis_ctx, spec_network):
    land = compute_landscape(spec_network, lesmis, region=_mini_region(), ctx=lesmis_ctx)
    with pytest.raises(ValueError):
        land.labels[0, 0] = 0


def test_provenance_hashes(lesmis, lesmis_ctx, spec_network, spec_movies, movies):
    land = compute_landscape(spec_network, lesmis, region=_mini_region(), ctx=lesmis_ctx)
    assert land.provenance["spec_hash"] == spec_hash(spec_network)
    assert land.provenance["dataset_hash"] == dataset_hash(lesmis)
    assert spec_hash(spec_network) != spec_hash(spec_movies)
    assert dataset_hash(lesmis) != dataset_hash(movies)
    assert len(land.provenance["spec_hash"]) == 16


def test_rle_roundtrip(lesmis, lesmis_ctx, spec_network):
    land = compute_landscape(spec_network, lesmis, region=_mini_region(), ctx=lesmis_ctx)
    again = landscape_from_dict(landscape_to_dict(land))
    assert (again.labels == land.labels).all()
    assert again.label_names == land.label_names
    assert again.region == land.region
    assert again.provenance == land.provenance


def test_diff_self_is_zero(lesmis, lesmis_ctx, spec_network):
    land = compute_landscape(spec_network, lesmis, region=_mini_region(), ctx=lesmis_ctx)
    report = diff_landscape(land, land)
    assert report.changed_fraction == 0.0
    assert all(d == 0.0 for d in report.per_view_delta.values())


def test_diff_rejects_mismatched_regions(lesmis, lesmis_ctx, spec_network):
    a = compute_landscape(spec_network, lesmis, region=_mini_region(16.0), ctx=lesmis_ctx)
    b = compute_landscape(spec_network, lesmis, region=_mini_region(32.0), ctx=lesmis_ctx)
    with pytest.raises(ValueError):
        diff_landscape(a, b)


def test_diff_compares_by_label_name(lesmis, lesmis_ctx, spec_network):
    land = compute_landscape(spec_network, lesmis, region=_mini_region(), ctx=lesmis_ctx)
    # same grid with label table reordered: still identical cell-for-cell
    perm = [1, 0] + list(range(2, len(land.label_names)))
    inv = np.argsort(perm)
    relabeled = ViewLandscape(
        region=land.region,
        labels=np.asarray(inv[land.labels], dtype=np.int16),
        label_names=tuple(land.label_names[k] for k in perm),
        provenance=land.provenance)
    assert diff_landscape(land, relabeled).changed_fraction == 0.0


def test_unknown_mode_rejected(lesmis, spec_network):
    with pytest.raises(ValueError):
        compute_landscape(spec_network, lesmis, mode="psychic")


# -- breakpoint extraction ----------------------------------------------------

def _synthetic(labels, names, step=10.0):
    arr = np.asarray(labels, dtype=np.int16)
    ny, nx = arr.shape
    region = LandscapeRegion(0.0, nx * step, 0.0, ny * step, step)
    arr.flags.writeable = False
    return ViewLandscape(region=region, labels=arr, label_names=names)


def test_breakpoints_vertical_boundary():
    land = _synthetic([[0, 0, 1, 1], [0, 0, 1, 1]], ("a", "b"))
    bp = extract_breakpoints(land)
    assert set(bp.boundaries) == {("a", "b")}
    polys = bp.boundaries[("a", "b")]
    assert len(polys) == 1
    # a straight boundary collapses to its two endpoints at x = 20
    assert polys[0] == [(20.0, 0.0), (20.0, 20.0)]
    assert bp.area_shares == {"a": 0.5, "b": 0.5}


def test_breakpoints_staircase():
    land = _synthetic([[0, 1, 1], [0, 0, 1]], ("lo", "hi"))
    bp = extract_breakpoints(land)
    polys = bp.boundaries[("hi", "lo")]
    pts = [p for poly in polys for p in poly]
    assert len(polys) == 1
    assert (10.0, 0.0) in pts and (20.0, 20.0) in pts
    # the staircase corner survives simplification
    assert (10.0, 10.0) in pts or (20.0, 10.0) in pts


def test_breakpoints_three_regions():
    land = _synthetic([[0, 1], [2, 1]], ("a", "b", "c"))
    bp = extract_breakpoints(land)
    assert set(bp.boundaries) == {("a", "b"), ("a", "c"), ("b", "c")}


def test_breakpoints_uniform_grid_has_no_boundaries():
    land = _synthetic([[0, 0], [0, 0]], ("only",))
    bp = extract_breakpoints(land)
    assert bp.boundaries == {}
    assert bp.area_shares == {"only": 1.0}
