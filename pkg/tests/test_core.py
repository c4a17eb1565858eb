"""Viewport geometry and scale-to-fit."""

import math

import pytest
from hypothesis import given, strategies as st

from viewscape.core import ContentBox, Viewport, aspect_ratio, content_aspect_ratio, fit_content


def test_viewport_rejects_nonpositive_dimensions():
    with pytest.raises(ValueError):
        Viewport(0, 100)
    with pytest.raises(ValueError):
        Viewport(100, -1)
    with pytest.raises(ValueError):
        ContentBox(0.0, 1.0)


def test_aspect_ratio():
    assert aspect_ratio(Viewport(800, 400)) == 2.0
    assert content_aspect_ratio(ContentBox(110, 140)) == 110 / 140


def test_fit_wide_content_into_squarer_viewport():
    # 360x180 content into 600x320: width is the tight dimension
    fit = fit_content(Viewport(600, 320), ContentBox(360, 180))
    assert fit.scale == 600 / 360
    assert fit.offset_x == 0.0
    assert fit.offset_y == pytest.approx((320 - 180 * 600 / 360) / 2)


def test_fit_tall_content():
    # 110x140 content into 300x380: height is the tight dimension
    fit = fit_content(Viewport(300, 380), ContentBox(110, 140))
    assert fit.scale == 380 / 140
    assert fit.offset_y == 0.0
    assert fit.offset_x == pytest.approx((300 - 110 * 380 / 140) / 2)


_dims = st.floats(min_value=1e-3, max_value=1e6, allow_nan=False, allow_infinity=False)


@given(_dims, _dims, _dims, _dims)
def test_fit_is_tight_and_contained(vw, vh, cw, ch):
    v, c = Viewport(vw, vh), ContentBox(cw, ch)
    fit = fit_content(v, c)
    # contained: the scaled content never exceeds the viewport
    assert fit.scale * cw <= vw * (1 + 1e-12)
    assert fit.scale * ch <= vh * (1 + 1e-12)
    # tight: at least one dimension is exactly filled
    assert math.isclose(fit.scale * cw, vw, rel_tol=1e-9) or \
        math.isclose(fit.scale * ch, vh, rel_tol=1e-9)
    # centered
    assert fit.offset_x == pytest.approx((vw - fit.scale * cw) / 2)
    assert fit.offset_y == pytest.approx((vh - fit.scale * ch) / 2)
