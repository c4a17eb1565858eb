"""Shared geometric primitives: viewports, aspect ratios, scale-to-fit."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Viewport:
    """A rectangular display area in CSS pixels."""

    width: float
    height: float

    def __post_init__(self):
        if not (self.width > 0 and self.height > 0):
            raise ValueError(f"viewport dimensions must be positive, got {self.width}x{self.height}")


@dataclass(frozen=True)
class ContentBox:
    """Intrinsic dimensions of some content (e.g. a projected map) in abstract units."""

    width: float
    height: float

    def __post_init__(self):
        if not (self.width > 0 and self.height > 0):
            raise ValueError(f"content dimensions must be positive, got {self.width}x{self.height}")


@dataclass(frozen=True)
class FitResult:
    """Uniform scale plus centering offsets that place content inside a viewport."""

    scale: float
    offset_x: float
    offset_y: float


def aspect_ratio(v: Viewport) -> float:
    """Width divided by height."""
    return v.width / v.height


def content_aspect_ratio(c: ContentBox) -> float:
    return c.width / c.height


def fit_content(v: Viewport, c: ContentBox) -> FitResult:
    """Scale content uniformly to fit the viewport, centered.

    The scale is min(v.width/c.width, v.height/c.height), so the scaled
    content is tight against the viewport in at least one dimension.
    """
    scale = min(v.width / c.width, v.height / c.height)
    offset_x = (v.width - scale * c.width) / 2.0
    offset_y = (v.height - scale * c.height) / 2.0
    return FitResult(scale=scale, offset_x=offset_x, offset_y=offset_y)
