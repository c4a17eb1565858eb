"""Map projections and projected-geometry summaries.

Two projections are provided: plate carrée (equirectangular) and the Albers
equal-area conic. Projected coordinates use y growing downward (screen
convention); the Albers output is in unit-sphere radians, so projected areas
are directly comparable to spherical areas.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .core import ContentBox
from .data import GeoFeatureCollection


class ProjectionError(ValueError):
    pass


@dataclass(frozen=True)
class ProjectedGeo:
    """Per-feature projected centroids and areas plus the tight bounding box."""

    feature_ids: tuple[str, ...]
    centroids: tuple[tuple[float, float], ...]  # content units, bbox-relative
    areas: tuple[float, ...]  # content units squared
    content: ContentBox


def _equirectangular(lon: float, lat: float) -> tuple[float, float]:
    return lon, -lat


def _make_albers(lon0: float, lat0: float, lat1: float, lat2: float):
    if lat1 == lat2:
        raise ProjectionError("Albers standard parallels must be distinct")
    p0, p1, p2 = map(math.radians, (lat0, lat1, lat2))
    n = (math.sin(p1) + math.sin(p2)) / 2.0
    if n == 0:
        raise ProjectionError("Albers standard parallels must not be symmetric about the equator")
    c = math.cos(p1) ** 2 + 2.0 * n * math.sin(p1)
    rho0 = math.sqrt(c - 2.0 * n * math.sin(p0)) / n

    def forward(lon: float, lat: float) -> tuple[float, float]:
        lam = math.radians(lon - lon0)
        phi = math.radians(lat)
        rho = math.sqrt(c - 2.0 * n * math.sin(phi)) / n
        theta = n * lam
        return rho * math.sin(theta), -(rho0 - rho * math.cos(theta))

    return forward


def make_projection(name: str, params: dict | None = None):
    """Return a forward-projection function (lon, lat) -> (x, y)."""
    params = params or {}
    if name == "equirectangular":
        return _equirectangular
    if name == "albers_conic":
        return _make_albers(
            lon0=float(params.get("lon_0", 0.0)),
            lat0=float(params.get("lat_0", 0.0)),
            lat1=float(params.get("lat_1", 29.5)),
            lat2=float(params.get("lat_2", 45.5)),
        )
    raise ProjectionError(f"unknown projection {name!r}")


def ring_area_centroid(points) -> tuple[float, float, float]:
    """Signed shoelace area and area-weighted centroid of a closed ring."""
    a2 = 0.0
    cx = 0.0
    cy = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        cross = x0 * y1 - x1 * y0
        a2 += cross
        cx += (x0 + x1) * cross
        cy += (y0 + y1) * cross
    if a2 == 0.0:
        return 0.0, 0.0, 0.0
    area = a2 / 2.0
    return area, cx / (3.0 * a2), cy / (3.0 * a2)


def project(geo: GeoFeatureCollection, projection: str, params: dict | None = None) -> ProjectedGeo:
    """Project all features and summarize them as centroids + areas + bbox.

    Centroids are area-weighted polygon centroids (holes subtract); a
    zero-area feature falls back to the vertex mean with a warning.
    Coordinates are shifted so the bounding box starts at (0, 0).
    """
    fwd = make_projection(projection, params)

    ids = []
    cents = []
    areas = []
    min_x = min_y = math.inf
    max_x = max_y = -math.inf
    for f in geo.features:
        total_area = 0.0
        acc_x = 0.0
        acc_y = 0.0
        verts = []
        for poly in f.polygons:
            for ri, ring in enumerate(poly):
                pts = [fwd(lon, lat) for lon, lat in ring]
                verts.extend(pts[:-1])
                area, cx, cy = ring_area_centroid(pts)
                area = abs(area) if ri == 0 else -abs(area)  # holes subtract
                total_area += area
                acc_x += cx * area
                acc_y += cy * area
        for x, y in verts:
            min_x = min(min_x, x)
            min_y = min(min_y, y)
            max_x = max(max_x, x)
            max_y = max(max_y, y)
        if total_area > 0:
            cents.append((acc_x / total_area, acc_y / total_area))
        else:
            warnings.warn(f"feature {f.id!r} has zero projected area; using vertex mean centroid")
            cents.append((sum(x for x, _ in verts) / len(verts),
                          sum(y for _, y in verts) / len(verts)))
        areas.append(max(total_area, 0.0))
        ids.append(f.id)

    width = max_x - min_x
    height = max_y - min_y
    if width <= 0 or height <= 0:
        raise ProjectionError("projected data has no extent")
    shifted = tuple((x - min_x, y - min_y) for x, y in cents)
    return ProjectedGeo(
        feature_ids=tuple(ids),
        centroids=shifted,
        areas=tuple(areas),
        content=ContentBox(width=width, height=height),
    )
