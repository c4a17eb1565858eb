"""View landscapes: labeled rasters over width-height space.

A landscape samples every (width, height) cell in a region, records which
view the selector picks there, extracts the breakpoint boundaries between
view regions, and supports diffing landscapes across datasets or constraint
sets.

Two computation modes produce identical grids: ``full_scan`` runs the
selector at every cell; ``monotone_fast`` exploits that size-monotone
constraints have an upward-closed passing region (binary-searched frontier
per column) and that aspect constraints are O(1) closed-form, evaluating the
expensive constraints only O(log rows) times per column.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import Viewport
from .data import Dataset, GeoFeatureCollection, Network, Table, geo_to_json, \
    hex_sidecar_to_json, network_to_json, table_to_csv
from .jsonio import canonical_json
from .layouts import LayoutContext
from .selector import SelectionError, select_view
from .spec import LandscapeRegion, ResponsiveSpec, spec_to_dict

FALLBACK_LABEL = "(fallback)"
ERROR_LABEL = "(error)"


def dataset_hash(data: Dataset) -> str:
    if isinstance(data, GeoFeatureCollection):
        text = geo_to_json(data)
        if data.hex_coords is not None:
            text += hex_sidecar_to_json(data)
    elif isinstance(data, Network):
        text = network_to_json(data)
    elif isinstance(data, Table):
        text = table_to_csv(data)
    else:
        raise TypeError(f"unknown dataset type {type(data).__name__}")
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def spec_hash(spec: ResponsiveSpec) -> str:
    return hashlib.sha256(canonical_json(spec_to_dict(spec)).encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class ViewLandscape:
    region: LandscapeRegion
    labels: np.ndarray  # (ny, nx) int16 indices into label_names; read-only
    label_names: tuple[str, ...]
    provenance: dict = field(default_factory=dict)

    @property
    def nx(self) -> int:
        return self.labels.shape[1]

    @property
    def ny(self) -> int:
        return self.labels.shape[0]

    def cell_coords(self, i: int, j: int) -> tuple[float, float]:
        """Sampling point (w, h) of cell (column i, row j)."""
        r = self.region
        return (_coord(r.w_min, i, r.step), _coord(r.h_min, j, r.step))

    def area_shares(self) -> dict[str, float]:
        total = self.labels.size
        counts = np.bincount(self.labels.ravel(), minlength=len(self.label_names))
        return {name: counts[k] / total for k, name in enumerate(self.label_names)
                if counts[k] > 0}


@dataclass(frozen=True)
class BreakpointSet:
    boundaries: dict  # (label_a, label_b) sorted pair -> list of polylines [(w, h), ...]
    area_shares: dict  # label -> fraction of cells


@dataclass(frozen=True)
class DiffReport:
    changed_fraction: float
    per_view_delta: dict  # label -> share(b) - share(a)

    def to_dict(self) -> dict:
        return {"changed_fraction": self.changed_fraction,
                "per_view_delta": dict(sorted(self.per_view_delta.items()))}


def _coord(base: float, index: int, step: float) -> float:
    c = base + index * step
    if c <= 0:
        return min(1.0, step)  # cells at the axis origin sample a minimal viewport
    return c


def _grid_shape(region: LandscapeRegion) -> tuple[int, int]:
    nx = int(np.ceil((region.w_max - region.w_min) / region.step))
    ny = int(np.ceil((region.h_max - region.h_min) / region.step))
    return nx, ny


def _label_table(spec: ResponsiveSpec) -> tuple[str, ...]:
    return tuple(v.id for v in spec.views) + (FALLBACK_LABEL, ERROR_LABEL)


def compute_landscape(spec: ResponsiveSpec, data: Dataset,
                      region: Optional[LandscapeRegion] = None,
                      step: Optional[float] = None,
                      mode: str = "monotone_fast",
                      ctx: Optional[LayoutContext] = None) -> ViewLandscape:
    """Rasterize the view selection over a width-height region.

    Cells are sampled at their minimum (w, h) corner. ``mode`` is
    ``full_scan`` or ``monotone_fast``; both produce identical label grids.
    """
    base = region or spec.landscape_region
    if step is not None:
        base = LandscapeRegion(base.w_min, base.w_max, base.h_min, base.h_max, step)
    if mode not in ("full_scan", "monotone_fast"):
        raise ValueError(f"unknown landscape mode {mode!r}")
    ctx = ctx or LayoutContext(data)
    nx, ny = _grid_shape(base)
    names = _label_table(spec)
    index = {name: k for k, name in enumerate(names)}

    if mode == "full_scan":
        labels = _full_scan(spec, data, base, nx, ny, index, ctx)
    else:
        try:
            labels = _monotone_fast(spec, data, base, nx, ny, ctx)
        except SelectionError:
            labels = _full_scan(spec, data, base, nx, ny, index, ctx)

    labels.flags.writeable = False
    provenance = {"spec_hash": spec_hash(spec), "dataset_hash": dataset_hash(data)}
    return ViewLandscape(region=base, labels=labels, label_names=names, provenance=provenance)


def _full_scan(spec, data, region, nx, ny, index, ctx) -> np.ndarray:
    labels = np.empty((ny, nx), dtype=np.int16)
    error_idx = index[ERROR_LABEL]
    for j in range(ny):
        h = _coord(region.h_min, j, region.step)
        for i in range(nx):
            w = _coord(region.w_min, i, region.step)
            try:
                sel = select_view(spec, data, Viewport(w, h), ctx)
                labels[j, i] = index[FALLBACK_LABEL] if sel.fallback_used \
                    else index[sel.selected_view_id]
            except SelectionError:
                labels[j, i] = error_idx
    return labels


def _monotone_fast(spec, data, region, nx, ny, ctx) -> np.ndarray:
    from .constraints import evaluate_constraint
    from .core import content_aspect_ratio

    ws = np.array([_coord(region.w_min, i, region.step) for i in range(nx)])
    hs = np.array([_coord(region.h_min, j, region.step) for j in range(ny)])
    ar_grid = ws[None, :] / hs[:, None]
    rows = np.arange(ny)

    pass_masks = []
    for view in spec.views:
        aspect_mask = np.ones((ny, nx), dtype=bool)
        monotone = []
        for c in view.constraints:
            if c.monotone_in_size:
                monotone.append(c)
                continue
            from .spec import ConstraintKind
            if c.kind is ConstraintKind.MIN_ASPECT_RATIO:
                aspect_mask &= ar_grid >= c.threshold
            elif c.kind is ConstraintKind.MAX_ASPECT_RATIO:
                aspect_mask &= ar_grid <= c.threshold
            else:  # MAX_ASPECT_RATIO_DIFF
                content = ctx.content_box(view)
                if content is None:
                    raise SelectionError(view.id, "no content box for aspect-diff constraint")
                arc = content_aspect_ratio(content)
                measured = np.maximum(ar_grid / arc, arc / ar_grid)
                aspect_mask &= measured <= 1.0 + c.threshold

        if monotone:
            def passes(i: int, j: int) -> bool:
                v = Viewport(ws[i], hs[j])
                for c in monotone:
                    try:
                        r = evaluate_constraint(c, view, data, v, ctx)
                    except Exception as e:
                        raise SelectionError(view.id, e) from e
                    if not r.passed:
                        return False
                return True

            # frontier[i]: minimal row passing all size-monotone constraints in
            # column i; non-increasing in i, which bounds each binary search
            frontier = np.empty(nx, dtype=np.int32)
            prev = ny
            for i in range(nx):
                if prev == 0:
                    frontier[i] = 0
                    continue
                if prev == ny:
                    if not passes(i, ny - 1):
                        frontier[i] = ny
                        continue
                    hi = ny - 1
                else:
                    hi = prev  # row `prev` passed one column to the left, so it passes here
                lo = 0
                while lo < hi:
                    mid = (lo + hi) // 2
                    if passes(i, mid):
                        hi = mid
                    else:
                        lo = mid + 1
                frontier[i] = lo
                prev = lo
            mono_mask = rows[:, None] >= frontier[None, :]
        else:
            mono_mask = np.ones((ny, nx), dtype=bool)

        pass_masks.append(aspect_mask & mono_mask)

    stack = np.stack(pass_masks)  # (n_views, ny, nx)
    any_pass = stack.any(axis=0)
    first = stack.argmax(axis=0)
    labels = np.where(any_pass, first, len(spec.views)).astype(np.int16)
    return labels


# ---------------------------------------------------------------------------
# Breakpoint extraction

def extract_breakpoints(l: ViewLandscape) -> BreakpointSet:
    """Trace boundary polylines along cell edges between differing labels."""
    r = l.region
    s = r.step
    grid = l.labels
    segments: dict[tuple[str, str], list] = {}

    def add(a: int, b: int, p0, p1):
        key = tuple(sorted((l.label_names[a], l.label_names[b])))
        segments.setdefault(key, []).append((p0, p1))

    ny, nx = grid.shape
    for j in range(ny):
        y0 = r.h_min + j * s
        for i in range(nx - 1):
            if grid[j, i] != grid[j, i + 1]:
                x = r.w_min + (i + 1) * s
                add(grid[j, i], grid[j, i + 1], (x, y0), (x, y0 + s))
    for j in range(ny - 1):
        y = r.h_min + (j + 1) * s
        for i in range(nx):
            if grid[j, i] != grid[j + 1, i]:
                x0 = r.w_min + i * s
                add(grid[j, i], grid[j + 1, i], (x0, y), (x0 + s, y))

    boundaries = {key: _chain_segments(segs) for key, segs in sorted(segments.items())}
    return BreakpointSet(boundaries=boundaries, area_shares=l.area_shares())


def _chain_segments(segments) -> list:
    """Join shared-endpoint segments into polylines (deterministic order)."""
    adjacency: dict = {}
    seg_set = set()
    for p0, p1 in segments:
        seg = tuple(sorted((p0, p1)))
        if seg in seg_set:
            continue
        seg_set.add(seg)
        adjacency.setdefault(seg[0], []).append(seg)
        adjacency.setdefault(seg[1], []).append(seg)

    unused = set(seg_set)
    polylines = []
    # start at odd-degree endpoints first so open chains come out whole
    starts = sorted(p for p, segs in adjacency.items() if len(segs) % 2 == 1)
    starts += sorted(adjacency.keys())
    for start in starts:
        for seg in sorted(adjacency[start]):
            if seg not in unused:
                continue
            line = [start]
            point = start
            current = seg
            while True:
                unused.discard(current)
                point = current[1] if current[0] == point else current[0]
                line.append(point)
                nxt = [s2 for s2 in sorted(adjacency[point]) if s2 in unused]
                if not nxt:
                    break
                current = nxt[0]
            polylines.append(_simplify_collinear(line))
    return polylines


def _simplify_collinear(points: list) -> list:
    """Drop interior points that continue straight."""
    if len(points) < 3:
        return points
    simplified = [points[0]]
    for k in range(1, len(points) - 1):
        (x0, y0), (x1, y1), (x2, y2) = simplified[-1], points[k], points[k + 1]
        if (x1 - x0) * (y2 - y1) == (y1 - y0) * (x2 - x1):
            continue
        simplified.append(points[k])
    simplified.append(points[-1])
    return simplified


# ---------------------------------------------------------------------------
# Diffs

def diff_landscape(a: ViewLandscape, b: ViewLandscape) -> DiffReport:
    """Cell-wise comparison of two landscapes over the same region and step."""
    if a.region != b.region:
        raise ValueError("landscapes cover different regions or steps")
    names_a = [a.label_names[k] for k in a.labels.ravel()]
    names_b = [b.label_names[k] for k in b.labels.ravel()]
    changed = sum(1 for na, nb in zip(names_a, names_b) if na != nb)
    shares_a = a.area_shares()
    shares_b = b.area_shares()
    delta = {}
    for name in set(shares_a) | set(shares_b):
        delta[name] = shares_b.get(name, 0.0) - shares_a.get(name, 0.0)
    return DiffReport(changed_fraction=changed / a.labels.size, per_view_delta=delta)


# ---------------------------------------------------------------------------
# Serialization

def landscape_to_dict(l: ViewLandscape) -> dict:
    rows = []
    for j in range(l.ny):
        row = l.labels[j]
        rle = []
        run_val = int(row[0])
        run_len = 1
        for v in row[1:]:
            if int(v) == run_val:
                run_len += 1
            else:
                rle.append([run_val, run_len])
                run_val = int(v)
                run_len = 1
        rle.append([run_val, run_len])
        rows.append(rle)
    r = l.region
    return {
        "region": {"w_min": r.w_min, "w_max": r.w_max, "h_min": r.h_min, "h_max": r.h_max},
        "step": r.step,
        "labels": list(l.label_names),
        "rows": rows,
        "provenance": dict(l.provenance),
    }


def landscape_from_dict(doc: dict) -> ViewLandscape:
    r = doc["region"]
    region = LandscapeRegion(w_min=r["w_min"], w_max=r["w_max"], h_min=r["h_min"],
                             h_max=r["h_max"], step=doc["step"])
    names = tuple(doc["labels"])
    rows = []
    for rle in doc["rows"]:
        row = []
        for val, count in rle:
            row.extend([val] * count)
        rows.append(row)
    labels = np.array(rows, dtype=np.int16)
    labels.flags.writeable = False
    return ViewLandscape(region=region, labels=labels, label_names=names,
                         provenance=dict(doc.get("provenance", {})))
