"""HTTP service exposing selection, layout geometry, landscapes, and spec edits.

All handlers read an immutable snapshot (spec + dataset + layout cache);
``POST /api/spec`` and the ``--watch`` file poller replace the whole snapshot
atomically and bump a generation counter so clients know to refresh.

Responses use the same canonical JSON as the CLI, byte for byte.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request, Response

from .core import Viewport
from .data import DataError, Dataset, GeoFeatureCollection, Network, Table
from .datasets import load_dataset_file
from .jsonio import canonical_json
from .landscape import compute_landscape, dataset_hash, landscape_to_dict, spec_hash
from .layouts import LayoutContext, geometry_to_dict, layout_view
from .selector import SelectionError, select_view
from .spec import LandscapeRegion, ResponsiveSpec, SpecError, spec_from_dict, \
    spec_to_dict, validate_spec

_WATCH_INTERVAL = 1.0  # seconds between file-change polls


@dataclass(frozen=True)
class Snapshot:
    spec: ResponsiveSpec
    data: Dataset
    ctx: LayoutContext
    generation: int


def _dataset_stats(data: Dataset) -> dict:
    if isinstance(data, GeoFeatureCollection):
        return {"kind": "geo", "features": len(data.features),
                "has_hex": data.hex_coords is not None}
    if isinstance(data, Network):
        return {"kind": "network", "nodes": len(data.nodes), "links": len(data.links)}
    if isinstance(data, Table):
        return {"kind": "table", "rows": data.row_count, "columns": len(data.columns)}
    return {"kind": "unknown"}


class ServiceState:
    """Holds the current snapshot; replacement is atomic under a lock."""

    def __init__(self, spec: ResponsiveSpec, data: Dataset):
        self._lock = threading.Lock()
        self._snapshot = Snapshot(spec, data, LayoutContext(data), generation=0)

    @property
    def snapshot(self) -> Snapshot:
        return self._snapshot  # attribute read is atomic

    def replace(self, spec: Optional[ResponsiveSpec] = None,
                data: Optional[Dataset] = None) -> Snapshot:
        with self._lock:
            old = self._snapshot
            new_data = data if data is not None else old.data
            ctx = old.ctx if new_data is old.data else LayoutContext(new_data)
            snap = Snapshot(spec if spec is not None else old.spec,
                            new_data, ctx, old.generation + 1)
            self._snapshot = snap
            return snap


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(content=canonical_json(payload) + "\n", status_code=status_code,
                    media_type="application/json")


def _error(status_code: int, message: str, **extra) -> Response:
    return _json_response({"error": message, **extra}, status_code)


def create_app(spec: ResponsiveSpec, data: Dataset,
               spec_path: Optional[str] = None, data_path: Optional[str] = None,
               watch: bool = False) -> FastAPI:
    state = ServiceState(spec, data)
    app = FastAPI(title="viewscape", docs_url=None, redoc_url=None)
    app.state.engine = state

    if watch:
        if not (spec_path and data_path):
            raise ValueError("--watch needs spec and data file paths")
        _start_watcher(state, Path(spec_path), Path(data_path))

    def _viewport(w, h):
        try:
            w, h = float(w), float(h)
        except (TypeError, ValueError):
            return None
        if w <= 0 or h <= 0:
            return None
        return Viewport(w, h)

    @app.get("/api/select")
    def api_select(w: float, h: float):
        snap = state.snapshot
        v = _viewport(w, h)
        if v is None:
            return _error(400, "w and h must be positive numbers")
        try:
            sel = select_view(snap.spec, snap.data, v, snap.ctx)
        except SelectionError as e:
            return _error(422, str(e))
        return _json_response(sel.to_dict())

    @app.get("/api/views/{view_id}/layout")
    def api_layout(view_id: str, w: float, h: float):
        snap = state.snapshot
        v = _viewport(w, h)
        if v is None:
            return _error(400, "w and h must be positive numbers")
        try:
            view = snap.spec.view(view_id)
        except KeyError:
            return _error(404, f"unknown view {view_id!r}")
        try:
            layout = layout_view(view, snap.data, v, snap.ctx)
        except Exception as e:
            return _error(422, f"layout failed: {e}")
        return _json_response(geometry_to_dict(view, layout))

    @app.get("/api/landscape")
    def api_landscape(step: Optional[float] = None, mode: str = "fast"):
        snap = state.snapshot
        mode_name = {"full": "full_scan", "fast": "monotone_fast"}.get(mode)
        if mode_name is None:
            return _error(400, "mode must be 'full' or 'fast'")
        region = snap.spec.landscape_region
        if step is not None:
            if step < 1:
                return _error(400, "step must be >= 1")
            region = LandscapeRegion(region.w_min, region.w_max, region.h_min,
                                     region.h_max, step)
        land = compute_landscape(snap.spec, snap.data, region=region, mode=mode_name,
                                 ctx=snap.ctx)
        return _json_response(landscape_to_dict(land))

    @app.post("/api/spec")
    async def api_spec(request: Request):
        snap = state.snapshot
        try:
            doc = await request.json()
        except Exception:
            return _error(422, "request body is not valid JSON")
        try:
            new_spec = spec_from_dict(doc)
        except SpecError as e:
            return _error(422, str(e))
        diags = validate_spec(new_spec, snap.data)
        if any(d.severity == "error" for d in diags):
            return _json_response({
                "error": "spec does not match the active dataset",
                "diagnostics": [{"severity": d.severity, "view": d.view_id,
                                 "message": d.message} for d in diags],
            }, 422)
        new_snap = state.replace(spec=new_spec)
        return _json_response({"generation": new_snap.generation,
                               "spec_hash": spec_hash(new_snap.spec)})

    @app.get("/api/meta")
    def api_meta():
        snap = state.snapshot
        return _json_response({
            "generation": snap.generation,
            "spec_hash": spec_hash(snap.spec),
            "dataset_hash": dataset_hash(snap.data),
            "dataset": _dataset_stats(snap.data),
            "views": [{"id": v.id, "type": v.view_type.value} for v in snap.spec.views],
            "landscape_region": spec_to_dict(snap.spec)["landscape_region"],
            "spec": spec_to_dict(snap.spec),
        })

    return app


def _start_watcher(state: ServiceState, spec_path: Path, data_path: Path) -> None:
    from .spec import parse_spec

    def mtimes():
        return (spec_path.stat().st_mtime_ns, data_path.stat().st_mtime_ns)

    def run():
        last = mtimes()
        while True:
            time.sleep(_WATCH_INTERVAL)
            try:
                now = mtimes()
            except OSError:
                continue
            if now == last:
                continue
            try:
                new_spec = parse_spec(spec_path.read_text(encoding="utf-8")) \
                    if now[0] != last[0] else None
                new_data = load_dataset_file(data_path) if now[1] != last[1] else None
            except (OSError, SpecError, DataError):
                continue  # keep serving the previous snapshot
            state.replace(spec=new_spec, data=new_data)
            last = now

    threading.Thread(target=run, daemon=True, name="viewscape-watch").start()
