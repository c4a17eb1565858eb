"""Dataset loading and validation.

Three dataset kinds are supported, matching the bundled examples:

* geographic feature collections (GeoJSON FeatureCollection of
  Polygon/MultiPolygon, optionally with a hex-grid sidecar),
* undirected weighted networks (node-link JSON),
* typed tables (CSV with a header row).

Loaded values are immutable and safe to share across threads.
"""

from __future__ import annotations

import csv
import io
import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

Ring = tuple[tuple[float, float], ...]
Polygon = tuple[Ring, ...]  # first ring exterior, rest holes


class DataError(ValueError):
    """Invalid or malformed input data."""


class ParseError(DataError):
    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class GeoFeature:
    id: str
    polygons: tuple[Polygon, ...]
    properties: dict

    def __hash__(self):
        return hash(self.id)


@dataclass(frozen=True)
class GeoFeatureCollection:
    features: tuple[GeoFeature, ...]
    value_fields: tuple[str, ...] = ()
    category_fields: tuple[str, ...] = ()
    hex_coords: Optional[dict] = None  # feature id -> (row, col)

    def feature_ids(self) -> list[str]:
        return [f.id for f in self.features]

    def values(self, field_name: str) -> list[float]:
        return [float(f.properties[field_name]) for f in self.features]

    def categories(self, field_name: str) -> list[str]:
        return [str(f.properties[field_name]) for f in self.features]


@dataclass(frozen=True)
class Network:
    nodes: tuple[tuple[str, str], ...]  # (id, label)
    links: tuple[tuple[str, str, float], ...]  # canonically sorted, a < b

    @property
    def node_count(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class Table:
    columns: tuple[tuple[str, str], ...]  # (name, "numeric" | "categorical")
    rows: tuple[tuple, ...]

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def column_index(self, name: str) -> int:
        for i, (col, _) in enumerate(self.columns):
            if col == name:
                return i
        raise KeyError(name)

    def column_kind(self, name: str) -> str:
        return self.columns[self.column_index(name)][1]

    def column_values(self, name: str) -> list:
        i = self.column_index(name)
        return [r[i] for r in self.rows]


Dataset = Union[GeoFeatureCollection, Network, Table]


# ---------------------------------------------------------------------------
# GeoJSON

def _as_text(data) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON parse error at byte {e.pos}: {e.msg}", offset=e.pos) from e


def _validate_ring(ring, fid: str) -> Ring:
    if len(ring) < 4:
        raise DataError(f"feature {fid!r}: ring has fewer than 4 positions")
    pts = tuple((float(lon), float(lat)) for lon, lat in ring)
    if pts[0] != pts[-1]:
        raise DataError(f"feature {fid!r}: ring is not closed")
    for lon, lat in pts:
        if not (-180.0 <= lon <= 180.0 and -90.0 <= lat <= 90.0):
            raise DataError(f"feature {fid!r}: coordinate ({lon}, {lat}) out of lon/lat range")
    return pts


def load_geo(data, value_fields: Sequence[str] = (), category_fields: Sequence[str] = (),
             hex_sidecar=None) -> GeoFeatureCollection:
    """Load a GeoJSON FeatureCollection of Polygon/MultiPolygon features.

    ``value_fields`` names numeric properties every feature must carry;
    ``category_fields`` names categorical properties. ``hex_sidecar`` is an
    optional JSON text/bytes/dict mapping feature id -> {"row": int, "col": int}.
    """
    doc = _parse_json(_as_text(data))
    if not isinstance(doc, dict) or doc.get("type") != "FeatureCollection":
        raise DataError("input is not a GeoJSON FeatureCollection")
    raw_features = doc.get("features", [])
    if not raw_features:
        raise DataError("FeatureCollection contains no features")

    features = []
    seen_ids = set()
    missing: dict[str, list[str]] = {}
    for i, f in enumerate(raw_features):
        fid = f.get("id", f.get("properties", {}).get("id"))
        if fid is None:
            raise DataError(f"feature at index {i} has no id")
        fid = str(fid)
        if fid in seen_ids:
            raise DataError(f"duplicate feature id {fid!r}")
        seen_ids.add(fid)
        geom = f.get("geometry") or {}
        gtype = geom.get("type")
        coords = geom.get("coordinates", [])
        if gtype == "Polygon":
            polys = [coords]
        elif gtype == "MultiPolygon":
            polys = coords
        else:
            raise DataError(f"feature {fid!r}: unsupported geometry type {gtype!r}")
        polygons = tuple(
            tuple(_validate_ring(ring, fid) for ring in poly) for poly in polys
        )
        props = dict(f.get("properties", {}))
        for vf in value_fields:
            v = props.get(vf)
            if v is None or not math.isfinite(float(v)):
                missing.setdefault(vf, []).append(fid)
            else:
                props[vf] = float(v)
        features.append(GeoFeature(id=fid, polygons=polygons, properties=props))

    if missing:
        parts = "; ".join(f"field {k!r} missing for features {v}" for k, v in missing.items())
        raise DataError(f"features missing declared value fields: {parts}")

    hex_coords = None
    if hex_sidecar is not None:
        if not isinstance(hex_sidecar, dict):
            hex_sidecar = _parse_json(_as_text(hex_sidecar))
        hex_coords = {}
        seen_cells = set()
        for fid, cell in hex_sidecar.items():
            rc = (int(cell["row"]), int(cell["col"]))
            if rc in seen_cells:
                raise DataError(f"hex sidecar: duplicate cell {rc} for feature {fid!r}")
            seen_cells.add(rc)
            hex_coords[str(fid)] = rc

    return GeoFeatureCollection(
        features=tuple(features),
        value_fields=tuple(value_fields),
        category_fields=tuple(category_fields),
        hex_coords=hex_coords,
    )


def geo_to_json(geo: GeoFeatureCollection) -> str:
    """Serialize back to GeoJSON (hex coords are not part of this document)."""
    features = []
    for f in geo.features:
        if len(f.polygons) == 1:
            geom = {"type": "Polygon", "coordinates": [[list(p) for p in ring] for ring in f.polygons[0]]}
        else:
            geom = {"type": "MultiPolygon",
                    "coordinates": [[[list(p) for p in ring] for ring in poly] for poly in f.polygons]}
        features.append({"type": "Feature", "id": f.id, "geometry": geom,
                         "properties": dict(f.properties)})
    return json.dumps({"type": "FeatureCollection", "features": features})


def hex_sidecar_to_json(geo: GeoFeatureCollection) -> str:
    if geo.hex_coords is None:
        raise DataError("collection has no hex coordinates")
    return json.dumps({fid: {"row": r, "col": c} for fid, (r, c) in geo.hex_coords.items()})


# ---------------------------------------------------------------------------
# Node-link networks

def load_network(data) -> Network:
    """Load an undirected weighted network from node-link JSON.

    Duplicate undirected links are merged by summing their weights;
    self-loops are dropped with a warning.
    """
    doc = _parse_json(_as_text(data))
    nodes = []
    seen = set()
    for n in doc.get("nodes", []):
        nid = str(n["id"])
        if nid in seen:
            raise DataError(f"duplicate node id {nid!r}")
        seen.add(nid)
        nodes.append((nid, str(n.get("label", nid))))

    merged: dict[tuple[str, str], float] = {}
    for link in doc.get("links", []):
        a, b = str(link["source"]), str(link["target"])
        w = float(link.get("weight", 1.0))
        if w < 0:
            raise DataError(f"link ({a!r}, {b!r}) has negative weight {w}")
        if a not in seen or b not in seen:
            raise DataError(f"link ({a!r}, {b!r}) references an unknown node")
        if a == b:
            warnings.warn(f"dropping self-loop on node {a!r}")
            continue
        key = (a, b) if a < b else (b, a)
        merged[key] = merged.get(key, 0.0) + w

    links = tuple(sorted((a, b, w) for (a, b), w in merged.items()))
    return Network(nodes=tuple(nodes), links=links)


def network_to_json(net: Network) -> str:
    return json.dumps({
        "nodes": [{"id": i, "label": l} for i, l in net.nodes],
        "links": [{"source": a, "target": b, "weight": w} for a, b, w in net.links],
    })


# ---------------------------------------------------------------------------
# CSV tables

NUMERIC_FRACTION = 0.95  # a column is numeric iff >= 95% of non-empty cells parse


def _try_float(s: str):
    try:
        v = float(s)
        return v if math.isfinite(v) else None
    except ValueError:
        return None


def load_table(data) -> Table:
    """Load a CSV (RFC 4180, UTF-8, header row required) into a typed Table.

    Column kinds are inferred: numeric iff at least 95% of non-empty cells
    parse as finite numbers. Unparsable or empty cells in numeric columns
    become missing (None).
    """
    text = _as_text(data)
    if not text.strip():
        raise DataError("empty CSV input")
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise DataError("empty CSV input") from None
    raw_rows = []
    for i, row in enumerate(reader):
        if len(row) != len(header):
            raise DataError(f"ragged row at index {i}: expected {len(header)} cells, got {len(row)}")
        raw_rows.append(row)

    kinds = []
    for ci in range(len(header)):
        cells = [r[ci] for r in raw_rows if r[ci].strip() != ""]
        if cells:
            numeric = sum(1 for c in cells if _try_float(c) is not None)
            kind = "numeric" if numeric >= NUMERIC_FRACTION * len(cells) else "categorical"
        else:
            kind = "categorical"
        kinds.append(kind)

    rows = []
    for r in raw_rows:
        out = []
        for ci, cell in enumerate(r):
            if kinds[ci] == "numeric":
                out.append(None if cell.strip() == "" else _try_float(cell))
            else:
                out.append(cell)
        rows.append(tuple(out))

    return Table(columns=tuple(zip(header, kinds)), rows=tuple(rows))


def table_to_csv(t: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([name for name, _ in t.columns])
    for row in t.rows:
        writer.writerow(["" if c is None else (repr(c) if isinstance(c, float) else c)
                         for c in row])
    return buf.getvalue()
