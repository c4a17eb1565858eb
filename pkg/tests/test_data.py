"""Dataset loading, validation, and serialization round-trips."""

import json

import pytest

from viewscape.data import (
    DataError,
    ParseError,
    geo_to_json,
    hex_sidecar_to_json,
    load_geo,
    load_network,
    load_table,
    network_to_json,
    table_to_csv,
)
from viewscape.landscape import dataset_hash


def _fc(features):
    return json.dumps({"type": "FeatureCollection", "features": features})


def _sq(fid, x0=0.0, y0=0.0, size=1.0, props=None):
    ring = [[x0, y0], [x0 + size, y0], [x0 + size, y0 + size], [x0, y0 + size], [x0, y0]]
    return {"type": "Feature", "id": fid,
            "geometry": {"type": "Polygon", "coordinates": [ring]},
            "properties": props or {}}


# -- GeoJSON ----------------------------------------------------------------

def test_geo_load_basic(world):
    assert len(world.features) == 258
    assert "population" in world.value_fields
    vals = world.values("population")
    assert min(vals) == 140.0
    assert max(vals) == 1.4e9


def test_geo_rejects_invalid_json():
    with pytest.raises(ParseError) as e:
        load_geo("{not json")
    assert e.value.offset is not None


def test_geo_rejects_unclosed_ring():
    bad = _sq("a")
    bad["geometry"]["coordinates"][0].pop()  # drop the closing point... still closed?
    bad["geometry"]["coordinates"][0][-1] = [9.0, 9.0]
    with pytest.raises(DataError, match="not closed"):
        load_geo(_fc([bad]))


def test_geo_rejects_out_of_range_coordinates():
    bad = _sq("a", x0=179.5)  # crosses lon 180
    with pytest.raises(DataError, match="out of lon/lat range"):
        load_geo(_fc([bad]))


def test_geo_rejects_duplicate_ids():
    with pytest.raises(DataError, match="duplicate feature id"):
        load_geo(_fc([_sq("a"), _sq("a", x0=5)]))


def test_geo_rejects_missing_value_fields_listing_ids():
    doc = _fc([_sq("a", props={"pop": 10}), _sq("b", x0=3), _sq("c", x0=6)])
    with pytest.raises(DataError) as e:
        load_geo(doc, value_fields=("pop",))
    assert "'b'" in str(e.value) and "'c'" in str(e.value)


def test_geo_rejects_duplicate_hex_cells():
    doc = _fc([_sq("a"), _sq("b", x0=3)])
    sidecar = {"a": {"row": 0, "col": 0}, "b": {"row": 0, "col": 0}}
    with pytest.raises(DataError, match="duplicate cell"):
        load_geo(doc, hex_sidecar=json.dumps(sidecar))


def test_geo_roundtrip(world, uk):
    for geo in (world, uk):
        again = load_geo(geo_to_json(geo), value_fields=geo.value_fields,
                         category_fields=geo.category_fields,
                         hex_sidecar=hex_sidecar_to_json(geo) if geo.hex_coords else None)
        assert dataset_hash(again) == dataset_hash(geo)
        assert again == geo


# -- Networks ----------------------------------------------------------------

def test_network_load(lesmis):
    assert lesmis.node_count == 77
    # canonical link order: each link sorted, whole list sorted
    assert all(a < b for a, b, _ in lesmis.links)
    assert list(lesmis.links) == sorted(lesmis.links)


def test_network_merges_duplicate_links():
    doc = {"nodes": [{"id": "x"}, {"id": "y"}],
           "links": [{"source": "x", "target": "y", "weight": 2},
                     {"source": "y", "target": "x", "weight": 3}]}
    net = load_network(json.dumps(doc))
    assert net.links == (("x", "y", 5.0),)


def test_network_drops_self_loops_with_warning():
    doc = {"nodes": [{"id": "x"}, {"id": "y"}],
           "links": [{"source": "x", "target": "x"},
                     {"source": "x", "target": "y"}]}
    with pytest.warns(UserWarning, match="self-loop"):
        net = load_network(json.dumps(doc))
    assert net.links == (("x", "y", 1.0),)


def test_network_rejects_dangling_links():
    doc = {"nodes": [{"id": "x"}], "links": [{"source": "x", "target": "ghost"}]}
    with pytest.raises(DataError, match="unknown node"):
        load_network(json.dumps(doc))


def test_network_rejects_duplicate_node_ids():
    doc = {"nodes": [{"id": "x"}, {"id": "x"}], "links": []}
    with pytest.raises(DataError, match="duplicate node id"):
        load_network(json.dumps(doc))


def test_network_roundtrip(lesmis):
    again = load_network(network_to_json(lesmis))
    assert again == lesmis


# -- Tables -------------------------------------------------------------------

def test_table_load(movies):
    assert movies.row_count == 100
    kinds = dict(movies.columns)
    assert kinds["rating_critics"] == "numeric"
    assert kinds["rating_audience"] == "numeric"
    assert kinds["title"] == "categorical"


def test_table_type_inference_threshold():
    # 1 bad cell out of 2 -> below the 95% numeric bar -> categorical
    t = load_table("a\n1\noops\n")
    assert t.columns == (("a", "categorical"),)
    # all numeric
    t2 = load_table("a\n1\n2.5\n")
    assert t2.columns == (("a", "numeric"),)
    assert t2.rows == ((1.0,), (2.5,))


def test_table_missing_cells_become_none():
    t = load_table("a,b\n1,x\n,y\n")
    assert t.column_values("a") == [1.0, None]


def test_table_rejects_ragged_rows():
    with pytest.raises(DataError, match="ragged row"):
        load_table("a,b\n1\n")


def test_table_rejects_empty_input():
    with pytest.raises(DataError):
        load_table("")


def test_table_roundtrip(movies):
    again = load_table(table_to_csv(movies))
    assert again == movies
