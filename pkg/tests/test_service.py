"""HTTP service endpoints and CLI/service response parity."""

import json

import pytest
from fastapi.testclient import TestClient

from viewscape.cli import main
from viewscape.datasets import (
    bundled_dataset_path,
    bundled_spec_path,
    load_bundled_dataset,
    load_bundled_spec,
)
from viewscape.service import create_app


@pytest.fixture()
def client():
    app = create_app(load_bundled_spec("network"), load_bundled_dataset("les_miserables"))
    return TestClient(app)


def test_select_endpoint(client):
    r = client.get("/api/select", params={"w": 800, "h": 700})
    assert r.status_code == 200
    doc = r.json()
    assert doc["view"] == "matrix"
    assert doc["fallback"] is False


def test_select_rejects_bad_viewport(client):
    assert client.get("/api/select", params={"w": -5, "h": 100}).status_code == 400
    assert client.get("/api/select", params={"w": 0, "h": 100}).status_code == 400


def test_layout_endpoint(client):
    r = client.get("/api/views/arcs/layout", params={"w": 600, "h": 300})
    assert r.status_code == 200
    doc = r.json()
    assert doc["type"] == "arc_diagram"
    assert len(doc["nodes"]) == 77


def test_layout_unknown_view_404(client):
    assert client.get("/api/views/sunburst/layout",
                      params={"w": 600, "h": 300}).status_code == 404


def test_landscape_endpoint(client):
    r = client.get("/api/landscape", params={"step": 32})
    assert r.status_code == 200
    doc = r.json()
    assert doc["step"] == 32
    assert set(doc["labels"]) >= {"matrix", "arcs", "node_link"}
    assert "spec_hash" in doc["provenance"]


def test_meta_endpoint(client):
    doc = client.get("/api/meta").json()
    assert doc["generation"] == 0
    assert doc["dataset"] == {"kind": "network", "nodes": 77, "links": 206}
    assert [v["id"] for v in doc["views"]] == ["matrix", "arcs", "node_link"]


def test_spec_replacement_bumps_generation(client):
    doc = json.loads(bundled_spec_path("network").read_text())
    doc["views"][0]["constraints"][0]["threshold"] = 8.0
    r = client.post("/api/spec", json=doc)
    assert r.status_code == 200
    assert r.json()["generation"] == 1
    assert client.get("/api/meta").json()["generation"] == 1
    # the new threshold moves the matrix/arc boundary
    sel = client.get("/api/select", params={"w": 800, "h": 700}).json()
    assert sel["view"] == "arcs"


def test_invalid_spec_422_with_parser_message(client):
    r = client.post("/api/spec", json={"views": []})
    assert r.status_code == 422
    assert "at least one view" in r.json()["error"]


def test_mismatched_spec_422_with_diagnostics(client):
    doc = json.loads(bundled_spec_path("movies").read_text())
    r = client.post("/api/spec", json=doc)
    assert r.status_code == 422
    diags = r.json()["diagnostics"]
    assert any(d["severity"] == "error" for d in diags)
    # the active snapshot is untouched
    assert client.get("/api/meta").json()["generation"] == 0


def test_cli_service_byte_parity(tmp_path, capsys, client):
    spec = str(bundled_spec_path("network"))
    data = str(bundled_dataset_path("les_miserables"))

    main(["evaluate", "--spec", spec, "--data", data,
          "--width", "800", "--height", "700", "--json"])
    cli_select = capsys.readouterr().out
    http_select = client.get("/api/select", params={"w": 800, "h": 700}).text
    assert cli_select == http_select

    out = tmp_path / "land.json"
    main(["landscape", "--spec", spec, "--data", data, "--out", str(out),
          "--format", "json", "--step", "32"])
    http_land = client.get("/api/landscape", params={"step": 32}).text
    assert out.read_text() == http_land
