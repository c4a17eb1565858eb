#!/usr/bin/env python3
"""Generate the bundled example datasets and specs.

Writes deterministic synthetic data into ``src/viewscape/assets/``:

* world_population.geojson      — 258 territories, population 140 … 1.4e9
* americas_population.geojson   — 63-territory western-hemisphere subset
* uk_election.geojson (+ .hex.json) — 650 constituencies, 10 parties
* movies.csv                    — 100 titles with two numeric rating columns
* les_miserables.json           — 77-character co-occurrence network
* spec_*.json                   — one view-stack spec per example

The circle-scale constants in the population specs are solved so that the
2px / 10% circle constraint starts passing at roughly 620x310 for the world
map and 300x382 for the Americas subset (both along the map's native aspect
ratio). Re-run after editing and commit the outputs.
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
ASSETS = ROOT / "src" / "viewscape" / "assets"

# ---------------------------------------------------------------------------
# Small helpers

_SYL_A = ["Al", "Bel", "Cor", "Dan", "El", "Fal", "Gar", "Hel", "Is", "Jor",
          "Kal", "Lun", "Mar", "Nor", "Or", "Pal", "Quin", "Ros", "Sel", "Tor",
          "Ul", "Val", "Wes", "Xan", "Yor", "Zan"]
_SYL_B = ["ba", "da", "ga", "la", "ma", "na", "ra", "sa", "ta", "va",
          "be", "de", "ke", "le", "me", "ne", "re", "se", "te", "ve"]
_SYL_C = ["nia", "land", "stan", "mark", "ria", "via", "dor", "gal", "tia", "burg"]


def _country_name(i: int) -> str:
    a = _SYL_A[i % len(_SYL_A)]
    b = _SYL_B[(i // len(_SYL_A)) % len(_SYL_B)]
    c = _SYL_C[(i * 7 + i // 520) % len(_SYL_C)]
    return a + b + c


def _rect(lon0, lat0, lon1, lat1):
    return [[[lon0, lat0], [lon1, lat0], [lon1, lat1], [lon0, lat1], [lon0, lat0]]]


def _feature(fid, coords, props):
    return {"type": "Feature", "id": fid,
            "geometry": {"type": "Polygon", "coordinates": coords},
            "properties": props}


def _write_json(path: Path, doc) -> None:
    path.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT)}")


def _log_uniform(rng, lo, hi, n):
    return np.exp(rng.uniform(math.log(lo), math.log(hi), size=n))


# ---------------------------------------------------------------------------
# World + Americas population maps

def build_world():
    rng = np.random.RandomState(20240)
    n = 258
    features = []

    # two extent-pinning landmasses make the equirectangular bounding box
    # exactly 360 x 180 (aspect ratio 2:1)
    features.append(("south_polar", _rect(-180.0, -90.0, 180.0, -60.0)))
    features.append(("north_polar", _rect(10.0, 83.0, 30.0, 90.0)))
    while len(features) < n:
        clon = rng.uniform(-170.0, 170.0)
        clat = rng.uniform(-55.0, 75.0)
        hw = rng.uniform(0.5, 4.0)
        hh = rng.uniform(0.5, 3.0)
        features.append((None, _rect(clon - hw, clat - hh, clon + hw, clat + hh)))

    values = _log_uniform(rng, 1e3, 5e8, n)
    values[np.argmin(values)] = 140.0
    values[np.argmax(values)] = 1.4e9

    def region_of(coords):
        lon = coords[0][0][0]
        lat = coords[0][0][1]
        if lon < -30:
            return "Americas"
        if lat < -50:
            return "Antarctic"
        if lon < 45:
            return "Africa" if lat < 35 else "Europe"
        return "Oceania" if lat < -5 else "Asia"

    docs = []
    for i, (tag, coords) in enumerate(features):
        fid = f"w{i:03d}"
        name = _country_name(i) if tag is None else tag.replace("_", " ").title()
        docs.append(_feature(fid, coords, {
            "name": name, "population": round(float(values[i]), 1),
            "region": region_of(coords)}))
    _write_json(ASSETS / "world_population.geojson",
                {"type": "FeatureCollection", "features": docs})

    # circle-scale tuning: with <= 25 of 258 circles allowed below 2px
    # diameter, the frontier sits where the 26th-smallest diameter hits 2px.
    # diameter = 2 * k * sqrt(v) * (w / 360) along the native 2:1 ray, so
    # k = 360 / (w_min * sqrt(v_sorted[25])) puts the frontier at w_min.
    v_sorted = np.sort(values)
    k_world = 360.0 / (620.0 * math.sqrt(v_sorted[25]))
    return v_sorted, k_world


def build_americas(v_world_sorted, k_world):
    rng = np.random.RandomState(20241)
    n = 63
    features = [
        ("west_isles", _rect(-145.0, 10.0, -143.0, 12.0)),
        ("east_cape", _rect(-37.0, -10.0, -35.0, -8.0)),
        ("south_cape", _rect(-72.0, -55.0, -68.0, -53.0)),
        ("north_shelf", _rect(-110.0, 83.0, -90.0, 85.0)),
    ]
    while len(features) < n:
        clon = rng.uniform(-140.0, -40.0)
        clat = rng.uniform(-50.0, 78.0)
        hw = rng.uniform(0.5, 3.5)
        hh = rng.uniform(0.5, 2.5)
        features.append((None, _rect(clon - hw, clat - hh, clon + hw, clat + hh)))

    # same spec (same circle_scale) as the world map: choose values so the
    # 7th-smallest (<= 6 of 63 failures allowed) crosses 2px at w = 300 on
    # the native 110:140 ray, where scale = w / 110
    v7 = (110.0 / (300.0 * k_world)) ** 2
    small = v7 * np.exp(rng.uniform(math.log(0.05), math.log(0.8), size=6))
    large = _log_uniform(rng, 2.0 * v7, 4e8, n - 7)
    values = np.concatenate([small, [v7], large])
    rng.shuffle(values)

    def region_of(coords):
        lon, lat = coords[0][0]
        if -85 <= lon <= -60 and 10 <= lat <= 25:
            return "Caribbean"
        return "North America" if lat >= 12 else "South America"

    docs = []
    for i, (tag, coords) in enumerate(features):
        fid = f"a{i:03d}"
        name = _country_name(300 + i) if tag is None else tag.replace("_", " ").title()
        docs.append(_feature(fid, coords, {
            "name": name, "population": round(float(values[i]), 3),
            "region": region_of(coords)}))
    _write_json(ASSETS / "americas_population.geojson",
                {"type": "FeatureCollection", "features": docs})


def population_spec(k_world, dataset_ref):
    circle_constraint = [{"kind": "min_circle_radius", "threshold": 2.0,
                          "allowed_failure_fraction": 0.1}]
    return {
        "spec_version": 1,
        "dataset_ref": dataset_ref,
        "views": [
            {"id": "circle_map", "type": "circle_map",
             "params": {"projection": "equirectangular", "value_field": "population",
                        "circle_scale": k_world, "category_field": "region"},
             "constraints": circle_constraint},
            {"id": "dorling", "type": "dorling_cartogram",
             "params": {"projection": "equirectangular", "value_field": "population",
                        "circle_scale": 1.5 * k_world, "category_field": "region",
                        "seed": 7},
             "constraints": circle_constraint},
            {"id": "bars_vertical", "type": "bar_chart",
             "params": {"value_field": "population", "label_field": "name",
                        "orientation": "vertical"},
             "constraints": [{"kind": "min_bar_count", "threshold": 3.0},
                             {"kind": "min_aspect_ratio", "threshold": 1.0}]},
            {"id": "bars_horizontal", "type": "bar_chart",
             "params": {"value_field": "population", "label_field": "name",
                        "orientation": "horizontal"},
             "constraints": [{"kind": "min_bar_count", "threshold": 3.0}]},
        ],
        "landscape_region": {"w_min": 0.0, "w_max": 1600.0,
                             "h_min": 0.0, "h_max": 1000.0, "step": 4.0},
    }


# ---------------------------------------------------------------------------
# UK election

_PARTIES = ["Conservative", "Labour", "Liberal Democrat", "Green", "Reform",
            "SNP", "Plaid Cymru", "DUP", "Sinn Fein", "Independent"]


def build_uk():
    rng = np.random.RandomState(20242)
    n = 650
    features = [
        ("west_rock", _rect(-8.0, 54.2, -7.8, 54.4)),
        ("east_point", _rect(1.8, 52.5, 2.0, 52.7)),
        ("south_point", _rect(-3.6, 50.0, -3.4, 50.2)),
        ("north_isles", _rect(-1.4, 60.8, -1.2, 61.0)),
    ]
    while len(features) < n:
        clon = rng.uniform(-7.4, 1.4)
        clat = rng.uniform(50.4, 60.4)
        hw = rng.uniform(0.02, 0.125)
        hh = rng.uniform(0.02, 0.125)
        features.append((None, _rect(clon - hw, clat - hh, clon + hw, clat + hh)))

    def nation_of(coords):
        lon, lat = coords[0][0]
        if lon < -5.2 and 53.8 <= lat <= 55.5:
            return "Northern Ireland"
        if lat > 55.5:
            return "Scotland"
        if lon < -3.0 and 51.3 < lat < 53.4:
            return "Wales"
        return "England"

    def party_of(nation):
        if nation == "Scotland":
            return str(rng.choice(["SNP", "Labour", "Conservative", "Liberal Democrat"],
                                  p=[0.55, 0.25, 0.12, 0.08]))
        if nation == "Wales":
            return str(rng.choice(["Labour", "Plaid Cymru", "Conservative"],
                                  p=[0.55, 0.25, 0.2]))
        if nation == "Northern Ireland":
            return str(rng.choice(["DUP", "Sinn Fein", "Independent"], p=[0.45, 0.45, 0.1]))
        return str(rng.choice(["Conservative", "Labour", "Liberal Democrat", "Green",
                               "Reform", "Independent"],
                              p=[0.38, 0.42, 0.12, 0.03, 0.04, 0.01]))

    docs = []
    for i, (tag, coords) in enumerate(features):
        fid = f"uk{i:03d}"
        nation = nation_of(coords)
        name = tag.replace("_", " ").title() if tag else f"{_country_name(600 + i)} {i:03d}"
        docs.append(_feature(fid, coords, {
            "name": name, "party": party_of(nation), "nation": nation}))

    # keep every party present at least once
    present = {d["properties"]["party"] for d in docs}
    for p in set(_PARTIES) - present:
        docs[rng.randint(4, n)]["properties"]["party"] = p

    _write_json(ASSETS / "uk_election.geojson",
                {"type": "FeatureCollection", "features": docs})

    # hex grid: 23 columns, geography-ordered row-major fill (north on top)
    cols = 23
    order = sorted(docs, key=lambda d: (-d["geometry"]["coordinates"][0][0][1],
                                        d["geometry"]["coordinates"][0][0][0]))
    sidecar = {d["id"]: {"row": i // cols, "col": i % cols} for i, d in enumerate(order)}
    _write_json(ASSETS / "uk_election.hex.json", sidecar)


def uk_spec():
    albers = {"name": "albers_conic",
              "params": {"lon_0": -3.0, "lat_0": 49.0, "lat_1": 52.0, "lat_2": 59.0}}
    nations = ["England", "Scotland", "Wales", "Northern Ireland"]
    return {
        "spec_version": 1,
        "dataset_ref": "uk_election",
        "views": [
            {"id": "choropleth", "type": "choropleth",
             "params": {"projection": albers, "category_field": "party"},
             "constraints": [{"kind": "min_area_size", "threshold": 2.0}]},
            {"id": "hex_map", "type": "hex_map",
             "params": {"category_field": "party"},
             "constraints": [{"kind": "min_hex_size", "threshold": 5.0}]},
            {"id": "waffle_horizontal", "type": "waffle_chart",
             "params": {"category_field": "party", "orientation": "horizontal",
                        "group_field": "nation", "group_order": nations},
             "constraints": [{"kind": "min_square_size", "threshold": 2.0},
                             {"kind": "min_aspect_ratio", "threshold": 1.0}]},
            {"id": "waffle_vertical", "type": "waffle_chart",
             "params": {"category_field": "party", "orientation": "vertical",
                        "group_field": "nation", "group_order": nations},
             "constraints": [{"kind": "min_square_size", "threshold": 2.0}]},
        ],
        "landscape_region": {"w_min": 0.0, "w_max": 1600.0,
                             "h_min": 0.0, "h_max": 1000.0, "step": 4.0},
    }


# ---------------------------------------------------------------------------
# Les Misérables network

_LESMIS = [
    "Myriel", "Napoleon", "MlleBaptistine", "MmeMagloire", "CountessDeLo",
    "Geborand", "Champtercier", "Cravatte", "Count", "OldMan", "Labarre",
    "Valjean", "Marguerite", "MmeDeR", "Isabeau", "Gervais", "Tholomyes",
    "Listolier", "Fameuil", "Blacheville", "Favourite", "Dahlia", "Zephine",
    "Fantine", "MmeThenardier", "Thenardier", "Cosette", "Javert",
    "Fauchelevent", "Bamatabois", "Perpetue", "Simplice", "Scaufflaire",
    "Woman1", "Judge", "Champmathieu", "Brevet", "Chenildieu", "Cochepaille",
    "Pontmercy", "Boulatruelle", "Eponine", "Anzelma", "Woman2",
    "MotherInnocent", "Gribier", "Jondrette", "MmeBurgon", "Gavroche",
    "Gillenormand", "Magnon", "MlleGillenormand", "MmePontmercy",
    "MlleVaubois", "LtGillenormand", "Marius", "BaronessT", "Mabeuf",
    "Enjolras", "Combeferre", "Prouvaire", "Feuilly", "Courfeyrac",
    "Bahorel", "Bossuet", "Joly", "Grantaire", "MotherPlutarch", "Gueulemer",
    "Babet", "Claquesous", "Montparnasse", "Toussaint", "Child1", "Child2",
    "Brujon", "MmeHucheloup",
]


def build_lesmis():
    rng = np.random.RandomState(20243)
    n = len(_LESMIS)
    assert n == 77
    # hub-weighted random co-occurrence structure: a handful of protagonists
    # touch many chapters, most characters only a few
    weight = np.ones(n)
    for hub in ("Valjean", "Marius", "Cosette", "Javert", "Gavroche", "Fantine",
                "Thenardier", "Enjolras"):
        weight[_LESMIS.index(hub)] = 12.0
    prob = weight[:, None] * weight[None, :]
    prob = 0.09 * prob / prob.mean()
    links = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.rand() < min(prob[i, j], 0.9):
                links.append({"source": _LESMIS[i], "target": _LESMIS[j],
                              "weight": int(rng.randint(1, 20))})
    # ensure no isolated characters
    linked = {l["source"] for l in links} | {l["target"] for l in links}
    for name in _LESMIS:
        if name not in linked:
            links.append({"source": name, "target": "Valjean",
                          "weight": int(rng.randint(1, 4))})
    doc = {"nodes": [{"id": name, "label": name} for name in _LESMIS],
           "links": links}
    _write_json(ASSETS / "les_miserables.json", doc)
    print(f"  ({len(links)} links)")


def network_spec():
    return {
        "spec_version": 1,
        "dataset_ref": "les_miserables",
        "views": [
            {"id": "matrix", "type": "adjacency_matrix", "params": {},
             "constraints": [{"kind": "min_matrix_label_size", "threshold": 6.0}]},
            {"id": "arcs", "type": "arc_diagram", "params": {},
             "constraints": [{"kind": "min_arc_label_size", "threshold": 6.0}]},
            {"id": "node_link", "type": "node_link", "params": {"seed": 3},
             "constraints": []},
        ],
        "landscape_region": {"w_min": 0.0, "w_max": 1600.0,
                             "h_min": 0.0, "h_max": 1000.0, "step": 4.0},
    }


# ---------------------------------------------------------------------------
# Movies table

_ADJ = ["Silent", "Crimson", "Broken", "Midnight", "Golden", "Distant",
        "Electric", "Paper", "Hollow", "Winter"]
_NOUN = ["Harbor", "Orchid", "Letters", "Mirror", "Garden", "Station",
         "Signal", "Crossing", "Lantern", "Divide"]
_GENRES = ["drama", "comedy", "thriller", "documentary", "animation"]


def build_movies():
    rng = np.random.RandomState(20244)
    n = 100
    rows = []
    seen = set()
    i = 0
    while len(rows) < n:
        critics = round(float(rng.uniform(2.0, 9.5)), 2)
        audience = round(float(np.clip(0.7 * critics + rng.normal(2.0, 1.1), 1.0, 10.0)), 2)
        if (critics, audience) in seen:
            continue
        seen.add((critics, audience))
        title = f"{_ADJ[i % 10]} {_NOUN[(i // 10) % 10]}"
        year = int(rng.randint(1972, 2024))
        genre = _GENRES[int(rng.randint(0, len(_GENRES)))]
        rows.append((title, year, genre, critics, audience))
        i += 1
    lines = ["title,year,genre,rating_critics,rating_audience"]
    lines += [f"{t},{y},{g},{c},{a}" for t, y, g, c, a in rows]
    (ASSETS / "movies.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print("wrote src/viewscape/assets/movies.csv")


def movies_spec():
    return {
        "spec_version": 1,
        "dataset_ref": "movies",
        "views": [
            {"id": "scatter", "type": "scatterplot",
             "params": {"x_field": "rating_critics", "y_field": "rating_audience"},
             "constraints": [{"kind": "max_overplotting", "threshold": 0.009}]},
            {"id": "heatmap", "type": "heatmap",
             "params": {"x_field": "rating_critics", "y_field": "rating_audience",
                        "bins": [20, 20]},
             "constraints": []},
        ],
        "landscape_region": {"w_min": 0.0, "w_max": 800.0,
                             "h_min": 0.0, "h_max": 600.0, "step": 4.0},
    }


def main():
    ASSETS.mkdir(parents=True, exist_ok=True)
    v_world, k_world = build_world()
    build_americas(v_world, k_world)
    build_uk()
    build_lesmis()
    build_movies()
    _write_json(ASSETS / "spec_population.json",
                population_spec(k_world, "world_population"))
    _write_json(ASSETS / "spec_americas_population.json",
                population_spec(k_world, "americas_population"))
    _write_json(ASSETS / "spec_uk_election.json", uk_spec())
    _write_json(ASSETS / "spec_network.json", network_spec())
    _write_json(ASSETS / "spec_movies.json", movies_spec())
    print(f"circle_scale (world/Americas specs): {k_world!r}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
