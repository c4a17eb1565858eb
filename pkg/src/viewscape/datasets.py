"""Bundled example datasets and specs, and file loading helpers.

Five datasets ship with the package: world and Americas population maps,
a UK general-election result, a movie-ratings table, and the Les Misérables
co-occurrence network. Four specs exercise them. Everything loads through
:mod:`importlib.resources` so the package works from a zip or wheel.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .data import Dataset, DataError, load_geo, load_network, load_table
from .spec import ResponsiveSpec, parse_spec

_ASSETS = "viewscape.assets"

DATASET_NAMES = ("world_population", "americas_population", "uk_election",
                 "movies", "les_miserables")
SPEC_NAMES = ("population", "americas_population", "uk_election", "network", "movies")


def _read(name: str) -> str:
    return resources.files(_ASSETS).joinpath(name).read_text(encoding="utf-8")


def load_world_population():
    return load_geo(_read("world_population.geojson"),
                    value_fields=("population",), category_fields=("region",))


def load_americas_population():
    return load_geo(_read("americas_population.geojson"),
                    value_fields=("population",), category_fields=("region",))


def load_uk_election():
    return load_geo(_read("uk_election.geojson"),
                    category_fields=("party", "nation"),
                    hex_sidecar=_read("uk_election.hex.json"))


def load_movies():
    return load_table(_read("movies.csv"))


def load_les_miserables():
    return load_network(_read("les_miserables.json"))


_LOADERS = {
    "world_population": load_world_population,
    "americas_population": load_americas_population,
    "uk_election": load_uk_election,
    "movies": load_movies,
    "les_miserables": load_les_miserables,
}


def load_bundled_dataset(name: str) -> Dataset:
    if name not in _LOADERS:
        raise KeyError(f"unknown bundled dataset {name!r}; available: {sorted(_LOADERS)}")
    return _LOADERS[name]()


def load_bundled_spec(name: str) -> ResponsiveSpec:
    if name not in SPEC_NAMES:
        raise KeyError(f"unknown bundled spec {name!r}; available: {sorted(SPEC_NAMES)}")
    return parse_spec(_read(f"spec_{name}.json"))


def bundled_spec_path(name: str) -> Path:
    """Filesystem path of a bundled spec (for CLI examples and the service)."""
    return Path(str(resources.files(_ASSETS).joinpath(f"spec_{name}.json")))


def bundled_dataset_path(name: str) -> Path:
    ext = {"movies": "csv", "les_miserables": "json"}.get(name, "geojson")
    return Path(str(resources.files(_ASSETS).joinpath(f"{name}.{ext}")))


# ---------------------------------------------------------------------------
# Loading arbitrary dataset files (CLI / service)

def load_dataset_file(path) -> Dataset:
    """Load a dataset from disk, inferring its kind.

    ``.csv`` loads as a table. JSON inputs are a GeoJSON FeatureCollection
    or node-link network, told apart by their top-level shape. A sibling
    ``<stem>.hex.json`` file, when present, supplies hex-grid coordinates
    for geographic data.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".csv":
        return load_table(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DataError(f"{path}: not valid JSON: {e.msg}") from e
    if isinstance(doc, dict) and doc.get("type") == "FeatureCollection":
        sidecar = path.with_suffix("").with_suffix(".hex.json")
        hex_text = sidecar.read_text(encoding="utf-8") if sidecar.exists() else None
        return load_geo(text, hex_sidecar=hex_text)
    if isinstance(doc, dict) and "nodes" in doc:
        return load_network(text)
    raise DataError(f"{path}: unrecognized dataset format")
