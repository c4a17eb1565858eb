"""Shared fixtures: bundled datasets, specs, and layout caches."""

from __future__ import annotations

import pytest

from viewscape import LayoutContext
from viewscape.datasets import load_bundled_dataset, load_bundled_spec


@pytest.fixture(scope="session")
def world():
    return load_bundled_dataset("world_population")


@pytest.fixture(scope="session")
def americas():
    return load_bundled_dataset("americas_population")


@pytest.fixture(scope="session")
def uk():
    return load_bundled_dataset("uk_election")


@pytest.fixture(scope="session")
def movies():
    return load_bundled_dataset("movies")


@pytest.fixture(scope="session")
def lesmis():
    return load_bundled_dataset("les_miserables")


@pytest.fixture(scope="session")
def spec_population():
    return load_bundled_spec("population")


@pytest.fixture(scope="session")
def spec_americas():
    return load_bundled_spec("americas_population")


@pytest.fixture(scope="session")
def spec_uk():
    return load_bundled_spec("uk_election")


@pytest.fixture(scope="session")
def spec_network():
    return load_bundled_spec("network")


@pytest.fixture(scope="session")
def spec_movies():
    return load_bundled_spec("movies")


@pytest.fixture(scope="session")
def world_ctx(world):
    return LayoutContext(world)


@pytest.fixture(scope="session")
def americas_ctx(americas):
    return LayoutContext(americas)


@pytest.fixture(scope="session")
def uk_ctx(uk):
    return LayoutContext(uk)


@pytest.fixture(scope="session")
def movies_ctx(movies):
    return LayoutContext(movies)


@pytest.fixture(scope="session")
def lesmis_ctx(lesmis):
    return LayoutContext(lesmis)
