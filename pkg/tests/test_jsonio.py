"""Canonical JSON formatting."""

import pytest

from viewscape.jsonio import canonical_json


def test_sorted_keys_and_compact_separators():
    assert canonical_json({"b": 1, "a": 2}) == '{"a":2,"b":1}'


def test_six_significant_digits():
    assert canonical_json({"x": 0.123456789}) == '{"x":0.123457}'
    assert canonical_json({"x": 1234567.89}) == '{"x":1234570.0}' or \
        canonical_json({"x": 1234567.89}) == '{"x":1.23457e+06}'


def test_integral_floats_collapse_to_ints():
    assert canonical_json({"x": 2.0}) == '{"x":2}'
    assert canonical_json([1.0, 0.5]) == "[1,0.5]"


def test_nested_and_tuples():
    assert canonical_json({"a": (1.0, {"z": 3.25})}) == '{"a":[1,{"z":3.25}]}'


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        canonical_json({"x": float("nan")})
    with pytest.raises(ValueError):
        canonical_json([float("inf")])


def test_deterministic_bytes():
    doc = {"k": [0.1, 0.2, {"n": 7.0}], "m": "text"}
    assert canonical_json(doc) == canonical_json(dict(reversed(list(doc.items()))))
