"""Canonical JSON formatting shared by the CLI and the HTTP service.

Keys are sorted and floats are formatted at 6 significant digits so that the
same logical payload always serializes to the same bytes (golden-file tests
and CLI/service parity rely on this).
"""

from __future__ import annotations

import json
import math
from typing import Any


def _round_floats(obj: Any) -> Any:
    if isinstance(obj, float):
        if math.isnan(obj) or math.isinf(obj):
            raise ValueError("non-finite float in JSON payload")
        if obj == int(obj) and abs(obj) < 1e15:
            return int(obj)
        return float(f"{obj:.6g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def canonical_json(obj: Any) -> str:
    """Serialize with sorted keys, compact separators, 6-sig-digit floats."""
    return json.dumps(_round_floats(obj), sort_keys=True, separators=(",", ":"))


def canonical_json_bytes(obj: Any) -> bytes:
    return canonical_json(obj).encode("utf-8")
