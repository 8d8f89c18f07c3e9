"""Deterministic JSON rendering for reports and state files.

Floats are written with 17 significant digits (round-trip exact for IEEE
doubles) and always carry a decimal point so they read back as floats;
non-finite numbers are rejected.  Dict insertion order is preserved, which
makes repeated seeded runs byte-identical.
"""
from __future__ import annotations

import json
import math


def format_float(value: float) -> str:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"non-finite value {value!r} cannot be reported")
    if value == 0.0:
        return "0.0"
    text = f"{value:.17g}"
    if not any(c in text for c in ".eE"):
        text += ".0"
    return text


def render_json(value) -> str:
    """Serialize nested dicts/lists/scalars; floats via :func:`format_float`."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    if isinstance(value, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {render_json(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render_json(v) for v in value) + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")
