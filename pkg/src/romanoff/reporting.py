"""Deterministic CSV/JSON emission with the active configuration embedded.

CSV reports start with '#' comment lines carrying the kind, the full run
configuration and the summary values, followed by a plain header row and one
record per item. JSON mirrors the same content inside one object. Cells are
formatted so they parse back exactly: integers verbatim, rationals as
"num/den", floats via repr, high-precision values with enough digits for the
configured precision.
"""

from __future__ import annotations

import json
from fractions import Fraction

import mpmath

from .config import RunConfig


def _mpf_digits(precision_bits: int) -> int:
    return int(precision_bits * 0.30103) + 3


def format_cell(value, precision_bits: int = 96) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, _mpf_digits(precision_bits))
    if value is None:
        return ""
    return str(value)


def emit_report(
    stream,
    *,
    config: RunConfig,
    kind: str,
    summary: dict,
    columns: list[str],
    rows: list[tuple],
) -> None:
    bits = config.precision_bits
    if config.output_format == "json":
        payload = {
            "kind": kind,
            "config": {k: format_cell(v, bits) for k, v in config.as_dict().items()},
            "summary": {k: format_cell(v, bits) for k, v in summary.items()},
            "columns": columns,
            "rows": [[format_cell(v, bits) for v in row] for row in rows],
        }
        json.dump(payload, stream, indent=2)
        stream.write("\n")
        return
    stream.write(f"# kind={kind}\n")
    for key, value in config.as_dict().items():
        stream.write(f"# config.{key}={format_cell(value, bits)}\n")
    for key, value in summary.items():
        stream.write(f"# summary.{key}={format_cell(value, bits)}\n")
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(format_cell(v, bits) for v in row) + "\n")
