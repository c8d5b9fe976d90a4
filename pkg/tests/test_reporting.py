import io
import json
from fractions import Fraction

import mpmath
import pytest

from romanoff.config import RunConfig
from romanoff.reporting import emit_report, format_cell


def test_int_and_bool_cells():
    assert format_cell(42) == "42"
    assert format_cell(True) == "true"
    assert format_cell(False) == "false"
    assert format_cell(None) == ""


def test_float_cells_round_trip():
    for x in (0.1, 1 / 3, 2.0**-52, 1e300, 0.078498):
        assert float(format_cell(x)) == x


def test_fraction_cells_round_trip():
    for fr in (Fraction(8, 5), Fraction(-3, 7), Fraction(10**40, 3)):
        text = format_cell(fr)
        assert Fraction(text) == fr


def test_mpf_cells_parse_back_at_stated_precision():
    for bits in (64, 96, 128):
        with mpmath.workprec(bits):
            value = mpmath.sqrt(2) + mpmath.mpf(1) / 3
            text = format_cell(value, bits)
            back = mpmath.mpf(text)
            assert abs(back - value) <= abs(value) * mpmath.mpf(2) ** (2 - bits)


def test_csv_report_structure():
    buf = io.StringIO()
    cfg = RunConfig()
    emit_report(
        buf,
        config=cfg,
        kind="demo",
        summary={"total": 3, "ratio": 0.5},
        columns=["a", "b"],
        rows=[(1, Fraction(1, 2)), (2, Fraction(3, 4))],
    )
    lines = buf.getvalue().splitlines()
    assert lines[0] == "# kind=demo"
    assert "# config.zero_in_n=true" in lines
    assert "# summary.total=3" in lines
    header_at = next(i for i, l in enumerate(lines) if not l.startswith("#"))
    assert lines[header_at] == "a,b"
    assert lines[header_at + 1] == "1,1/2"


def test_json_report_structure():
    buf = io.StringIO()
    cfg = RunConfig(output_format="json")
    emit_report(
        buf,
        config=cfg,
        kind="demo",
        summary={"total": 3},
        columns=["a"],
        rows=[(Fraction(1, 3),)],
    )
    payload = json.loads(buf.getvalue())
    assert payload["kind"] == "demo"
    assert payload["config"]["output_format"] == "json"
    assert payload["rows"] == [["1/3"]]
