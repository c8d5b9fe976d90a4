import json
from fractions import Fraction

import pytest

from romanoff.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(out):
    comments = {}
    rows = []
    header = None
    for line in out.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            comments[key] = value
        elif header is None:
            header = line.split(",")
        else:
            rows.append(line.split(","))
    return comments, header, rows


def test_density_example(capsys):
    code, out, _ = run_cli(capsys, "density", "--limit", "10", "--terms", "2", "--shape", "squares")
    assert code == 0
    comments, header, rows = parse_csv(out)
    assert comments["summary.v"] == "7"
    assert comments["summary.cs_holds"] == "true"
    assert header == ["r", "count"]
    assert ["2", "4"] in rows


def test_density_no_zero(capsys):
    code, out, _ = run_cli(capsys, "density", "--limit", "10", "--no-zero-in-n")
    assert code == 0
    comments, _, _ = parse_csv(out)
    assert comments["summary.v"] == "3"
    assert comments["config.zero_in_n"] == "false"


def test_density_budget_exit_code(capsys):
    code, _, err = run_cli(capsys, "density", "--limit", "1000000", "--mem-budget", "100000")
    assert code == 2
    assert "budget" in err


def test_quadcount_examples(capsys):
    code, out, _ = run_cli(capsys, "quadcount", "--a", "1", "--mod", "24")
    assert code == 0
    comments, _, rows = parse_csv(out)
    assert comments["summary.n_roots"] == "8"
    assert [r[0] for r in rows] == ["1", "5", "7", "11", "13", "17", "19", "23"]

    code, out, _ = run_cli(capsys, "quadcount", "--a", "1", "--mod", "8", "--y", "5")
    comments, _, _ = parse_csv(out)
    assert comments["summary.window_count"] == "3"

    code, out, _ = run_cli(capsys, "quadcount", "--a", "0", "--mod", "1")
    comments, _, _ = parse_csv(out)
    assert comments["summary.n_roots"] == "1"


def test_quadcount_bad_window(capsys):
    code, _, err = run_cli(capsys, "quadcount", "--a", "1", "--mod", "8", "--y", "100")
    assert code == 2


def test_sums_s2_and_s1(capsys):
    code, out, _ = run_cli(capsys, "sums", "--kind", "s2", "--dmax", "100", "--y", "7")
    assert code == 0
    _, header, rows = parse_csv(out)
    row = dict(zip(header, rows[0]))
    assert row["exact"] == "8/5"
    assert abs(float(row["value"]) - 1.6) < 1e-25

    code, out, _ = run_cli(capsys, "sums", "--kind", "s1", "--dmax", "5")
    _, header, rows = parse_csv(out)
    row = dict(zip(header, rows[0]))
    assert abs(float(row["value"]) - 1.3357022603955158) < 1e-12

    code, out, _ = run_cli(capsys, "sums", "--kind", "mertens", "--y", "10")
    _, header, rows = parse_csv(out)
    row = dict(zip(header, rows[0]))
    assert Fraction(row["exact"]) == Fraction(247, 210)
    assert abs(float(row["value"]) - 1.17619) < 5e-6


def test_sums_multiple_cutoffs(capsys):
    code, out, _ = run_cli(capsys, "sums", "--kind", "s1", "--dmax", "10,100,1000")
    assert code == 0
    _, _, rows = parse_csv(out)
    assert len(rows) == 3
    values = [float(r[3]) for r in rows]
    assert values == sorted(values)


def test_sums_missing_flag(capsys):
    code, _, err = run_cli(capsys, "sums", "--kind", "mertens")
    assert code == 2


def test_pairs_examples(capsys):
    code, out, _ = run_cli(capsys, "pairs", "--limit", "100", "--h", "2")
    assert code == 0
    comments, _, _ = parse_csv(out)
    assert comments["summary.pi2"] == "8"

    code, out, _ = run_cli(capsys, "pairs", "--limit", "20", "--h", "6")
    comments, _, _ = parse_csv(out)
    assert comments["summary.pi2"] == "4"

    code, out, _ = run_cli(capsys, "pairs", "--limit", "100", "--h", "1")
    comments, _, _ = parse_csv(out)
    assert int(comments["summary.pi2"]) <= 1

    code, _, _ = run_cli(capsys, "pairs", "--limit", "100", "--h", "0")
    assert code == 2


def test_json_format_round_trips(capsys):
    code, out, _ = run_cli(capsys, "density", "--limit", "10", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "density"
    assert payload["config"]["output_format"] == "json"
    assert payload["summary"]["v"] == "7"
    assert payload["columns"] == ["r", "count"]


def test_deterministic_output(capsys):
    args = ("sums", "--kind", "s1", "--dmax", "500")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2
    args = ("verify", "--suite", "prop2", "--samples", "50", "--mmax", "5000")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_seed_changes_sampled_grid(capsys):
    _, out1, _ = run_cli(capsys, "verify", "--suite", "prop2", "--samples", "20", "--mmax", "1000", "--seed", "1")
    _, out2, _ = run_cli(capsys, "verify", "--suite", "prop2", "--samples", "20", "--mmax", "1000", "--seed", "2")
    assert out1 != out2


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("zero_in_N = false\nseed = 9\nprecision_bits = 64\n# comment\n")
    code, out, _ = run_cli(capsys, "density", "--limit", "10", "--config", str(cfg))
    assert code == 0
    comments, _, _ = parse_csv(out)
    assert comments["config.zero_in_n"] == "false"
    assert comments["config.seed"] == "9"
    assert comments["config.precision_bits"] == "64"
    # CLI flag beats the file
    code, out, _ = run_cli(capsys, "density", "--limit", "10", "--config", str(cfg), "--zero-in-n")
    comments, _, _ = parse_csv(out)
    assert comments["config.zero_in_n"] == "true"


def test_config_file_bad_key(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("no_such_key = 1\n")
    code, _, err = run_cli(capsys, "density", "--limit", "10", "--config", str(cfg))
    assert code == 2


def test_verify_suites_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "prop1", "--mmax", "100")
    assert code == 0
    comments, _, _ = parse_csv(out)
    assert comments["summary.ok"] == "true"

    code, out, _ = run_cli(capsys, "verify", "--suite", "hzero", "--max-exp", "8")
    assert code == 0

    code, out, _ = run_cli(capsys, "verify", "--suite", "lemma12", "--mmax", "120", "--pmax", "500")
    assert code == 0

    code, out, _ = run_cli(
        capsys, "verify", "--suite", "k2count", "--samples", "50", "--dmax", "500",
        "--expmax", "6", "--kmax", "30",
    )
    assert code == 0


def test_verify_emits_config_in_report(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "hzero", "--max-exp", "4", "--seed", "3")
    comments, _, _ = parse_csv(out)
    assert comments["config.seed"] == "3"
    assert comments["kind"] == "verify.hzero"
