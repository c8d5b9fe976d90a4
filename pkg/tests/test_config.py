import pytest

from romanoff.config import RunConfig, load_config, parse_config_file, thread_count


def test_defaults():
    cfg = RunConfig()
    assert cfg.zero_in_n is True
    assert cfg.memory_budget_bytes == 2 * 1024**3
    assert cfg.precision_bits == 96
    assert cfg.output_format == "csv"


def test_validation():
    with pytest.raises(ValueError):
        RunConfig(memory_budget_bytes=0)
    with pytest.raises(ValueError):
        RunConfig(precision_bits=16)
    with pytest.raises(ValueError):
        RunConfig(output_format="xml")


def test_parse_config_file(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text(
        "zero_in_N = no   # comment\n"
        "\n"
        "work_budget = 12345\n"
        "output_format = json\n"
    )
    values = parse_config_file(str(path))
    assert values == {"zero_in_n": False, "work_budget": 12345, "output_format": "json"}


def test_parse_config_file_errors(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("zero_in_n maybe\n")
    with pytest.raises(ValueError):
        parse_config_file(str(path))
    path.write_text("zero_in_n = maybe\n")
    with pytest.raises(ValueError):
        parse_config_file(str(path))
    path.write_text("mystery = 1\n")
    with pytest.raises(ValueError):
        parse_config_file(str(path))


def test_load_config_priority(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("seed = 7\nprecision_bits = 64\n")
    cfg = load_config(str(path), seed=12, output_format=None)
    assert cfg.seed == 12  # explicit override wins
    assert cfg.precision_bits == 64  # file wins over the default


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("ROMANOFF_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("ROMANOFF_THREADS", "0")
    with pytest.raises(ValueError):
        thread_count()
    monkeypatch.delenv("ROMANOFF_THREADS")
    assert thread_count() >= 1
