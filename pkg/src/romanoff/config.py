"""Run-wide configuration: conventions, budgets, precision, output format."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, fields, replace

DEFAULT_MEMORY_BUDGET = 2 * 1024**3
DEFAULT_WORK_BUDGET = 10**8

THREADS_ENV_VAR = "ROMANOFF_THREADS"


class BudgetError(Exception):
    """A request exceeds the configured memory or work budget."""


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every command; embedded in every report.

    zero_in_n controls whether exponent ranges "m in N" start at 0 or 1.
    """

    zero_in_n: bool = True
    memory_budget_bytes: int = DEFAULT_MEMORY_BUDGET
    work_budget: int = DEFAULT_WORK_BUDGET
    precision_bits: int = 96
    output_format: str = "csv"
    seed: int = 0

    def __post_init__(self):
        if self.memory_budget_bytes < 1 or self.work_budget < 1:
            raise ValueError("budgets must be positive")
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT_CONFIG = RunConfig()

_BOOL_WORDS = {
    "true": True,
    "false": False,
    "yes": True,
    "no": False,
    "1": True,
    "0": False,
}

_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _parse_value(key: str, raw: str):
    if key == "zero_in_n":
        try:
            return _BOOL_WORDS[raw.strip().lower()]
        except KeyError:
            raise ValueError(f"bad boolean {raw!r} for {key}") from None
    if key == "output_format":
        return raw.strip()
    return int(raw)


def parse_config_file(path: str) -> dict:
    """Flat key = value settings; '#' starts a comment, blank lines ignored."""
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, raw = (part.strip() for part in line.split("=", 1))
            key = key.lower()
            if key == "zero_in_N".lower():
                key = "zero_in_n"
            if key not in _FIELD_TYPES:
                raise ValueError(f"{path}:{lineno}: unknown setting {key!r}")
            values[key] = _parse_value(key, raw)
    return values


def load_config(path: str | None = None, **overrides) -> RunConfig:
    """Defaults, then the config file, then explicit overrides (None skipped)."""
    cfg = DEFAULT_CONFIG
    if path is not None:
        cfg = replace(cfg, **parse_config_file(path))
    cleaned = {k: v for k, v in overrides.items() if v is not None}
    if cleaned:
        cfg = replace(cfg, **cleaned)
    return cfg


def thread_count() -> int:
    """Worker threads for parallel scans: $ROMANOFF_THREADS, else all cores."""
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    if raw:
        n = int(raw)
        if n < 1:
            raise ValueError(f"{THREADS_ENV_VAR} must be positive")
        return n
    return os.cpu_count() or 1
