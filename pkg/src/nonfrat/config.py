"""Resource bounds and parallelism settings.

Override order is defaults < config file < command-line flags; the file
format is one ``key = value`` pair per line with ``#`` comments.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import InputError, ParseError

DEFAULT_ENUMERATION_BOUND = 20000
DEFAULT_LATTICE_BOUND = 600
DEFAULT_GENERATION_BOUND = 300
DEFAULT_SPIN_BOUND = 100000


@dataclass(frozen=True)
class Config:
    enumeration_bound: int = DEFAULT_ENUMERATION_BOUND
    lattice_bound: int = DEFAULT_LATTICE_BOUND
    generation_bound: int = DEFAULT_GENERATION_BOUND
    spin_bound: int = DEFAULT_SPIN_BOUND
    parallelism: int = 0  # 0 means "use os.cpu_count()"

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value < 0:
                raise InputError(f"config value {f.name} must be a non-negative integer, got {value!r}")
        for f in fields(self):
            if f.name != "parallelism" and getattr(self, f.name) == 0:
                raise InputError(f"config value {f.name} must be positive")

    @property
    def workers(self) -> int:
        return self.parallelism or os.cpu_count() or 1


_FIELD_NAMES = {f.name for f in fields(Config)}


def parse_config_file(text: str) -> dict:
    """Parse ``key = value`` lines into keyword arguments for Config."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {raw.strip()!r}", line=lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _FIELD_NAMES:
            raise ParseError(f"unknown config key {key!r}", line=lineno)
        try:
            values[key] = int(value.strip())
        except ValueError:
            raise ParseError(f"value for {key} must be an integer", line=lineno) from None
    return values


def load_config(path: str | None = None, overrides: dict | None = None) -> Config:
    cfg = Config()
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = replace(cfg, **parse_config_file(fh.read()))
    if overrides:
        cfg = replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    return cfg
