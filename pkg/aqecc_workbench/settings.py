"""
Runtime settings: enumeration budgets, worker threads and the suite seed.

Defaults come from the environment (AQECC_MAX_FIELD_ORDER,
AQECC_MAX_CODEWORDS, AQECC_THREADS, AQECC_SEED) and can be replaced for a
block of code with `using_settings`.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import asdict, dataclass, replace
from typing import Any

from loguru import logger


@dataclass(frozen=True)
class Settings:
    """Budgets and knobs read by field construction and the oracles."""

    max_field_order: int = 256
    max_codewords: int = 2**26
    threads: int = 1
    seed: int = 0
    chunk_size: int = 4096

    def __post_init__(self) -> None:
        if self.max_field_order < 2:
            raise ValueError("max_field_order must be at least 2")
        if self.max_codewords < 1:
            raise ValueError("max_codewords must be positive")
        if self.threads < 1:
            raise ValueError("threads must be positive")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be positive")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _from_environment() -> Settings:
    overrides: dict[str, int] = {}
    for name, variable in (
        ("max_field_order", "AQECC_MAX_FIELD_ORDER"),
        ("max_codewords", "AQECC_MAX_CODEWORDS"),
        ("threads", "AQECC_THREADS"),
        ("seed", "AQECC_SEED"),
    ):
        raw = os.environ.get(variable)
        if raw is None:
            continue
        try:
            overrides[name] = int(raw)
        except ValueError:
            logger.warning("ignoring non-integer {}={!r}", variable, raw)
    return Settings(**overrides)


_current = _from_environment()


def current_settings() -> Settings:
    """Return the settings in effect."""
    return _current


def configure(**changes: Any) -> Settings:
    """Replace fields of the current settings and return the new value."""
    global _current
    _current = replace(_current, **changes)
    logger.debug("settings now {}", _current)
    return _current


@contextmanager
def using_settings(settings: Settings | None = None, **changes: Any) -> Iterator[Settings]:
    """Temporarily install `settings` (or the current ones with `changes`)."""
    global _current
    previous = _current
    _current = replace(settings or previous, **changes)
    try:
        yield _current
    finally:
        _current = previous


def resolve_settings(settings: Settings | None) -> Settings:
    return settings if settings is not None else _current
