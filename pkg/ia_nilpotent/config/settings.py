# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Run settings
============

One immutable record holds every cap, budget and seed used by the library.
Library functions read the active record through get_settings(); callers
override it for a block with use_settings().

Usage:
    from ia_nilpotent.config.settings import get_settings, use_settings

    with use_settings(get_settings().replace(oracle_cap=256, seed=7)):
        ...
"""

import contextvars
import dataclasses
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator

from ia_nilpotent.exceptions import SettingsError


@dataclass(frozen=True)
class Settings:
    group_cap: int = 4096
    full_scan_cap: int = 512
    oracle_cap: int = 128
    oracle_candidate_budget: int = 10**6
    collect_budget: int = 10**6
    sample_limit: int = 256
    exhaustive_threshold: int = 10**6
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise SettingsError(f"{field.name} must be an integer, got {value!r}")
            if field.name == "seed":
                if value < 0:
                    raise SettingsError("seed must be non-negative")
            elif value <= 0:
                raise SettingsError(f"{field.name} must be positive, got {value}")

    def replace(self, **overrides) -> "Settings":
        """Copy with some fields replaced (None values are ignored)"""
        return dataclasses.replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


_active: contextvars.ContextVar[Settings] = contextvars.ContextVar("ia_nilpotent_settings", default=Settings())


def get_settings() -> Settings:
    """
    Get the active settings

    Returns:
        Settings: defaults unless a use_settings() block is active
    """
    return _active.get()


@contextmanager
def use_settings(settings: Settings) -> Iterator[Settings]:
    """Activate settings for the enclosed block"""
    token = _active.set(settings)
    try:
        yield settings
    finally:
        _active.reset(token)
