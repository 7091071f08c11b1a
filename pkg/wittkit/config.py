"""
Runtime configuration.

Values come from the process environment, optionally seeded from a ``.env``
file in the working directory.
"""

import os
from functools import lru_cache
from typing import Dict

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from .errors import ConfigurationError

ENV_PREFIX = "WITTKIT_"

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Tunable knobs shared by the library and the CLI."""

    seed: int = Field(7, description="Default seed for randomized checks")
    resolvent_seed: int = Field(90, description="Seed for randomized Hilbert 90 trial elements")
    resolvent_budget: int = Field(64, ge=1, description="Maximum number of resolvent trial elements")
    crosscheck_depth: int = Field(12, ge=0, description="Depth of the wr_mul truncated cross-check, 0 disables")
    ghost_crosscheck: bool = Field(True, description="Cross-check Witt products against ghosts over Q-algebras")
    verify_workers: int = Field(4, ge=1, description="Worker threads used by verify")
    log_level: str = Field("WARNING", description="Logging level for the CLI handler")
    max_group_order: int = Field(64, ge=1, description="Largest finite group accepted by group_cohomology")
    max_cochain_degree: int = Field(3, ge=0, description="Largest cochain degree accepted by group_cohomology")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in _LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return value


def _read_environment() -> Dict[str, str]:
    values = {}
    for name in Settings.model_fields:
        raw = os.environ.get(ENV_PREFIX + name.upper())
        if raw is not None and raw != "":
            values[name] = raw
    return values


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Load settings once per process

    Returns:
        Settings: validated configuration

    Raises:
        ConfigurationError: if an environment value does not validate
    """
    load_dotenv(override=False)
    try:
        return Settings(**_read_environment())
    except ValidationError as exc:
        raise ConfigurationError(f"Invalid {ENV_PREFIX}* environment: {exc}") from exc


def reset_settings() -> None:
    """Forget cached settings so the next access re-reads the environment."""
    get_settings.cache_clear()
