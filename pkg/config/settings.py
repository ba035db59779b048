"""
Runtime settings, read from the environment.

THETA_CALC_MAX_G caps the dimension of the abelian varieties the engine will
build (default 64). THETA_CALC_LOG_LEVEL sets the default log level.
"""
import os
from dataclasses import dataclass, field
from typing import Mapping, Optional, Tuple

from cohomology.errors import ConfigurationError

MAX_G_ENV = "THETA_CALC_MAX_G"
LOG_LEVEL_ENV = "THETA_CALC_LOG_LEVEL"

DEFAULT_MAX_G = 64
DEFAULT_GENERA = tuple(range(2, 11))
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class Settings:
    max_g: int = DEFAULT_MAX_G
    default_genera: Tuple[int, ...] = field(default=DEFAULT_GENERA)
    profile_samples: int = 4
    fuzz_seed: int = 2008
    log_level: str = "WARNING"


def _parse_max_g(raw: str) -> int:
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigurationError(f"{MAX_G_ENV} must be a positive integer, got {raw!r}")
    if value < 1:
        raise ConfigurationError(f"{MAX_G_ENV} must be a positive integer, got {raw!r}")
    return value


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """Build settings from the given mapping (defaults to os.environ)"""
    env = os.environ if environ is None else environ
    max_g = DEFAULT_MAX_G
    if env.get(MAX_G_ENV):
        max_g = _parse_max_g(env[MAX_G_ENV])

    log_level = env.get(LOG_LEVEL_ENV, "WARNING").strip().upper() or "WARNING"
    if log_level not in LOG_LEVELS:
        raise ConfigurationError(
            f"{LOG_LEVEL_ENV} must be one of {', '.join(LOG_LEVELS)}, got {log_level!r}"
        )

    genera = tuple(g for g in DEFAULT_GENERA if g <= max_g)
    return Settings(max_g=max_g, default_genera=genera, log_level=log_level)


def max_g() -> int:
    """Current dimension cap; re-read on every call so tests can patch the environment"""
    raw = os.environ.get(MAX_G_ENV)
    if not raw:
        return DEFAULT_MAX_G
    return _parse_max_g(raw)
