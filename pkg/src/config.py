"""
Runtime settings and logging setup.

Settings are read from the environment; a `.env` file in the working
directory is loaded first when present.
"""

import logging
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from .exceptions import ParseError

ENV_PREFIX = "PLANEDRAW_"

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


@dataclass(frozen=True)
class Settings:
    """Tunable limits and switches."""

    limit_n: int = 12
    log_level: str = "WARNING"
    debug_oracle: bool = False
    order_depth: int = 8
    bench_workers: int = 1

    def with_overrides(self, **changes) -> "Settings":
        """Return a copy with the non-None keyword values replaced."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}")


def _env_bool(name: str, default: bool) -> bool:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    value = raw.strip().lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    raise ParseError(f"{ENV_PREFIX}{name} must be a boolean, got {raw!r}")


def load_settings(env_file: Optional[str] = None) -> Settings:
    """
    Build settings from the environment.

    Args:
        env_file: Optional path to a dotenv file; defaults to ./.env

    Returns:
        Settings instance
    """
    path = Path(env_file) if env_file else Path.cwd() / ".env"
    if path.exists():
        load_dotenv(path, override=False)

    defaults = Settings()
    return Settings(
        limit_n=_env_int("LIMIT_N", defaults.limit_n),
        log_level=os.environ.get(ENV_PREFIX + "LOG_LEVEL", defaults.log_level).upper(),
        debug_oracle=_env_bool("DEBUG_ORACLE", defaults.debug_oracle),
        order_depth=_env_int("ORDER_DEPTH", defaults.order_depth),
        bench_workers=_env_int("BENCH_WORKERS", defaults.bench_workers),
    )


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide settings, loaded on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def set_settings(settings: Optional[Settings]) -> None:
    """Install settings (None forces a reload on next access)."""
    global _settings
    _settings = settings


def configure_logging(level: Optional[str] = None) -> None:
    """Send package logs to stderr at the given level."""
    level = (level or get_settings().log_level).upper()
    root = logging.getLogger("src")
    root.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(getattr(logging, level, logging.WARNING))
