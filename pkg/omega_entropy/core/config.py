import os
import json
import logging
from pathlib import Path
from typing import Optional
from dataclasses import dataclass

from omega_entropy.core.errors import ConfigError
from omega_entropy.core.models import OutputFormat

FORMATS = tuple(f.value for f in OutputFormat)
UNITS = ("nats", "bits", "beans")
MAX_ENUMERATION_LIMIT = 10_000_000


@dataclass
class Config:
    LOG_LEVEL: str = "WARNING"
    DEBUG: bool = False
    # Stream ingestion
    CHUNK_SIZE: int = 1 << 20
    MAX_WORKERS: int = 4
    # Output defaults
    DEFAULT_FORMAT: str = "table"
    DEFAULT_UNIT: str = "bits"
    TABLE_THEME: str = "dark"
    # Composition enumeration guard
    ENUMERATION_LIMIT: int = MAX_ENUMERATION_LIMIT


def get_config() -> Config:
    """Load configuration from environment variables, .env file, and setup config."""
    # Load from .env file if it exists
    env_path = Path.cwd() / ".env"
    if env_path.exists():
        from dotenv import load_dotenv
        load_dotenv(env_path)

    setup_config = load_setup_config() or {}

    def setting(key: str, default: str) -> str:
        value = os.getenv(key)
        if value is None:
            value = setup_config.get(key.lower(), default)
        return str(value)

    debug = setting("DEBUG", "false").lower() == "true"
    log_level = setting("LOG_LEVEL", "WARNING").upper()
    if log_level not in logging._nameToLevel:
        raise ConfigError(f"LOG_LEVEL must be a logging level name, got {log_level!r}")

    chunk_size = _positive_int("CHUNK_SIZE", setting("CHUNK_SIZE", str(1 << 20)))
    max_workers = _positive_int("MAX_WORKERS", setting("MAX_WORKERS", "4"))
    enumeration_limit = _positive_int(
        "ENUMERATION_LIMIT", setting("ENUMERATION_LIMIT", str(MAX_ENUMERATION_LIMIT))
    )
    if enumeration_limit > MAX_ENUMERATION_LIMIT:
        raise ConfigError(f"ENUMERATION_LIMIT may not exceed {MAX_ENUMERATION_LIMIT}")

    default_format = setting("DEFAULT_FORMAT", "table").lower()
    if default_format not in FORMATS:
        raise ConfigError(f"DEFAULT_FORMAT must be one of {', '.join(FORMATS)}")
    default_unit = setting("DEFAULT_UNIT", "bits").lower()
    if default_unit not in UNITS:
        raise ConfigError(f"DEFAULT_UNIT must be one of {', '.join(UNITS)}")
    table_theme = setting("TABLE_THEME", "dark").lower()

    return Config(
        LOG_LEVEL="DEBUG" if debug else log_level,
        DEBUG=debug,
        CHUNK_SIZE=chunk_size,
        MAX_WORKERS=max_workers,
        DEFAULT_FORMAT=default_format,
        DEFAULT_UNIT=default_unit,
        TABLE_THEME=table_theme,
        ENUMERATION_LIMIT=enumeration_limit,
    )


def _positive_int(key: str, raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{key} must be positive, got {value}")
    return value


def load_setup_config() -> Optional[dict]:
    """Load setup configuration from file."""
    config_file = Path.home() / ".omega-entropy" / "config.json"
    if config_file.exists():
        try:
            with open(config_file, 'r') as f:
                return json.load(f)
        except Exception:
            return None
    return None


def configure_logging(config: Config) -> None:
    """Route library logs to stderr through rich."""
    from rich.console import Console
    from rich.logging import RichHandler

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=config.DEBUG,
        rich_tracebacks=config.DEBUG,
    )
    root = logging.getLogger("omega_entropy")
    root.handlers[:] = [handler]
    root.setLevel(config.LOG_LEVEL)
    root.propagate = False
