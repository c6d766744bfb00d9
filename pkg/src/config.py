"""
Settings - конфигурация из переменных окружения (.env через python-dotenv).
CLI-флаги имеют приоритет и превращают Settings в RunConfig.
"""

import os
from dataclasses import dataclass
from typing import Optional

from .errors import UsageError


def _int_env(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got '{raw}'")


@dataclass(frozen=True)
class Settings:
    """Значения по умолчанию для запуска"""
    catalog_dir: Optional[str] = None
    truncation: Optional[int] = None
    stability_rounds: int = 2
    output_format: str = "json"
    max_workers: int = 4
    logs_dir: str = "logs"
    debug: bool = False


def get_settings() -> Settings:
    """Читает CFKLAB_* переменные окружения"""
    return Settings(
        catalog_dir=os.getenv("CFKLAB_CATALOG_DIR") or None,
        truncation=_int_env("CFKLAB_TRUNCATION", None),
        stability_rounds=_int_env("CFKLAB_STABILITY_ROUNDS", 2),
        output_format=os.getenv("CFKLAB_FORMAT", "json").strip().lower() or "json",
        max_workers=max(1, _int_env("CFKLAB_MAX_WORKERS", 4)),
        logs_dir=os.getenv("CFKLAB_LOGS_DIR", "logs"),
        debug=os.getenv("CFKLAB_DEBUG", "0").strip().lower() in ("1", "true", "yes"),
    )
