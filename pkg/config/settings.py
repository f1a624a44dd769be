"""Configuration helpers for environment-driven settings."""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

if os.getenv("PYTEST_CURRENT_TEST") is None:
    load_dotenv()


OUTPUT_FORMATS = ("text", "json", "dot")

_TRUE_VALUES = {"1", "true", "yes", "on"}
_FALSE_VALUES = {"0", "false", "no", "off", ""}


def _parse_bool(name: str, value: str) -> bool:
    lowered = value.strip().casefold()
    if lowered in _TRUE_VALUES:
        return True
    if lowered in _FALSE_VALUES:
        return False
    raise ValueError(f"{name} must be a boolean (true/false)")


def _positive_int(name: str, default: str) -> int:
    try:
        value = int(os.getenv(name, default))
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer") from exc
    if value <= 0:
        raise ValueError(f"{name} must be positive")
    return value


@dataclass(slots=True)
class Settings:
    """Runtime engine settings sourced from environment variables."""

    MAX_ADDENDS: int = field(init=False)
    MAX_ATOMS_ENUM: int = field(init=False)
    ALLOW_SHARED_LABELS: bool = field(init=False)
    OUTPUT_FORMAT: str = field(init=False)
    LOG_DIR: Path = field(init=False)
    LOG_LEVEL: str = field(init=False)

    def __post_init__(self) -> None:
        self.reload()

    def reload(self) -> None:
        self.MAX_ADDENDS = _positive_int("ECJ_MAX_ADDENDS", "20000")
        self.MAX_ATOMS_ENUM = _positive_int("ECJ_MAX_ATOMS_ENUM", "16")
        self.ALLOW_SHARED_LABELS = _parse_bool(
            "ECJ_ALLOW_SHARED_LABELS", os.getenv("ECJ_ALLOW_SHARED_LABELS", "false")
        )

        output_format = os.getenv("ECJ_OUTPUT_FORMAT", "text").strip().casefold()
        if output_format not in OUTPUT_FORMATS:
            raise ValueError("ECJ_OUTPUT_FORMAT must be one of: text, json, dot")
        self.OUTPUT_FORMAT = output_format

        log_dir = Path(os.getenv("LOG_DIR", "logs").strip() or "logs")
        if not log_dir.is_absolute():
            log_dir = Path.cwd() / log_dir
        self.LOG_DIR = log_dir

        level = os.getenv("LOG_LEVEL", "WARNING").strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError("LOG_LEVEL must name a logging level")
        self.LOG_LEVEL = level

    def override(self, **values: Any) -> None:
        """Apply explicit values (CLI flags) on top of the environment."""
        for name, value in values.items():
            if value is None:
                continue
            attribute = name.upper()
            if not hasattr(self, attribute):
                raise ValueError(f"Unknown setting: {name}")
            setattr(self, attribute, value)
        self.validate()

    def validate(self) -> None:
        if self.MAX_ADDENDS <= 0:
            raise ValueError("MAX_ADDENDS must be positive")
        if self.MAX_ATOMS_ENUM <= 0:
            raise ValueError("MAX_ATOMS_ENUM must be positive")
        if self.OUTPUT_FORMAT not in OUTPUT_FORMATS:
            raise ValueError("OUTPUT_FORMAT must be one of: text, json, dot")


settings = Settings()
