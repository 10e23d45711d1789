"""
Configuration settings for the multicompositions library and CLI
"""
import logging.config
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LOGGER_ROOT = "multicomp"


class Settings(BaseSettings):
    """Runtime settings, overridable through MULTICOMP_* environment variables or .env"""

    model_config = SettingsConfigDict(
        env_prefix="MULTICOMP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: str = "INFO"
    log_format: Literal["text", "json"] = "text"
    log_file: Optional[Path] = None

    # Cost guards
    enumeration_cap: int = Field(2_000_000, ge=1)  # largest (k+1)^(n-1) streamed by the CLI
    sequence_enumeration_cap: int = Field(12, ge=1)  # largest term index for --via enumeration

    # Verification
    verify_jobs: int = Field(1, ge=1)
    verify_max_n: int = Field(8, ge=1)
    verify_max_k: int = Field(3, ge=1)

    # Cluster
    cluster_extra_states: int = Field(2, ge=0)  # q defaults to g*n + this


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get the process-wide settings instance"""
    return Settings()


def build_logging_config(settings: Settings) -> Dict[str, Any]:
    """Build a dictConfig mapping; handlers write to stderr so stdout stays clean"""
    formatter = "json" if settings.log_format == "json" else "standard"
    handlers = ["console"]

    config: Dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
            },
            "json": {
                "()": "pythonjsonlogger.jsonlogger.JsonFormatter",
                "format": "%(asctime)s %(levelname)s %(name)s %(message)s",
            },
        },
        "handlers": {
            "console": {
                "level": settings.log_level,
                "class": "logging.StreamHandler",
                "stream": "ext://sys.stderr",
                "formatter": formatter,
            },
        },
        "loggers": {
            LOGGER_ROOT: {
                "handlers": handlers,
                "level": settings.log_level,
                "propagate": False,
            },
        },
    }

    if settings.log_file is not None:
        settings.log_file.parent.mkdir(parents=True, exist_ok=True)
        config["handlers"]["file"] = {
            "level": settings.log_level,
            "class": "logging.FileHandler",
            "filename": str(settings.log_file),
            "formatter": formatter,
        }
        handlers.append("file")

    return config


def configure_logging(settings: Optional[Settings] = None) -> None:
    """Apply the logging configuration"""
    logging.config.dictConfig(build_logging_config(settings or get_settings()))
