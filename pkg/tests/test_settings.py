"""
Settings and logging configuration
"""
import logging

import pytest
from pydantic import ValidationError

from multicomp.config.settings import Settings, build_logging_config, configure_logging, get_settings


def test_defaults():
    settings = Settings(_env_file=None)
    assert settings.log_format == "text"
    assert settings.enumeration_cap == 2_000_000
    assert settings.cluster_extra_states == 2


def test_environment_override(monkeypatch):
    monkeypatch.setenv("MULTICOMP_LOG_FORMAT", "json")
    monkeypatch.setenv("MULTICOMP_VERIFY_MAX_N", "5")
    settings = Settings(_env_file=None)
    assert settings.verify_max_n == 5
    config = build_logging_config(settings)
    assert config["handlers"]["console"]["formatter"] == "json"
    assert config["formatters"]["json"]["()"] == "pythonjsonlogger.jsonlogger.JsonFormatter"


def test_invalid_values_are_rejected():
    with pytest.raises(ValidationError):
        Settings(_env_file=None, log_format="xml")
    with pytest.raises(ValidationError):
        Settings(_env_file=None, enumeration_cap=0)


def test_log_file_handler(tmp_path):
    settings = Settings(_env_file=None, log_file=tmp_path / "logs" / "multicomp.log")
    config = build_logging_config(settings)
    assert config["loggers"]["multicomp"]["handlers"] == ["console", "file"]
    assert (tmp_path / "logs").is_dir()
    configure_logging(settings)
    logging.getLogger("multicomp.test").info("hello")
    for handler in logging.getLogger("multicomp").handlers:
        handler.flush()
    assert "hello" in (tmp_path / "logs" / "multicomp.log").read_text()
    configure_logging(Settings(_env_file=None))


def test_get_settings_is_cached():
    get_settings.cache_clear()
    assert get_settings() is get_settings()
    get_settings.cache_clear()


def test_cli_log_flags(run_cli):
    status, out = run_cli("--log-level", "debug", "--log-format", "json", "sequence", "--name", "total", "--k", "1", "--terms", "3")
    assert status == 0
    assert out == "1 2 4\n"
    configure_logging(Settings(_env_file=None))


def test_runtime_settings_hold_no_test_paths():
    import multicomp.config.settings as settings_module

    assert not hasattr(settings_module, "FIXTURES_DIR")
    assert set(Settings.model_fields) >= {"log_level", "enumeration_cap", "cluster_extra_states"}
