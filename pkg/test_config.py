"""
Test configuration loading and the override order
"""
import json

import pytest

from hankel_kernels.utils import env_settings
from hankel_kernels.utils.config import DEFAULTS, ConfigManager


def quiet(message, level='INFO'):
    pass


@pytest.fixture
def config_file(tmp_path):
    return tmp_path / "hankel_kernels_config.json"


def test_defaults_without_file(config_file, monkeypatch):
    for name in ("HANKEL_TOLERANCE", "HANKEL_SAMPLES", "HANKEL_SEED"):
        monkeypatch.delenv(name, raising=False)
    settings = ConfigManager(config_file, logger=quiet).settings()
    assert settings.tolerance == DEFAULTS["tolerance"]
    assert settings.samples == 64
    assert settings.section_depth == 6


def test_file_then_environment_then_flags(config_file, monkeypatch):
    config_file.write_text(json.dumps({"samples": 32, "seed": 4, "tolerance": 1e-6}), encoding="utf-8")
    monkeypatch.setenv("HANKEL_SEED", "9")
    monkeypatch.delenv("HANKEL_TOLERANCE", raising=False)
    monkeypatch.delenv("HANKEL_SAMPLES", raising=False)
    settings = ConfigManager(config_file, logger=quiet).settings(tolerance=1e-10, samples=None)
    assert settings.samples == 32
    assert settings.seed == 9
    assert settings.tolerance == 1e-10


def test_invalid_environment_value(config_file, monkeypatch):
    monkeypatch.setenv("HANKEL_SAMPLES", "many")
    with pytest.raises(ValueError):
        ConfigManager(config_file, logger=quiet).settings()


def test_get_setting_reads_optional_variables(monkeypatch):
    monkeypatch.delenv("HANKEL_REPORTS_DIR", raising=False)
    assert env_settings.get_setting("HANKEL_REPORTS_DIR") == ""
    monkeypatch.setenv("HANKEL_REPORTS_DIR", " out ")
    assert env_settings.get_setting("HANKEL_REPORTS_DIR") == "out"
    assert env_settings.overrides()["reports_dir"] == "out"


def test_unreadable_file_falls_back(config_file):
    config_file.write_text("{", encoding="utf-8")
    manager = ConfigManager(config_file, logger=quiet)
    assert manager.config == {}
    assert manager.get("fft_size") == 1024


def test_set_and_update_persist(config_file):
    manager = ConfigManager(config_file, logger=quiet)
    manager.set("samples", 16)
    manager.update({"seed": 3, "reports_dir": "out"})
    reloaded = ConfigManager(config_file, logger=quiet)
    assert reloaded.get("samples") == 16
    assert reloaded.settings().reports_dir == "out"


if __name__ == "__main__":
    print("=" * 70)
    print("CONFIGURATION TESTS")
    print("=" * 70)
    raise SystemExit(pytest.main([__file__, "-v"]))
