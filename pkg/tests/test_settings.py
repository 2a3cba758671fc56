import pytest

from config.settings import DEFAULTS, load_settings


def test_defaults_are_loaded():
    settings = load_settings()
    for key in DEFAULTS:
        assert key in settings
    assert settings["budget"] == 200000
    assert settings["debug_invariants"] is False


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("FLIPLAB_BUDGET", "17")
    monkeypatch.setenv("FLIPLAB_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings["budget"] == 17
    assert settings["log_level"] == "DEBUG"


@pytest.mark.parametrize("value", ["0", "-5", "lots"])
def test_bad_budget_is_rejected(monkeypatch, value):
    monkeypatch.setenv("FLIPLAB_BUDGET", value)
    with pytest.raises(ValueError):
        load_settings()
