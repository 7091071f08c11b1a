import pytest

from wittkit.config import get_settings, reset_settings
from wittkit.errors import ConfigurationError, NotPrimeError, WittKitError


def test_defaults():
    settings = get_settings()
    assert settings.seed == 7
    assert settings.resolvent_budget == 64
    assert settings.crosscheck_depth == 12
    assert settings.log_level == "WARNING"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("WITTKIT_SEED", "42")
    monkeypatch.setenv("WITTKIT_LOG_LEVEL", "debug")
    monkeypatch.setenv("WITTKIT_GHOST_CROSSCHECK", "false")
    reset_settings()
    settings = get_settings()
    assert settings.seed == 42
    assert settings.log_level == "DEBUG"
    assert settings.ghost_crosscheck is False


def test_settings_are_cached(monkeypatch):
    first = get_settings()
    monkeypatch.setenv("WITTKIT_SEED", "1")
    assert get_settings() is first


@pytest.mark.parametrize("name, value", [("WITTKIT_VERIFY_WORKERS", "0"), ("WITTKIT_SEED", "seven")])
def test_invalid_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    reset_settings()
    with pytest.raises(ConfigurationError):
        get_settings()


def test_error_payload():
    exc = NotPrimeError("4 is not prime", {"p": 4})
    assert isinstance(exc, ValueError) and isinstance(exc, WittKitError)
    assert exc.to_payload() == {"error": "not_prime", "message": "4 is not prime", "details": {"p": "4"}}
