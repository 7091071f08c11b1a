import random

import pytest

from wittkit.config import ENV_PREFIX, Settings, reset_settings


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Every test starts from default settings, whatever the shell exports."""
    for name in Settings.model_fields:
        monkeypatch.delenv(ENV_PREFIX + name.upper(), raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng():
    return random.Random(7)
