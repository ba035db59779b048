import pytest

from config.settings import LOG_LEVEL_ENV, MAX_G_ENV


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Every test starts from the default settings"""
    monkeypatch.delenv(MAX_G_ENV, raising=False)
    monkeypatch.delenv(LOG_LEVEL_ENV, raising=False)
