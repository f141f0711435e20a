"""Shared pytest fixtures."""

import pytest
from hypothesis import settings

from sumprod.app import App
from sumprod.config import Config
from sumprod.core.core import Core
from sumprod.core.modules.rational.models import Triple
from sumprod.logging import setup_logging

settings.register_profile("sumprod", deadline=None)
settings.load_profile("sumprod")

# keep stdout free of log lines
setup_logging(debug=False)


@pytest.fixture
def config(monkeypatch):
    """Config with defaults, ignoring the environment and .env files."""
    for name in ("SUMPROD_CAP", "SUMPROD_DEBUG", "SUMPROD_ORACLE_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    return Config(_env_file=None)


@pytest.fixture
def core(config):
    return Core(config)


@pytest.fixture
def stream_service(core):
    return core.services.stream


@pytest.fixture
def oracle_service(core):
    return core.services.oracle


@pytest.fixture
def app(config):
    return App(config)


@pytest.fixture
def triple_123():
    """The ZxZ3 example (1, 2, 3): s = 6, p = 6, curve v² = u³ − 9u + 9."""
    return Triple.of(1, 2, 3)
