from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from transorient.graph import Graph, fixture_g10

settings.register_profile(
    "repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")

DATA = Path(__file__).parent / "data"


@pytest.fixture
def g10() -> Graph:
    return fixture_g10()


@pytest.fixture
def data_dir() -> Path:
    return DATA
