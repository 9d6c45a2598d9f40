"""Pytest configuration."""

from pathlib import Path

import pytest

from src.bbtree.services.generators import generate
from src.bbtree.services.graph import Graph, from_edges

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run exhaustive sweeps"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="exhaustive sweep; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def k3() -> Graph:
    """Triangle."""
    return from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3() -> Graph:
    """Path 0-1-2."""
    return from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def k4() -> Graph:
    return generate("complete", n=4)


@pytest.fixture
def c5() -> Graph:
    return generate("cycle", n=5)


@pytest.fixture
def petersen() -> Graph:
    return generate("petersen")


@pytest.fixture
def planar_fixture_paths() -> list[Path]:
    """Shipped stacked triangulations, sorted by name."""
    return sorted((FIXTURES_DIR / "planar").glob("*.col"))
