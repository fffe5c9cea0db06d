"""Shared fixtures: small drawings and a clean settings object per test."""

import pytest

from src.config import Settings, set_settings
from src.drawing.rotation import Edge
from src.generators.points import gen_convex, gen_random
from src.structure.plane import PlaneSubgraph


@pytest.fixture(autouse=True)
def default_settings():
    set_settings(Settings())
    yield
    set_settings(None)


@pytest.fixture
def convex6():
    return gen_convex(6)


@pytest.fixture
def convex5():
    return gen_convex(5)


@pytest.fixture
def random9():
    return gen_random(9, seed=7)


@pytest.fixture
def hull6(convex6):
    """The hull cycle 1-2-3-4-5-6 of the convex drawing."""
    return PlaneSubgraph(convex6, [Edge(i, i % 6 + 1) for i in range(1, 7)])
