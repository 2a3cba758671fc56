import numpy as np
import pytest

from flipgraph.families import signotope_graph
from shelling import from_shelling
from signotopes import Signotope


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    # settings must come from settings_example.json only
    monkeypatch.delenv("FLIPLAB_BUDGET", raising=False)
    monkeypatch.delenv("FLIPLAB_LOG_LEVEL", raising=False)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def signotope_graphs():
    """Signotope flip graphs for n = 3..5, built once per session."""
    return {n: signotope_graph(n) for n in (3, 4, 5)}


@pytest.fixture
def star5():
    """Five lines around a pentagonal cell, one triangle on each side."""
    return Signotope.from_signs(5, "+++-++--++")


@pytest.fixture
def shelled6():
    """Six lines that peel off as 1, 5, 2, 3, 4, 6."""
    return from_shelling(6, (1, 5, 2, 3, 4, 6), ("above", "below", "above", "below", "above", "above"))
