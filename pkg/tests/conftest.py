import numpy as np
import pytest

from data.graph import Graph
from data.reference_graphs import REFERENCE_GRAPHS
from processing.exact_matrix import IntMatrix


def random_graph(rng, n, p=0.5):
    upper = rng.random((n, n)) < p
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if upper[i, j]])


def random_matrix(rng, n, low=-9, high=9):
    return IntMatrix(n, n, tuple(int(x) for x in rng.integers(low, high + 1, size=n * n)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240617)


@pytest.fixture
def graph_g():
    return REFERENCE_GRAPHS["G"]


@pytest.fixture
def graph_h():
    return REFERENCE_GRAPHS["H"]


@pytest.fixture
def graph_n():
    return REFERENCE_GRAPHS["N"]


@pytest.fixture
def graph_m():
    return REFERENCE_GRAPHS["M"]


@pytest.fixture
def single_worker(monkeypatch):
    monkeypatch.setenv("WALKSPEC_WORKERS", "1")
