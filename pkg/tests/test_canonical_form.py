from itertools import permutations

import networkx as nx
import pytest

from conftest import random_graph
from data.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from processing.canonical_form import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from processing.graph_enumerator import enumerate_graphs
from utils.exceptions import UnsupportedOrderError


def brute_force_isomorphic(g, h):
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    return any(g.relabel(p) == h for p in permutations(range(g.order)))


def to_networkx(g):
    x = nx.Graph()
    x.add_nodes_from(range(g.order))
    x.add_edges_from(g.edges())
    return x


def random_permutation(rng, n):
    return tuple(int(x) for x in rng.permutation(n))


def test_labeling_relabels_to_canonical_bits(rng):
    for _ in range(50):
        g = random_graph(rng, int(rng.integers(1, 9)))
        form, perm = canonical_labeling(g)
        assert g.relabel(perm).upper_triangle_bits() == form.canonical_bits
        assert form.to_graph() == canonical_graph(g)


def test_invariant_under_relabeling(rng):
    for _ in range(100):
        n = int(rng.integers(1, 10))
        g = random_graph(rng, n, float(rng.uniform(0.2, 0.8)))
        h = g.relabel(random_permutation(rng, n))
        assert canonical_form(g) == canonical_form(h)


def test_symmetric_graphs():
    for g in (empty_graph(7), complete_graph(7), cycle_graph(8), star_graph(6)):
        h = g.relabel(tuple(reversed(range(g.order))))
        assert canonical_form(g) == canonical_form(h)


def test_regular_non_isomorphic_pair():
    # C6 frente a dos triángulos: ambos 2-regulares
    c6 = cycle_graph(6)
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(c6, two_triangles)


def test_agrees_with_brute_force(rng):
    for _ in range(150):
        n = int(rng.integers(1, 7))
        g = random_graph(rng, n)
        h = random_graph(rng, n)
        assert is_isomorphic(g, h) == brute_force_isomorphic(g, h)


def test_every_order_four_pair_agrees_with_brute_force():
    graphs = list(enumerate_graphs(4))
    for g in graphs:
        for h in graphs:
            assert is_isomorphic(g, h) == brute_force_isomorphic(g, h)


def test_random_order_six_pairs_agree_with_brute_force(rng):
    for _ in range(500):
        g = random_graph(rng, 6)
        h = g.relabel(random_permutation(rng, 6)) if rng.random() < 0.3 else random_graph(rng, 6)
        assert is_isomorphic(g, h) == brute_force_isomorphic(g, h)


def test_agrees_with_networkx(rng):
    for _ in range(60):
        n = int(rng.integers(7, 11))
        g = random_graph(rng, n)
        h = g.relabel(random_permutation(rng, n)) if rng.random() < 0.5 else random_graph(rng, n)
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_networkx(g), to_networkx(h))


def test_different_orders_never_isomorphic():
    assert not is_isomorphic(path_graph(3), path_graph(4))


def test_order_guardrail():
    with pytest.raises(UnsupportedOrderError):
        canonical_form(empty_graph(13))
