import pytest
from sympy import Matrix, Poly, symbols

from conftest import random_graph, random_matrix
from data.graph import adjacency_matrix, complete_graph, path_graph
from processing.char_poly import char_poly
from processing.exact_matrix import IntMatrix, det
from processing.graph_enumerator import enumerate_graphs


def test_triangle_and_path():
    assert char_poly(adjacency_matrix(complete_graph(3))) == [1, 0, -3, -2]
    assert char_poly(adjacency_matrix(path_graph(3))) == [1, 0, -2, 0]


def test_one_by_one():
    assert char_poly(IntMatrix.from_rows([[5]])) == [1, -5]


def test_matches_sympy(rng):
    x = symbols("x")
    for _ in range(60):
        n = int(rng.integers(1, 7))
        m = random_matrix(rng, n, -4, 4)
        expected = Poly(Matrix(m.to_rows()).charpoly(x).as_expr(), x).all_coeffs()
        assert char_poly(m) == [int(c) for c in expected]


def test_constant_term_is_signed_determinant(rng):
    for _ in range(30):
        g = random_graph(rng, 7)
        a = adjacency_matrix(g)
        poly = char_poly(a)
        assert poly[-1] == (-1) ** g.order * det(a)
        # traza de A^2 = 2|E|
        assert poly[2] == -g.edge_count


def horner(poly, x):
    value = 0
    for c in poly:
        value = value * x + c
    return value


def shifted(a, x):
    """x I - A as an IntMatrix."""
    n = a.rows
    return IntMatrix(n, n, tuple(x * (i == j) - a[i, j] for i in range(n) for j in range(n)))


def check_small_order(n):
    for g in enumerate_graphs(n):
        a = adjacency_matrix(g)
        poly = char_poly(a)
        for x in range(-2, 3):
            assert horner(poly, x) == det(shifted(a, x))


def test_agrees_with_determinant_on_small_graphs():
    for n in range(1, 6):
        check_small_order(n)


@pytest.mark.slow
def test_agrees_with_determinant_on_order_six():
    check_small_order(6)
