"""
Property suite for the Smith form, ranks mod p and determinants on random
non-singular integer matrices.
"""
from itertools import combinations
from math import gcd, prod

import pytest

from conftest import random_matrix
from processing.exact_matrix import IntMatrix, det
from processing.modular_rank import rank_mod_p
from processing.smith_form import last_invariant_factor, smith_normal_form
from utils.exceptions import DimensionError, SingularMatrixError

PRIMES = (3, 5, 7, 11, 13)


def nonsingular_matrices(rng, count):
    found = []
    while len(found) < count:
        n = int(rng.integers(1, 7))
        m = random_matrix(rng, n)
        if det(m) != 0:
            found.append(m)
    return found


def determinantal_divisors(m):
    """gcd of all k x k minors, k = 1..n."""
    n = m.rows
    rows = m.to_rows()
    out = []
    for k in range(1, n + 1):
        g = 0
        for rs in combinations(range(n), k):
            for cs in combinations(range(n), k):
                g = gcd(g, det(IntMatrix.from_rows([[rows[i][j] for j in cs] for i in rs])))
        out.append(g)
    return out


def test_known_smith_form():
    m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert smith_normal_form(m).invariants == (2, 6, 12)


def test_diagonal_matrix_is_sorted_by_divisibility():
    m = IntMatrix.diag([6, 4, 1])
    assert smith_normal_form(m).invariants == (1, 2, 12)


def test_smith_properties_on_random_matrices(rng):
    for m in nonsingular_matrices(rng, 1000):
        snf = smith_normal_form(m)
        d = snf.invariants
        assert all(x > 0 for x in d)
        assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
        assert prod(d) == abs(det(m))
        assert snf.reconstruct() == m
        assert abs(det(snf.left_transform)) == 1
        assert abs(det(snf.right_transform)) == 1
        for p in PRIMES:
            assert rank_mod_p(m, p) == m.rows - snf.count_divisible_by(p)


def test_invariants_match_determinantal_divisors(rng):
    checked = 0
    for m in nonsingular_matrices(rng, 300):
        if m.rows > 4:
            continue
        divisors = determinantal_divisors(m)
        expected = [divisors[0]] + [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]
        assert list(smith_normal_form(m).invariants) == expected
        checked += 1
    assert checked > 100


def test_last_invariant_factor():
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert last_invariant_factor(m) == 6


def test_singular_and_non_square_rejected():
    with pytest.raises(SingularMatrixError):
        smith_normal_form(IntMatrix.from_rows([[1, 2], [2, 4]]))
    with pytest.raises(DimensionError):
        smith_normal_form(IntMatrix.from_rows([[1, 2, 3]]))
