from fractions import Fraction

import pytest
from sympy import Matrix

from conftest import random_matrix
from processing.exact_matrix import (
    IntMatrix,
    RatMatrix,
    det,
    inverse_rational,
    level,
    level_scaled,
    permutation_matrix,
)
from utils.exceptions import DimensionError, SingularMatrixError


def laplace_det(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * a * laplace_det(minor)
    return total


def test_det_small_cases():
    assert det(IntMatrix.from_rows([[7]])) == 7
    assert det(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert det(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert det(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert det(IntMatrix.identity(6)) == 1


def test_det_needs_row_swap():
    m = IntMatrix.from_rows([[0, 0, 1], [0, 2, 0], [3, 0, 0]])
    assert det(m) == -6


def test_det_matches_laplace_and_sympy(rng):
    for _ in range(300):
        n = int(rng.integers(1, 6))
        m = random_matrix(rng, n)
        expected = laplace_det(m.to_rows())
        assert det(m) == expected
        assert det(m) == int(Matrix(m.to_rows()).det())


def test_det_large_entries_stay_exact():
    big = 10 ** 30
    m = IntMatrix.from_rows([[big, 1], [1, big]])
    assert det(m) == big * big - 1


def test_det_rejects_non_square():
    with pytest.raises(DimensionError):
        det(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_inverse_rational(rng):
    for _ in range(100):
        n = int(rng.integers(1, 6))
        m = random_matrix(rng, n)
        if det(m) == 0:
            continue
        inv = inverse_rational(m)
        assert m @ inv == RatMatrix.identity(n)
        assert inv @ m == RatMatrix.identity(n)


def random_unimodular(rng, n, steps=20):
    rows = IntMatrix.identity(n).to_rows()
    for _ in range(steps):
        i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
        c = int(rng.integers(-3, 4))
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    return IntMatrix.from_rows(rows)


def test_inverse_of_unimodular_is_integral(rng):
    for _ in range(50):
        m = random_unimodular(rng, 5)
        assert abs(det(m)) == 1
        inv = inverse_rational(m)
        assert inv.is_integral
        assert level(inv) == 1
        assert m @ inv == RatMatrix.identity(5)


def test_inverse_of_diagonal_has_lcm_level():
    inv = inverse_rational(IntMatrix.diag([2, 4]))
    assert inv == RatMatrix.from_rows([[Fraction(1, 2), 0], [0, Fraction(1, 4)]])
    assert level(inv) == 4


def test_inverse_of_singular_matrix_raises():
    with pytest.raises(SingularMatrixError):
        inverse_rational(IntMatrix.from_rows([[1, 2], [2, 4]]))


def test_level_and_scaled():
    q = RatMatrix.from_rows([[Fraction(1, 3), Fraction(2, 3)], [Fraction(1, 2), Fraction(1, 6)]])
    assert level(q) == 6
    assert level_scaled(q) == IntMatrix.from_rows([[2, 4], [3, 1]])
    assert level(IntMatrix.identity(3)) == 1


def test_permutation_matrix_convention():
    p = permutation_matrix((2, 0, 1))
    assert p == IntMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    with pytest.raises(ValueError):
        permutation_matrix((0, 0, 1))


def test_mixed_product_is_rational():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = RatMatrix.from_rows([[Fraction(1, 2), 0], [0, Fraction(1, 2)]])
    product = a @ b
    assert isinstance(product, RatMatrix)
    assert product == RatMatrix.from_rows([[Fraction(1, 2), 1], [Fraction(3, 2), 2]])


def test_shape_checks():
    with pytest.raises(DimensionError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(DimensionError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionError):
        IntMatrix.identity(2) @ IntMatrix.identity(3)
