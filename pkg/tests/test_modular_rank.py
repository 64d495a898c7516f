import pytest

from processing.exact_matrix import IntMatrix
from processing.modular_rank import rank_mod_p, rank_mod_p_vectors


def test_rank_mod_small_primes():
    m = IntMatrix.from_rows([[1, 2], [3, 6]])
    assert rank_mod_p(m, 5) == 1
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    # det = -2
    assert rank_mod_p(m, 2) == 1
    assert rank_mod_p(m, 3) == 2


def test_negative_and_large_entries_are_reduced():
    m = IntMatrix.from_rows([[-7, 10 ** 40], [14, -2 * 10 ** 40]])
    assert rank_mod_p(m, 3) == 1
    assert rank_mod_p(m, 7) == 1


def test_large_prime_uses_exact_path():
    p = 2 ** 61 - 1
    m = IntMatrix.from_rows([[p + 1, 2], [3, p + 6]])
    # mod p this is [[1, 2], [3, 6]]
    assert rank_mod_p(m, p) == 1


def test_rectangular_and_zero():
    assert rank_mod_p(IntMatrix.from_rows([[3, 6, 9]]), 3) == 0
    assert rank_mod_p(IntMatrix.from_rows([[1, 0, 0], [0, 1, 0]]), 7) == 2


def test_rank_of_vectors():
    assert rank_mod_p_vectors([(1, 2, 2), (2, 4, 4)], 3) == 1
    assert rank_mod_p_vectors([(1, 0), (0, 1)], 3) == 2
    assert rank_mod_p_vectors([], 3) == 0


def test_composite_modulus_is_rejected():
    with pytest.raises(AssertionError):
        rank_mod_p(IntMatrix.identity(2), 9)
