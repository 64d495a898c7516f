import pytest

from utils.math_utils import (
    factorize,
    format_factorization,
    is_cube_free,
    is_odd_prime,
    is_square_free,
    odd_primes,
    two_adic_valuation,
)


def test_two_adic_valuation():
    assert two_adic_valuation(-1936) == 4
    assert two_adic_valuation(10224) == 4
    assert two_adic_valuation(7) == 0
    with pytest.raises(ValueError):
        two_adic_valuation(0)


def test_factorize():
    assert factorize(-1936) == [(2, 4), (11, 2)]
    assert factorize(10224) == [(2, 4), (3, 2), (71, 1)]
    assert factorize(1) == []
    assert odd_primes(10224) == [3, 71]


def test_free_predicates():
    assert is_square_free(71 * 3)
    assert not is_square_free(9)
    assert is_cube_free(9 * 71)
    assert not is_cube_free(27)
    assert is_odd_prime(11)
    assert not is_odd_prime(2)
    assert not is_odd_prime(9)


def test_format_factorization():
    assert format_factorization(10224) == "10224 = 2^4 × 3^2 × 71"
    assert format_factorization(-1936) == "-1936 = (-1) × 2^4 × 11^2"
    assert format_factorization(1) == "1"
