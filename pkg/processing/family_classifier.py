"""
Pertenencia a las familias aritméticas H_n y F_n y la cota que resulta sobre
los mates coespectrales generalizados no isomorfos.

F_n: 2^{-floor(n/2)} det W es un entero impar libre de cubos y rank_p W = n-1
para cada primo impar p | det W. H_n: 2^{-floor(n/2)} det W = p^2 b con p primo
impar, b impar y libre de cuadrados, y rank_p W = n-1.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from config import MATE_BOUND_MAX_K
from processing.modular_rank import rank_mod_p
from utils.math_utils import is_cube_free, odd_primes

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeRank:
    prime: int
    rank: int
    satisfied: bool


@dataclass(frozen=True)
class FamilyClassification:
    in_hn: bool
    in_fn: bool
    k_odd_primes_squared: int
    k_from_last_invariant: int
    mate_bound: Optional[int]
    per_prime_ranks: tuple
    squared_primes: tuple

    @property
    def k_counts_differ(self):
        return self.k_odd_primes_squared != self.k_from_last_invariant


def mate_bound(k):
    """2^k - 1: el máximo de mates coespectrales generalizados no isomorfos de un grafo de F_n."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k > MATE_BOUND_MAX_K:
        raise OverflowError(f"k = {k} exceeds the supported maximum {MATE_BOUND_MAX_K}")
    return (1 << k) - 1


def _not_controllable():
    return FamilyClassification(False, False, 0, 0, None, (), ())


def classify_family(info):
    if not info.controllable:
        return _not_controllable()

    n = info.order
    det_factors = dict(info.det_factorization)
    odd = odd_primes(info.determinant)

    per_prime = []
    for p in odd:
        r = rank_mod_p(info.walk_matrix, p)
        per_prime.append(PrimeRank(p, r, r == n - 1))

    squared = tuple(p for p in odd if det_factors[p] >= 2)
    d_n = info.snf.last_invariant
    k_proof = sum(1 for p in odd if d_n % (p * p) == 0)

    # 2^floor(n/2) || det W: la valuación exacta es la condición operativa
    exact_two_power = info.two_adic_valuation == n // 2
    cube_free = is_cube_free(info.determinant // (1 << info.two_adic_valuation))
    ranks_ok = all(pr.satisfied for pr in per_prime)
    in_fn = exact_two_power and cube_free and ranks_ok

    in_hn = False
    if exact_two_power and len(squared) == 1:
        p = squared[0]
        b_square_free = all(det_factors[q] == 1 for q in odd if q != p)
        in_hn = det_factors[p] == 2 and b_square_free and rank_mod_p(info.walk_matrix, p) == n - 1

    k = len(squared)
    if k != k_proof:
        log.info("order %d: k from det W is %d but k from d_n(W) is %d", n, k, k_proof)

    return FamilyClassification(
        in_hn=in_hn,
        in_fn=in_fn,
        k_odd_primes_squared=k,
        k_from_last_invariant=k_proof,
        mate_bound=mate_bound(k) if in_fn else None,
        per_prime_ranks=tuple(per_prime),
        squared_primes=squared,
    )
