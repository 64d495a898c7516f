"""
Predicados sobre matrices primitivas.

Cada comprobación mira primero las hipótesis de la propiedad. Si no se cumplen
el resultado es NOT_APPLICABLE; si se cumplen, VERIFIED o VIOLATED según la
conclusión. Un VIOLATED con las hipótesis cumplidas indica un error en los
cálculos previos.
"""
import logging
from enum import Enum

from processing.cospectral_certifier import is_orthogonal, is_permutation_matrix, is_primitive, is_regular
from processing.exact_matrix import as_rational, level, level_scaled
from processing.modular_rank import rank_mod_p_vectors
from utils.math_utils import factorize, is_odd_prime, is_square_free

log = logging.getLogger(__name__)


class LemmaOutcome(Enum):
    VERIFIED = "verified"
    VIOLATED = "violated"
    NOT_APPLICABLE = "not-applicable"

    @classmethod
    def of(cls, conclusion):
        return cls.VERIFIED if conclusion else cls.VIOLATED


def is_primitive_matrix(q):
    """Racional ortogonal regular con nivel impar y rank_p(level * q) = 1 para cada p | level."""
    q = as_rational(q)
    return q.is_square and is_regular(q) and is_orthogonal(q) and is_primitive(q)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _columns(m):
    return [m.col(j) for j in range(m.cols)]


def column_spaces_coincide(m1, m2, p):
    """Los espacios columna de dos matrices enteras coinciden sobre F_p."""
    c1, c2 = _columns(m1), _columns(m2)
    r1 = rank_mod_p_vectors(c1, p)
    return r1 == rank_mod_p_vectors(c2, p) == rank_mod_p_vectors(c1 + c2, p)


def check_lemma_level_mod(q, x, k):
    """
    Si x*q es entera y x*q = 0 (mod k), entonces level(q) divide a x/k.

    x/k tiene que ser entero para que la conclusión tenga sentido; con q
    regular lo es siempre.
    """
    if x < 1 or k < 1:
        raise ValueError(f"x and k must be positive, got x={x}, k={k}")
    scaled = as_rational(q).scale(x)
    if not scaled.is_integral or not scaled.to_integer().is_zero_mod(k) or x % k:
        return LemmaOutcome.NOT_APPLICABLE
    return LemmaOutcome.of((x // k) % level(q) == 0)


def check_lemma_uv(u, v, p):
    """
    Para vectores enteros u, v y un primo impar p con u, v != 0 (mod p),
    u y v dependientes sobre F_p y u.u = v.v = 0 (mod p^2): u.v = 0 (mod p^2).
    """
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise ValueError(f"vectors have different lengths: {len(u)} vs {len(v)}")
    p2 = p * p
    if all(a % p == 0 for a in u) or all(b % p == 0 for b in v):
        return LemmaOutcome.NOT_APPLICABLE
    if rank_mod_p_vectors([u, v], p) != 1:
        return LemmaOutcome.NOT_APPLICABLE
    if _dot(u, u) % p2 or _dot(v, v) % p2:
        return LemmaOutcome.NOT_APPLICABLE
    return LemmaOutcome.of(_dot(u, v) % p2 == 0)


def _shared_hypotheses(q1, q2):
    q1, q2 = as_rational(q1), as_rational(q2)
    return (
        is_primitive_matrix(q1)
        and is_primitive_matrix(q2)
        and q1.rows == q2.rows
        and is_square_free(level(q1))
        and is_square_free(level(q2))
    )


def check_lemma_prime_out(q1, q2, p):
    """
    Para q1, q2 primitivas con niveles libres de cuadrados divisibles por el
    primo impar p, y cuyos espacios columna escalados coinciden sobre F_p:
    p no divide a level(q1^T q2).
    """
    q1, q2 = as_rational(q1), as_rational(q2)
    if not is_odd_prime(p) or not _shared_hypotheses(q1, q2):
        return LemmaOutcome.NOT_APPLICABLE
    l1, l2 = level(q1), level(q2)
    if l1 % p or l2 % p:
        return LemmaOutcome.NOT_APPLICABLE
    if not column_spaces_coincide(level_scaled(q1), level_scaled(q2), p):
        return LemmaOutcome.NOT_APPLICABLE
    return LemmaOutcome.of(level(q1.transpose() @ q2) % p != 0)


def check_same_level_permutation(q1, q2):
    """
    Para q1, q2 primitivas con el mismo nivel l libre de cuadrados, cuyos
    espacios columna escalados por l coinciden sobre F_p para cada primo
    p | l: q1^T q2 es una matriz de permutación.
    """
    q1, q2 = as_rational(q1), as_rational(q2)
    if not _shared_hypotheses(q1, q2):
        return LemmaOutcome.NOT_APPLICABLE
    ell = level(q1)
    if level(q2) != ell:
        return LemmaOutcome.NOT_APPLICABLE
    s1, s2 = level_scaled(q1), level_scaled(q2)
    for p, _ in factorize(ell):
        if not column_spaces_coincide(s1, s2, p):
            return LemmaOutcome.NOT_APPLICABLE
    product = q1.transpose() @ q2
    outcome = LemmaOutcome.of(is_permutation_matrix(product))
    if outcome is LemmaOutcome.VIOLATED:
        log.warning("same-level primitive matrices with level %d whose product is not a permutation", ell)
    return outcome
