"""
Certificación de pares coespectrales generalizados.

Si G es controlable, la matriz racional ortogonal regular Q con
Q^T A(G) Q = A(H) es única e igual a W(G) W(H)^{-1}; se calcula, no se busca.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from data.graph import Graph, adjacency_matrix
from processing.exact_matrix import RatMatrix, as_rational, inverse_rational, level, level_scaled, mat_vec
from processing.modular_rank import rank_mod_p
from processing.walk_matrix import generalized_spectrum_key, walk_matrix
from utils.exceptions import NotCospectralError, SingularWalkMatrixError
from utils.math_utils import factorize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LevelConstraints:
    divides_last_invariant_gcd: bool
    level_odd: bool
    level_square_free: bool


@dataclass(frozen=True)
class GcmCertificate:
    graph_g: Graph
    graph_h: Graph
    q: RatMatrix
    level: int
    is_regular: bool
    is_orthogonal: bool
    conjugation_holds: bool
    is_permutation: bool
    is_primitive: bool
    per_prime_ranks: tuple
    level_constraints: LevelConstraints

    @property
    def is_valid(self):
        return self.is_regular and self.is_orthogonal and self.conjugation_holds

    @property
    def is_mate(self):
        """Válido y no es un reetiquetado: los dos grafos son mates coespectrales generalizados."""
        return self.is_valid and not self.is_permutation

    @property
    def scaled_q(self):
        return level_scaled(self.q)


def is_regular(q):
    """Qe = e."""
    return all(x == 1 for x in mat_vec(q, (1,) * q.cols))


def is_orthogonal(q):
    q = as_rational(q)
    return q.is_square and q.transpose() @ q == RatMatrix.identity(q.rows)


def is_permutation_matrix(q):
    if not q.is_square or any(x not in (0, 1) for x in q.entries):
        return False
    n = q.rows
    return all(sum(q.row(i)) == 1 for i in range(n)) and all(sum(q.col(j)) == 1 for j in range(n))


def scaled_ranks(q):
    """(p, rank_p(level(q) * q)) para cada primo p que divide al nivel."""
    q = as_rational(q)
    ell = level(q)
    scaled = level_scaled(q)
    return tuple((p, rank_mod_p(scaled, p)) for p, _ in factorize(ell))


def is_primitive(q):
    """Nivel impar y rank_p(level * q) = 1 para cada primo p | level."""
    ell = level(q)
    return ell % 2 == 1 and all(r == 1 for _, r in scaled_ranks(q))


def reconstruct_q(g, h):
    """Q = W(g) W(h)^{-1} para un par coespectral generalizado con W(g) no singular."""
    if g.order != h.order:
        raise NotCospectralError(f"orders differ: {g.order} vs {h.order}")
    if generalized_spectrum_key(g) != generalized_spectrum_key(h):
        raise NotCospectralError("generalized spectra differ")
    info_g = walk_matrix(g)
    if not info_g.controllable:
        raise SingularWalkMatrixError("W(G) is singular; Q is not determined")
    info_h = walk_matrix(h)
    if not info_h.controllable:
        raise SingularWalkMatrixError("W(H) is singular")
    return info_g.walk_matrix @ inverse_rational(info_h.walk_matrix)


def _level_constraints(g, h, ell):
    info_g, info_h = walk_matrix(g), walk_matrix(h)
    if not (info_g.controllable and info_h.controllable):
        raise SingularWalkMatrixError("a certificate needs non-singular W(G) and W(H)")
    d_g = info_g.snf.last_invariant
    d_h = info_h.snf.last_invariant
    return LevelConstraints(
        divides_last_invariant_gcd=gcd(d_g, d_h) % ell == 0,
        level_odd=ell % 2 == 1,
        level_square_free=all(e == 1 for _, e in factorize(ell)),
    )


def evaluate_certificate(g, h, q):
    """Evalúa todos los predicados del certificado para una Q dada."""
    ell = level(q)
    a_g = adjacency_matrix(g).to_rational()
    a_h = adjacency_matrix(h).to_rational()
    return GcmCertificate(
        graph_g=g,
        graph_h=h,
        q=q,
        level=ell,
        is_regular=is_regular(q),
        is_orthogonal=is_orthogonal(q),
        conjugation_holds=q.transpose() @ a_g @ q == a_h,
        is_permutation=is_permutation_matrix(q),
        is_primitive=is_primitive(q),
        per_prime_ranks=scaled_ranks(q),
        level_constraints=_level_constraints(g, h, ell),
    )


def verify_pair(g, h):
    certificate = evaluate_certificate(g, h, reconstruct_q(g, h))
    log.debug(
        "certificate order %d: level %d, valid %s, permutation %s",
        g.order, certificate.level, certificate.is_valid, certificate.is_permutation,
    )
    return certificate


def certificate_from_scaled(g, h, scaled, ell):
    """Reconstruye un certificado a partir de su forma guardada: la matriz entera level*Q y el nivel."""
    if ell < 1:
        raise ValueError(f"level must be positive, got {ell}")
    q = RatMatrix(scaled.rows, scaled.cols, tuple(Fraction(x, ell) for x in scaled.entries))
    return evaluate_certificate(g, h, q)
