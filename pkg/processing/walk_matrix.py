import logging
from dataclasses import dataclass
from typing import Optional

from data.graph import adjacency_matrix, complement
from processing.char_poly import char_poly
from processing.exact_matrix import IntMatrix, det, mat_vec
from processing.smith_form import SmithForm, smith_normal_form
from utils.math_utils import factorize, two_adic_valuation

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WalkMatrixInfo:
    """
    W(G) junto con sus datos aritméticos.

    normalized_det es det / 2^floor(n/2) cuando la división es exacta (no existe
    si W es singular); odd_part es la factorización de |normalized_det|.
    """

    order: int
    walk_matrix: IntMatrix
    determinant: int
    two_adic_valuation: Optional[int]
    normalized_det: Optional[int]
    odd_part: tuple
    snf: Optional[SmithForm]

    @property
    def controllable(self):
        return self.determinant != 0

    @property
    def det_factorization(self):
        return tuple(factorize(self.determinant))


@dataclass(frozen=True)
class GeneralizedSpectrumKey:
    char_poly_g: tuple
    char_poly_complement: tuple

    @property
    def order(self):
        return len(self.char_poly_g) - 1


def walk_columns(g):
    """Columnas e, Ae, ..., A^{n-1} e; la columna j cuenta los caminos de longitud j desde cada vértice."""
    a = adjacency_matrix(g)
    col = (1,) * g.order
    columns = []
    for _ in range(g.order):
        columns.append(col)
        col = mat_vec(a, col)
    return columns


def build_walk_matrix(g):
    columns = walk_columns(g)
    n = g.order
    return IntMatrix(n, n, tuple(columns[j][i] for i in range(n) for j in range(n)))


def walk_matrix(g):
    w = build_walk_matrix(g)
    n = g.order
    d = det(w)
    if d == 0:
        return WalkMatrixInfo(n, w, 0, None, None, (), None)

    v2 = two_adic_valuation(d)
    half = n // 2
    normalized = d // (1 << half) if v2 >= half else None
    if v2 > half:
        log.debug("order %d: 2-adic valuation %d of det W exceeds floor(n/2) = %d", n, v2, half)
    odd_part = tuple(factorize(normalized)) if normalized is not None else ()
    return WalkMatrixInfo(n, w, d, v2, normalized, odd_part, smith_normal_form(w))


def generalized_spectrum_key(g):
    """Polinomios característicos de A(G) y de A(complemento de G) = J - I - A(G)."""
    return GeneralizedSpectrumKey(
        tuple(char_poly(adjacency_matrix(g))),
        tuple(char_poly(adjacency_matrix(complement(g)))),
    )
