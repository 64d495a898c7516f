"""
Forma normal de Smith de matrices enteras no singulares.

La reducción mantiene la identidad  M = left · D · right  tras cada operación
elemental: una operación de filas E sobre D se deshace en ``left``
(left ← left·E⁻¹, operación de columnas) y una operación de columnas F sobre D
se deshace en ``right`` (right ← F⁻¹·right, operación de filas).
"""
import logging
from dataclasses import dataclass

from processing.exact_matrix import IntMatrix, det
from utils.exceptions import DimensionError, SingularMatrixError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithForm:
    invariants: tuple
    left_transform: IntMatrix
    right_transform: IntMatrix

    @property
    def last_invariant(self):
        return self.invariants[-1]

    def diagonal(self):
        return IntMatrix.diag(list(self.invariants))

    def reconstruct(self):
        return self.left_transform @ self.diagonal() @ self.right_transform

    def count_divisible_by(self, p):
        return sum(1 for d in self.invariants if d % p == 0)


class _Reducer:
    def __init__(self, m):
        n = m.rows
        self.n = n
        self.d = m.to_rows()
        self.left = IntMatrix.identity(n).to_rows()
        self.right = IntMatrix.identity(n).to_rows()

    # operaciones de fila sobre D (columnas sobre left)
    def swap_rows(self, i, j):
        if i == j:
            return
        self.d[i], self.d[j] = self.d[j], self.d[i]
        for r in self.left:
            r[i], r[j] = r[j], r[i]

    def add_row(self, target, source, c):
        """row_target += c * row_source."""
        self.d[target] = [x + c * y for x, y in zip(self.d[target], self.d[source])]
        for r in self.left:
            r[source] -= c * r[target]

    def negate_row(self, i):
        self.d[i] = [-x for x in self.d[i]]
        for r in self.left:
            r[i] = -r[i]

    # operaciones de columna sobre D (filas sobre right)
    def swap_cols(self, i, j):
        if i == j:
            return
        for r in self.d:
            r[i], r[j] = r[j], r[i]
        self.right[i], self.right[j] = self.right[j], self.right[i]

    def add_col(self, target, source, c):
        """col_target += c * col_source."""
        for r in self.d:
            r[target] += c * r[source]
        self.right[source] = [x - c * y for x, y in zip(self.right[source], self.right[target])]

    def _min_pivot(self, t):
        best = None
        for i in range(t, self.n):
            for j in range(t, self.n):
                v = abs(self.d[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return best

    def reduce(self):
        n = self.n
        for t in range(n):
            while True:
                pivot = self._min_pivot(t)
                if pivot is None:
                    raise SingularMatrixError("matrix is singular")
                _, i, j = pivot
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                p = self.d[t][t]

                for i in range(t + 1, n):
                    q = self.d[i][t] // p
                    if q:
                        self.add_row(i, t, -q)
                for j in range(t + 1, n):
                    q = self.d[t][j] // p
                    if q:
                        self.add_col(j, t, -q)

                if any(self.d[i][t] for i in range(t + 1, n)) or any(self.d[t][j] for j in range(t + 1, n)):
                    continue

                # d_t debe dividir todo el bloque restante
                offender = next(
                    (i for i in range(t + 1, n) for j in range(t + 1, n) if self.d[i][j] % p),
                    None,
                )
                if offender is None:
                    break
                self.add_row(t, offender, 1)

            if self.d[t][t] < 0:
                self.negate_row(t)


def smith_normal_form(m):
    """
    SNF de una matriz entera cuadrada no singular por operaciones elementales,
    con pivote = menor |entrada| no nula. Los invariantes son no negativos; el
    signo del determinante no forma parte del resultado.
    """
    if not m.is_square:
        raise DimensionError(f"Smith form needs a square matrix, got {m.rows}x{m.cols}")
    if det(m) == 0:
        raise SingularMatrixError("Smith form of a singular matrix is not supported")

    reducer = _Reducer(m)
    reducer.reduce()
    invariants = tuple(reducer.d[t][t] for t in range(m.rows))
    log.debug("invariant factors %s", invariants)
    return SmithForm(
        invariants=invariants,
        left_transform=IntMatrix.from_rows(reducer.left),
        right_transform=IntMatrix.from_rows(reducer.right),
    )


def last_invariant_factor(m):
    """d_n(m), el mayor factor invariante."""
    return smith_normal_form(m).last_invariant
