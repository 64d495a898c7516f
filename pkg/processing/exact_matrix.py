"""
Matrices densas exactas sobre los enteros y los racionales.

IntMatrix guarda las matrices de adyacencia, de caminos y escaladas por el
nivel; RatMatrix guarda las matrices racionales ortogonales Q. Las dos son
inmutables y nunca redondean.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from utils.exceptions import DimensionError, SingularMatrixError


def _check_shape(rows, cols, entries):
    if rows < 1 or cols < 1:
        raise DimensionError(f"matrix must be at least 1x1, got {rows}x{cols}")
    if len(entries) != rows * cols:
        raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")


class _DenseMatrix:
    """Accesos por filas comunes a IntMatrix y RatMatrix."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("rows have different lengths")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diag(cls, values):
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return self.entries[j::self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return transpose(self)

    def __matmul__(self, other):
        return multiply(self, other)


@dataclass(frozen=True)
class IntMatrix(_DenseMatrix):
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        _check_shape(self.rows, self.cols, self.entries)
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    def scale(self, factor):
        return IntMatrix(self.rows, self.cols, tuple(factor * x for x in self.entries))

    def is_zero_mod(self, k):
        return all(x % k == 0 for x in self.entries)

    def to_rational(self):
        return RatMatrix(self.rows, self.cols, self.entries)


@dataclass(frozen=True)
class RatMatrix(_DenseMatrix):
    """Las entradas son Fraction: siempre irreducibles y con denominador positivo."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        _check_shape(self.rows, self.cols, self.entries)
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))

    def scale(self, factor):
        return RatMatrix(self.rows, self.cols, tuple(Fraction(factor) * x for x in self.entries))

    @property
    def is_integral(self):
        return all(x.denominator == 1 for x in self.entries)

    def to_integer(self):
        if not self.is_integral:
            raise ValueError("matrix has non-integral entries")
        return IntMatrix(self.rows, self.cols, tuple(x.numerator for x in self.entries))


def _result_type(a, b):
    return RatMatrix if isinstance(a, RatMatrix) or isinstance(b, RatMatrix) else IntMatrix


def multiply(a, b):
    """Producto exacto; IntMatrix por RatMatrix da una RatMatrix."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    b_cols = [b.col(j) for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        r = a.row(i)
        for c in b_cols:
            entries.append(sum(x * y for x, y in zip(r, c)))
    return _result_type(a, b)(a.rows, b.cols, tuple(entries))


def transpose(m):
    return type(m)(m.cols, m.rows, tuple(x for j in range(m.cols) for x in m.col(j)))


def mat_vec(m, v):
    v = tuple(v)
    if m.cols != len(v):
        raise DimensionError(f"cannot apply {m.rows}x{m.cols} matrix to vector of length {len(v)}")
    return tuple(sum(x * y for x, y in zip(m.row(i), v)) for i in range(m.rows))


def permutation_matrix(perm):
    """P con P[u][perm[u]] = 1, de modo que P^T A(G) P es la adyacencia del grafo reetiquetado."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{n - 1}")
    entries = [0] * (n * n)
    for u, image in enumerate(perm):
        entries[u * n + image] = 1
    return IntMatrix(n, n, tuple(entries))


def det(m):
    """
    Determinante por eliminación de Bareiss de un paso. Todas las divisiones son
    exactas: los valores intermedios siguen siendo enteros y nunca aparece un
    float ni una fracción.
    """
    if not m.is_square:
        raise DimensionError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def inverse_rational(m):
    """Inversa exacta por Gauss-Jordan sobre los racionales."""
    if not m.is_square:
        raise DimensionError(f"inverse needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    aug = [[Fraction(x) for x in m.row(i)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        inv_pivot = 1 / aug[k][k]
        aug[k] = [x * inv_pivot for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                factor = aug[i][k]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[k])]
    return RatMatrix(n, n, tuple(x for r in aug for x in r[n:]))


def level(q):
    """Menor entero positivo x tal que x*q es entera: el mcm de los denominadores."""
    entries = q.entries if isinstance(q, RatMatrix) else (Fraction(x) for x in q.entries)
    return lcm(*(x.denominator for x in entries))


def level_scaled(q):
    """La matriz entera level(q) * q."""
    return q.scale(level(q)).to_integer()


def as_rational(m):
    return m if isinstance(m, RatMatrix) else m.to_rational()
