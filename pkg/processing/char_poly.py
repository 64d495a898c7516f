"""Polinomio característico sin divisiones (Berkowitz)."""
from utils.exceptions import DimensionError


def char_poly(m):
    """
    Polinomio característico mónico det(xI - m), con los coeficientes desde el
    término principal: [1, c_1, ..., c_n]. Solo usa operaciones de anillo, así
    que una entrada entera da coeficientes enteros exactos.
    """
    if not m.is_square:
        raise DimensionError(f"characteristic polynomial needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a = m.to_rows()
    poly = [1, -a[0][0]]
    for r in range(1, n):
        # borde de la submatriz principal r x r
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        toeplitz = [1, -a[r][r]]
        vec = col
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(a[i][k] * vec[k] for k in range(r)) for i in range(r)]
        # producto por la matriz de Toeplitz triangular inferior (r+2) x (r+1)
        poly = [sum(toeplitz[i - j] * poly[j] for j in range(min(i, r) + 1)) for i in range(r + 2)]
    return poly

