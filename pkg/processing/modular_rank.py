import numpy as np
from sympy import isprime

# Con p < 2^31 los productos de dos residuos caben en int64
_INT64_SAFE_PRIME = 2 ** 31


def _rank_mod_p_numpy(rows, p):
    a = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        nonzero = np.nonzero(a[rank:, col])[0]
        if nonzero.size == 0:
            continue
        pivot = rank + nonzero[0]
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        factors = a[rank + 1:, col].copy()
        a[rank + 1:] = (a[rank + 1:] - np.outer(factors, a[rank])) % p
        rank += 1
    return rank


def _rank_mod_p_python(rows, p):
    a = [[x % p for x in r] for r in rows]
    n_rows, n_cols = len(a), len(a[0])
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((i for i in range(rank, n_rows) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for i in range(rank + 1, n_rows):
            f = a[i][col]
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def rank_mod_p(m, p):
    """
    Rango de una IntMatrix reducida mod p, por eliminación gaussiana sobre F_p.
    p tiene que ser primo.
    """
    assert isprime(p), f"{p} is not prime"
    rows = m.to_rows()
    if p < _INT64_SAFE_PRIME:
        return _rank_mod_p_numpy(rows, p)
    return _rank_mod_p_python(rows, p)


def rank_mod_p_vectors(vectors, p):
    """Rango sobre F_p del espacio generado por vectores enteros (cada uno como secuencia)."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    if p < _INT64_SAFE_PRIME:
        return _rank_mod_p_numpy(vectors, p)
    return _rank_mod_p_python(vectors, p)
