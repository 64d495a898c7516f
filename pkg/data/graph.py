"""
Grafos simples no dirigidos de orden 1..64.

La adyacencia va en bits: ``rows[v]`` es un int cuyo bit u vale 1 si y solo si
u~v. Los grafos son inmutables y hashables.
"""
from dataclasses import dataclass
from functools import cached_property

from config import MAX_GRAPH_ORDER
from processing.exact_matrix import IntMatrix
from utils.exceptions import DimensionError, UnsupportedOrderError


def pair_count(n):
    return n * (n - 1) // 2


def upper_triangle_pairs(n):
    """Pares (i, j), i < j, por columnas: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    order: int
    rows: tuple

    def __post_init__(self):
        n = self.order
        if not 1 <= n <= MAX_GRAPH_ORDER:
            raise UnsupportedOrderError(f"graph order must be in 1..{MAX_GRAPH_ORDER}, got {n}")
        if len(self.rows) != n:
            raise DimensionError(f"expected {n} adjacency rows, got {len(self.rows)}")
        full = (1 << n) - 1
        for v, mask in enumerate(self.rows):
            if mask & ~full:
                raise DimensionError(f"vertex {v} has neighbours outside 0..{n - 1}")
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in range(n):
                if (mask >> u & 1) != (self.rows[u] >> v & 1):
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")

    # --- constructores ---

    @classmethod
    def from_adjacency(cls, matrix_rows):
        """Construye el grafo a partir de una matriz 0/1 cuadrada dada como secuencias anidadas."""
        matrix_rows = [list(r) for r in matrix_rows]
        n = len(matrix_rows)
        if any(len(r) != n for r in matrix_rows):
            raise DimensionError("adjacency matrix must be square")
        masks = []
        for r in matrix_rows:
            if any(x not in (0, 1) for x in r):
                raise ValueError("adjacency entries must be 0 or 1")
            masks.append(sum(1 << u for u, x in enumerate(r) if x))
        return cls(n, tuple(masks))

    @classmethod
    def from_edges(cls, order, edges):
        masks = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(order, tuple(masks))

    @classmethod
    def from_upper_bits(cls, order, bits):
        """Inversa de upper_triangle_bits(): cadena de bits sobre los pares por columnas."""
        pairs = upper_triangle_pairs(order)
        if len(bits) != len(pairs):
            raise DimensionError(f"order {order} needs {len(pairs)} bits, got {len(bits)}")
        return cls.from_edges(order, [pr for pr, b in zip(pairs, bits) if b == "1"])

    @classmethod
    def from_code(cls, order, code):
        """Grafo cuya cadena del triángulo superior es ``code`` en binario (primer par = bit más alto)."""
        m = pair_count(order)
        return cls.from_upper_bits(order, format(code, f"0{m}b") if m else "")

    # --- consultas ---

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v):
        mask = self.rows[v]
        return [u for u in range(self.order) if mask >> u & 1]

    def degree(self, v):
        return self.rows[v].bit_count()

    @cached_property
    def edge_count(self):
        return sum(mask.bit_count() for mask in self.rows) // 2

    def degree_sequence(self):
        return sorted(self.degree(v) for v in range(self.order))

    def edges(self):
        return [(i, j) for i, j in upper_triangle_pairs(self.order) if self.has_edge(i, j)]

    def upper_triangle_bits(self):
        return "".join("1" if self.has_edge(i, j) else "0" for i, j in upper_triangle_pairs(self.order))

    def code(self):
        bits = self.upper_triangle_bits()
        return int(bits, 2) if bits else 0

    def relabel(self, perm):
        """pi(g): el vértice v de g pasa a ser perm[v]."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise ValueError(f"{perm!r} is not a permutation of 0..{n - 1}")
        return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"


def adjacency_matrix(g):
    n = g.order
    return IntMatrix(n, n, tuple(1 if g.rows[i] >> j & 1 else 0 for i in range(n) for j in range(n)))


def complement(g):
    """A(complement) = J - I - A(g)."""
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(g.rows)))


# --- familias con nombre ---

def empty_graph(n):
    return Graph(n, (0,) * n)


def complete_graph(n):
    return complement(empty_graph(n))


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
