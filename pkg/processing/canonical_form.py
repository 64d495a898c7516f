"""
Etiquetado canónico por refinamiento de colores y búsqueda por individualización.

Los vértices empiezan coloreados por grado; el refinamiento separa cada clase
de color según el multiconjunto de colores vecinos hasta que la partición es
equitativa. Si quedan celdas, cada vértice de la primera celda no trivial se
individualiza por turno y la búsqueda continúa. Cada hoja es una partición
discreta, es decir, un orden de los vértices; la forma canónica es la mayor
cadena de bits del triángulo superior entre todas las hojas. Los automorfismos
que aparecen cuando dos hojas dan la misma cadena podan los hermanos de la
misma órbita.
"""
import logging
from dataclasses import dataclass

from config import MAX_CANONICAL_ORDER
from data.graph import Graph, upper_triangle_pairs
from utils.exceptions import UnsupportedOrderError

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    order: int
    canonical_bits: str

    def to_graph(self):
        return Graph.from_upper_bits(self.order, self.canonical_bits)


def _refine(g, colors):
    """Refina por colores vecinos hasta una partición estable. Los colores son 0..k-1."""
    n = g.order
    neighbors = [g.neighbors(v) for v in range(n)]
    while True:
        signatures = [(colors[v], tuple(sorted(colors[u] for u in neighbors[v]))) for v in range(n)]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[s] for s in signatures]
        if len(ranking) == len(set(colors)):
            return refined
        colors = refined


def _individualize(colors, v):
    """v recibe un color propio, justo antes del resto de su celda."""
    shifted = [2 * c + 1 for c in colors]
    shifted[v] -= 1
    return shifted


def _target_cell(colors):
    counts = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    cell_colors = sorted(c for c, k in counts.items() if k > 1)
    if not cell_colors:
        return None
    first = cell_colors[0]
    return [v for v, c in enumerate(colors) if c == first]


def _leaf_bits(g, colors):
    """Bits de g reetiquetado de modo que el vértice v pase a la posición colors[v]."""
    inverse = [0] * g.order
    for v, c in enumerate(colors):
        inverse[c] = v
    return "".join("1" if g.has_edge(inverse[i], inverse[j]) else "0" for i, j in upper_triangle_pairs(g.order))


def _orbit_roots(n, automorphisms, fixed):
    """Órbitas (union-find) del grupo generado por los automorfismos que fijan cada vértice de ``fixed``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sigma in automorphisms:
        if any(sigma[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(sigma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return find


class _Search:
    def __init__(self, g):
        self.g = g
        self.best_bits = None
        self.best_colors = None
        self.first_leaf = {}
        self.automorphisms = []
        self.leaves = 0

    def run(self):
        start = _refine(self.g, [self.g.degree(v) for v in range(self.g.order)])
        self._visit(start, [])
        log.debug("canonical search: %d leaves, %d automorphisms", self.leaves, len(self.automorphisms))
        return self.best_bits, self.best_colors

    def _leaf(self, colors):
        self.leaves += 1
        bits = _leaf_bits(self.g, colors)
        seen = self.first_leaf.get(bits)
        if seen is None:
            self.first_leaf[bits] = colors
        else:
            # mismo grafo reetiquetado: seen^-1 . colors es un automorfismo
            position = {c: v for v, c in enumerate(seen)}
            self.automorphisms.append(tuple(position[colors[v]] for v in range(self.g.order)))
        if self.best_bits is None or bits > self.best_bits:
            self.best_bits, self.best_colors = bits, colors

    def _visit(self, colors, path):
        cell = _target_cell(colors)
        if cell is None:
            self._leaf(colors)
            return
        explored = []
        for v in cell:
            if explored:
                find = _orbit_roots(self.g.order, self.automorphisms, path)
                if any(find(v) == find(u) for u in explored):
                    continue
            self._visit(_refine(self.g, _individualize(colors, v)), path + [v])
            explored.append(v)


def canonical_labeling(g):
    """
    (CanonicalForm, perm) donde perm[v] es la posición canónica del vértice v;
    así g.relabel(perm) tiene como bits del triángulo superior los canónicos.
    """
    if g.order > MAX_CANONICAL_ORDER:
        raise UnsupportedOrderError(f"canonical form supports order <= {MAX_CANONICAL_ORDER}, got {g.order}")
    bits, colors = _Search(g).run()
    return CanonicalForm(g.order, bits), tuple(colors)


def canonical_form(g):
    return canonical_labeling(g)[0]


def canonical_graph(g):
    """Representante canónico de la clase de isomorfismo de g."""
    return canonical_form(g).to_graph()


def is_isomorphic(g, h):
    if g.order != h.order:
        return False
    if g.edge_count != h.edge_count or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)
