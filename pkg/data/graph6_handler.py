"""
Lectura y escritura de graph6.

Formato: N(n) seguido del triángulo superior x(0,1) x(0,2) x(1,2) x(0,3) ...
empaquetado en grupos de 6 bits big-endian, cada grupo escrito como chr(63 + valor).
"""
import logging
from pathlib import Path

from config import MAX_GRAPH_ORDER
from data.graph import Graph, pair_count, upper_triangle_pairs
from utils.constants import GRAPH6_HEADER
from utils.exceptions import Graph6ParseError

log = logging.getLogger(__name__)

_MIN_CHAR = 63
_MAX_CHAR = 126
_BLANK = " \t\r\n"


def _encode_order(n):
    if n <= 62:
        return chr(_MIN_CHAR + n)
    if n <= 258047:
        return "~" + "".join(chr(_MIN_CHAR + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(_MIN_CHAR + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g):
    """Texto graph6 de g, sin cabecera y sin salto de línea."""
    bits = g.upper_triangle_bits()
    bits += "0" * (-len(bits) % 6)
    body = "".join(chr(_MIN_CHAR + int(bits[i:i + 6], 2)) for i in range(0, len(bits), 6))
    return _encode_order(g.order) + body


def _values(text, start, count):
    out = []
    for offset in range(start, start + count):
        if offset >= len(text):
            raise Graph6ParseError("truncated length field", offset)
        c = ord(text[offset])
        if not _MIN_CHAR <= c <= _MAX_CHAR:
            raise Graph6ParseError(f"character {text[offset]!r} out of range", offset)
        out.append(c - _MIN_CHAR)
    return out


def _decode_order(text):
    """Devuelve (n, offset del primer byte de datos)."""
    if not text:
        raise Graph6ParseError("empty graph6 string", 0)
    if text[0] != "~":
        return _values(text, 0, 1)[0], 1
    if len(text) > 1 and text[1] == "~":
        vals = _values(text, 2, 6)
        return sum(v << (6 * (5 - k)) for k, v in enumerate(vals)), 8
    vals = _values(text, 1, 3)
    return sum(v << (6 * (2 - k)) for k, v in enumerate(vals)), 4


def parse_graph6(text):
    """
    Lee una cadena graph6. Se toleran la cabecera ">>graph6<<" y el salto de
    línea final. Los offsets de los errores son relativos al texto recibido.
    """
    text = text.rstrip("\r\n")
    shift = 0
    if text.startswith(GRAPH6_HEADER):
        shift = len(GRAPH6_HEADER)
        text = text[shift:]

    try:
        n, start = _decode_order(text)
        if not 1 <= n <= MAX_GRAPH_ORDER:
            raise Graph6ParseError(f"order {n} outside supported range 1..{MAX_GRAPH_ORDER}", 0)

        m = pair_count(n)
        expected = start + (m + 5) // 6
        if len(text) != expected:
            raise Graph6ParseError(
                f"expected {expected} bytes for order {n}, got {len(text)}",
                min(len(text), expected),
            )

        values = _values(text, start, expected - start)
        bits = "".join(format(v, "06b") for v in values)
        if "1" in bits[m:]:
            raise Graph6ParseError("non-zero padding bits", expected - 1)
    except Graph6ParseError as exc:
        raise Graph6ParseError(exc.reason, exc.offset + shift) from None

    edges = [pr for pr, b in zip(upper_triangle_pairs(n), bits) if b == "1"]
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines):
    """
    Genera (número de línea, Graph | Graph6ParseError) por cada línea no vacía.
    Los errores se devuelven en vez de lanzarse, así la lectura sigue.
    """
    for number, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            # latin-1: un carácter por byte, así el offset sigue siendo el del byte
            line = line.decode("latin-1")
        line = line.strip(_BLANK)
        if not line or line == GRAPH6_HEADER:
            continue
        try:
            yield number, parse_graph6(line)
        except Graph6ParseError as exc:
            log.debug("line %d: %s", number, exc)
            yield number, exc


def load_graph6_file(path):
    """Lee todos los grafos de un archivo graph6; la primera línea mal formada lanza el error."""
    graphs = []
    with open(Path(path), "rb") as f:
        for number, item in read_graph6_lines(f):
            if isinstance(item, Graph6ParseError):
                raise Graph6ParseError(f"line {number}: {item.reason}", item.offset)
            graphs.append(item)
    return graphs


def save_graph6_file(graphs, path):
    """Escribe un grafo por línea, sin cabecera."""
    with open(Path(path), "w", encoding="ascii") as f:
        for g in graphs:
            f.write(encode_graph6(g) + "\n")
    log.info("saved %d graphs to %s", len(graphs), path)
