import logging

from config import MAX_ENUMERATION_ORDER
from data.graph import Graph, pair_count
from processing.canonical_form import canonical_labeling
from utils.exceptions import UnsupportedOrderError

log = logging.getLogger(__name__)


def labeled_graph_count(n):
    return 1 << pair_count(n)


def shard_range(n, shard_index=0, shard_total=1):
    """
    Rango contiguo de códigos del triángulo superior para un shard. Los códigos
    siguen el orden lexicográfico de la cadena de bits, así que un shard es un
    bloque de prefijo común cuando shard_total es potencia de dos.
    """
    if shard_total < 1 or not 0 <= shard_index < shard_total:
        raise ValueError(f"invalid shard {shard_index}/{shard_total}")
    total = labeled_graph_count(n)
    start = total * shard_index // shard_total
    stop = total * (shard_index + 1) // shard_total
    return range(start, stop)


def _check_order(n):
    if n < 1:
        raise UnsupportedOrderError(f"order must be positive, got {n}")
    if n > MAX_ENUMERATION_ORDER:
        raise UnsupportedOrderError(f"enumeration supports order <= {MAX_ENUMERATION_ORDER}, got {n}")


def enumerate_graphs(n, shard_index=0, shard_total=1):
    """Cada grafo etiquetado de n vértices una sola vez, en orden lexicográfico de bits."""
    _check_order(n)
    for code in shard_range(n, shard_index, shard_total):
        yield Graph.from_code(n, code)


def enumerate_isomorphism_classes(n, shard_index=0, shard_total=1):
    """
    Un representante canónico por cada clase de isomorfismo del shard, como
    dict CanonicalForm -> Graph. La unión de los dicts de todos los shards de
    un orden da cada clase exactamente una vez.
    """
    classes = {}
    for g in enumerate_graphs(n, shard_index, shard_total):
        form, _ = canonical_labeling(g)
        if form not in classes:
            classes[form] = form.to_graph()
    log.info("order %d shard %d/%d: %d classes", n, shard_index, shard_total, len(classes))
    return classes


def isomorphism_class_representatives(n):
    """Representantes canónicos de orden n, ordenados por forma canónica."""
    classes = enumerate_isomorphism_classes(n)
    return [classes[form] for form in sorted(classes)]
