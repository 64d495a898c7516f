"""
Grupos de mates coespectrales generalizados de un corpus y la verificación
exhaustiva de la cota de 2^k - 1 mates.

Un sweep es una reducción por clave: cada shard junta representantes canónicos,
los shards se fusionan por unión y el agrupado y la certificación se hacen una
sola vez sobre las clases fusionadas. El informe final no depende del reparto
en shards.
"""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from tqdm import tqdm

from config import MAX_SWEEP_ORDER, LONG_SWEEP_ORDER
from processing.canonical_form import canonical_labeling
from processing.cospectral_certifier import verify_pair
from processing.family_classifier import classify_family
from processing.graph_enumerator import enumerate_isomorphism_classes
from processing.primitive_checks import LemmaOutcome, check_same_level_permutation
from processing.walk_matrix import generalized_spectrum_key, walk_matrix
from utils.exceptions import MixedOrderError, UnsupportedOrderError
from utils.math_utils import factorize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MateGroup:
    key: object
    members: tuple
    per_member_classification: tuple
    certified: bool

    @property
    def size(self):
        return len(self.members)

    @property
    def is_family(self):
        """Dos o más miembros: una familia de mates coespectrales generalizados."""
        return self.size >= 2


def _class_representatives(graphs):
    """Grafos canónicos de las clases de isomorfismo distintas, por forma canónica."""
    classes = {}
    order = None
    for g in graphs:
        if order is None:
            order = g.order
        elif g.order != order:
            raise MixedOrderError(f"corpus mixes orders {order} and {g.order}")
        form, _ = canonical_labeling(g)
        if form not in classes:
            classes[form] = form.to_graph()
    return classes


def _groups_from_classes(classes):
    buckets = defaultdict(list)
    for form in sorted(classes):
        g = classes[form]
        buckets[generalized_spectrum_key(g)].append(g)

    groups = []
    for key in sorted(buckets, key=lambda k: (k.char_poly_g, k.char_poly_complement)):
        members = tuple(buckets[key])
        infos = [walk_matrix(g) for g in members]
        groups.append(MateGroup(
            key=key,
            members=members,
            per_member_classification=tuple(classify_family(info) for info in infos),
            certified=all(info.controllable for info in infos),
        ))
    return groups


def group_by_generalized_spectrum(corpus):
    """
    Parte las clases de isomorfismo del corpus según el espectro generalizado.
    Los miembros son representantes canónicos en orden de forma canónica; los
    grupos se ordenan por sus polinomios característicos.
    """
    groups = _groups_from_classes(_class_representatives(corpus))
    log.info("%d groups, %d with mates", len(groups), sum(g.is_family for g in groups))
    return groups


@dataclass(frozen=True)
class ShardResult:
    """Representantes canónicos reunidos por uno o más shards de un sweep de orden n."""

    order: int
    classes: dict
    shards: frozenset = field(default_factory=frozenset)


@dataclass
class SweepReport:
    order: int
    class_count: int
    group_size_histogram: dict
    fn_count: int
    hn_count: int
    controllable_count: int
    certified_pairs: int
    k_disagreements: int
    predicate_counts: dict
    violations: list

    @property
    def ok(self):
        return not self.violations


def check_sweep_order(n, allow_long):
    limit = LONG_SWEEP_ORDER if allow_long else MAX_SWEEP_ORDER
    if n < 1:
        raise UnsupportedOrderError(f"order must be positive, got {n}")
    if n > limit:
        raise UnsupportedOrderError(
            f"sweeps support order <= {MAX_SWEEP_ORDER} (or {LONG_SWEEP_ORDER} with the long-run flag), got {n}"
        )


def run_sweep_shard(n, shard_index=0, shard_total=1, allow_long=False):
    check_sweep_order(n, allow_long)
    classes = enumerate_isomorphism_classes(n, shard_index, shard_total)
    return ShardResult(n, classes, frozenset({(shard_index, shard_total)}))


def merge_shard_results(a, b):
    """Unión de dos resultados de shard del mismo orden; asociativa y conmutativa."""
    if a.order != b.order:
        raise MixedOrderError(f"cannot merge shards of orders {a.order} and {b.order}")
    classes = dict(a.classes)
    classes.update(b.classes)
    return ShardResult(a.order, classes, a.shards | b.shards)


class _Tally:
    def __init__(self):
        self.counts = defaultdict(Counter)

    def record(self, name, passed):
        self.counts[name]["checked"] += 1
        if passed:
            self.counts[name]["passed"] += 1
        return passed

    def as_dict(self):
        return {
            name: {"passed": c["passed"], "checked": c["checked"]}
            for name, c in sorted(self.counts.items())
        }


def _certify_member(g, classification, mates, tally, violations):
    """Certificados de g a cada uno de sus mates, con el recuento de cada predicado de nivel."""
    info = walk_matrix(g)
    half = g.order // 2
    squared = set(classification.squared_primes)
    certificates = []
    for h in mates:
        cert = verify_pair(g, h)
        certificates.append(cert)
        name = f"{g!r} -> {h!r}"
        if not tally.record("certificate_valid", cert.is_valid):
            violations.append(f"{name}: certificate is not valid")
            continue
        if cert.is_permutation:
            violations.append(f"{name}: distinct classes joined by a permutation")

        d_h = walk_matrix(h).snf.last_invariant
        divides = gcd(info.snf.last_invariant, d_h) % cert.level == 0
        if not tally.record("level_divides_last_invariants", divides):
            violations.append(f"{name}: level {cert.level} does not divide gcd(d_n(W_G), d_n(W_H))")

        if info.two_adic_valuation == half:
            if not tally.record("level_odd", cert.level % 2 == 1):
                violations.append(f"{name}: level {cert.level} is even although 2^{half} exactly divides det W")

        if classification.in_fn:
            odd_sf = cert.level_constraints.level_odd and cert.level_constraints.level_square_free
            if not tally.record("level_odd_square_free", odd_sf):
                violations.append(f"{name}: level {cert.level} is not odd and square-free")
            support = {p for p, _ in factorize(cert.level)}
            if not tally.record("level_primes_squared_in_det", support <= squared):
                violations.append(f"{name}: level {cert.level} has a prime outside {sorted(squared)}")
            if not tally.record("primitive", cert.is_primitive):
                violations.append(f"{name}: Q is not primitive")
    return certificates


def _check_distinct_levels(g, certificates, tally, violations):
    """Los mates de un grafo de F_n tienen niveles distintos dos a dos; nivel igual implica mates isomorfos."""
    for c1, c2 in combinations(certificates, 2):
        if c1.level != c2.level:
            tally.record("mate_levels_distinct", True)
            continue
        tally.record("mate_levels_distinct", False)
        outcome = check_same_level_permutation(c1.q, c2.q)
        tally.record("same_level_product_permutation", outcome is LemmaOutcome.VERIFIED)
        violations.append(
            f"{g!r}: mates {c1.graph_h!r} and {c2.graph_h!r} share level {c1.level} ({outcome.value})"
        )


def finalize_sweep(result, progress=False):
    """Agrupa las clases fusionadas y comprueba la cota de mates para cada grafo de F_n."""
    groups = _groups_from_classes(result.classes)
    tally = _Tally()
    violations = []
    histogram = Counter()
    fn_count = hn_count = controllable = pairs = k_disagreements = 0

    for group in tqdm(groups, desc=f"order {result.order}", disable=not progress):
        histogram[group.size] += 1
        for i, (g, cls) in enumerate(zip(group.members, group.per_member_classification)):
            fn_count += cls.in_fn
            hn_count += cls.in_hn
            if cls.in_hn and not cls.in_fn:
                violations.append(f"{g!r}: in H_n but not in F_n")
            if cls.k_counts_differ:
                k_disagreements += 1
            if not walk_matrix(g).controllable:
                continue
            controllable += 1
            mates = group.members[:i] + group.members[i + 1:]
            if cls.in_fn and not tally.record("mate_bound", len(mates) <= cls.mate_bound):
                violations.append(f"{g!r}: {len(mates)} mates exceed the bound {cls.mate_bound}")
            if not group.certified:
                continue
            certificates = _certify_member(g, cls, mates, tally, violations)
            pairs += len(certificates)
            if cls.in_fn:
                _check_distinct_levels(g, certificates, tally, violations)

    report = SweepReport(
        order=result.order,
        class_count=len(result.classes),
        group_size_histogram=dict(sorted(histogram.items())),
        fn_count=fn_count,
        hn_count=hn_count,
        controllable_count=controllable,
        certified_pairs=pairs,
        k_disagreements=k_disagreements,
        predicate_counts=tally.as_dict(),
        violations=violations,
    )
    if violations:
        log.warning("order %d: %d violations", result.order, len(violations))
    else:
        log.info("order %d: %d classes, no violations", result.order, report.class_count)
    return report


def verify_theorem_bound(n, allow_long=False, progress=False):
    """Verificación exhaustiva sobre todas las clases de isomorfismo de orden n."""
    return finalize_sweep(run_sweep_shard(n, allow_long=allow_long), progress=progress)
