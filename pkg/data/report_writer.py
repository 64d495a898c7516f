"""
Registros de salida de cada comando y sus tres formatos.

Un registro es un dict plano listo para JSON con las claves "schema" y "kind";
todos los enteros van como cadenas decimales. json-lines escribe un registro
por línea, csv pasa por un DataFrame de pandas y human imprime líneas de
estado con los marcadores de siempre.
"""
import json

import pandas as pd

from config import SCHEMA_VERSION
from data.graph6_handler import encode_graph6
from utils.constants import FAIL_MARK, OK_MARK, WARN_MARK
from utils.math_utils import format_factorization


def _opt(value):
    return None if value is None else str(value)


def analysis_record(line_no, g, info, classification):
    return {
        "schema": SCHEMA_VERSION,
        "kind": "analysis",
        "line": str(line_no),
        "graph6": encode_graph6(g),
        "order": str(g.order),
        "controllable": info.controllable,
        "det": str(info.determinant),
        "two_adic_valuation": _opt(info.two_adic_valuation),
        "normalized_det": _opt(info.normalized_det),
        "factorization": [{"prime": str(p), "exponent": str(e)} for p, e in info.det_factorization],
        "per_prime_ranks": [
            {"prime": str(pr.prime), "rank": str(pr.rank), "satisfied": pr.satisfied}
            for pr in classification.per_prime_ranks
        ],
        "in_hn": classification.in_hn,
        "in_fn": classification.in_fn,
        "k": str(classification.k_odd_primes_squared),
        "k_from_last_invariant": str(classification.k_from_last_invariant),
        "k_counts_differ": classification.k_counts_differ,
        "mate_bound": _opt(classification.mate_bound),
    }


def error_record(line_no, error, reason="parse-error"):
    return {
        "schema": SCHEMA_VERSION,
        "kind": "error",
        "reason": reason,
        "line": _opt(line_no),
        "message": getattr(error, "reason", str(error)),
        "offset": _opt(getattr(error, "offset", None)),
    }


def group_record(group):
    return {
        "schema": SCHEMA_VERSION,
        "kind": "group",
        "order": str(group.members[0].order),
        "size": str(group.size),
        "certified": group.certified,
        "members": [encode_graph6(g) for g in group.members],
        "in_fn": [c.in_fn for c in group.per_member_classification],
        "mate_bounds": [_opt(c.mate_bound) for c in group.per_member_classification],
    }


def sweep_record(report):
    return {
        "schema": SCHEMA_VERSION,
        "kind": "sweep",
        "order": str(report.order),
        "classes": str(report.class_count),
        "group_sizes": {str(size): str(count) for size, count in report.group_size_histogram.items()},
        "fn_count": str(report.fn_count),
        "hn_count": str(report.hn_count),
        "controllable": str(report.controllable_count),
        "certified_pairs": str(report.certified_pairs),
        "k_disagreements": str(report.k_disagreements),
        "predicates": {
            name: {"passed": str(c["passed"]), "checked": str(c["checked"])}
            for name, c in report.predicate_counts.items()
        },
        "violations": list(report.violations),
    }


def _human_analysis(r):
    if not r["controllable"]:
        return f"{WARN_MARK} line {r['line']} {r['graph6']}: n={r['order']}, det W = 0, not controllable, in H_n: no, in F_n: no"
    ranks = ", ".join(f"rank_{x['prime']} = {x['rank']}" for x in r["per_prime_ranks"]) or "no odd primes"
    mark = OK_MARK if r["in_fn"] else WARN_MARK
    lines = [
        f"{mark} line {r['line']} {r['graph6']}: n={r['order']}",
        f"   det W = {format_factorization(int(r['det']))}",
        f"   2-adic valuation {r['two_adic_valuation']}, {ranks}",
        f"   in H_n: {'yes' if r['in_hn'] else 'no'}, in F_n: {'yes' if r['in_fn'] else 'no'}, k = {r['k']}",
    ]
    if r["mate_bound"] is not None:
        lines.append(f"   at most {r['mate_bound']} non-isomorphic generalized cospectral mates")
    if r["k_counts_differ"]:
        lines.append(f"   {WARN_MARK} k from d_n(W) is {r['k_from_last_invariant']}")
    return "\n".join(lines)


def _human_error(r):
    where = f" at byte {r['offset']}" if r["offset"] is not None else ""
    head = f"line {r['line']}" if r["line"] is not None else r["reason"]
    return f"{FAIL_MARK} {head}: {r['message']}{where}"


def _human_group(r):
    mark = OK_MARK if r["certified"] else WARN_MARK
    head = f"{mark} group of {r['size']} (n={r['order']}){'' if r['certified'] else ', uncertified'}"
    members = [
        f"   {g6}  in F_n: {'yes' if fn else 'no'}" + (f", bound {b}" if b is not None else "")
        for g6, fn, b in zip(r["members"], r["in_fn"], r["mate_bounds"])
    ]
    return "\n".join([head] + members)


def _human_sweep(r):
    mark = FAIL_MARK if r["violations"] else OK_MARK
    sizes = ", ".join(f"{size}: {count}" for size, count in r["group_sizes"].items())
    lines = [
        f"{mark} order {r['order']}: {r['classes']} classes, {len(r['violations'])} violations",
        f"   group sizes {{{sizes}}}",
        f"   F_n: {r['fn_count']}, H_n: {r['hn_count']}, controllable: {r['controllable']}",
        f"   certified pairs: {r['certified_pairs']}, k disagreements: {r['k_disagreements']}",
    ]
    lines += [f"   {name}: {c['passed']}/{c['checked']}" for name, c in r["predicates"].items()]
    lines += [f"   {FAIL_MARK} {v}" for v in r["violations"]]
    return "\n".join(lines)


def _human_certificate(r):
    p = r["predicates"]
    if p["is_mate"]:
        head = f"{OK_MARK} generalized cospectral mates, level {r['level']}"
    elif p["is_valid"]:
        head = f"{WARN_MARK} isomorphic graphs, Q is a permutation matrix"
    else:
        head = f"{FAIL_MARK} invalid certificate, level {r['level']}"
    checks = [f"   {name}: {'yes' if value else 'no'}" for name, value in p.items()]
    ranks = ", ".join(f"rank_{x['prime']}(lQ) = {x['rank']}" for x in r["per_prime_ranks"])
    return "\n".join([head, f"   {r['graph_g']} -> {r['graph_h']}"] + checks + ([f"   {ranks}"] if ranks else []))


_HUMAN = {
    "analysis": _human_analysis,
    "error": _human_error,
    "group": _human_group,
    "sweep": _human_sweep,
    "certificate": _human_certificate,
}


def format_human(record):
    return _HUMAN[record["kind"]](record)


def _flatten(value):
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return value


def records_to_frame(records):
    return pd.DataFrame([{k: _flatten(v) for k, v in r.items()} for r in records])


def write_records(records, fmt, stream):
    if fmt == "json-lines":
        for r in records:
            stream.write(json.dumps(r) + "\n")
    elif fmt == "csv":
        records = list(records)
        if records:
            records_to_frame(records).to_csv(stream, index=False)
    elif fmt == "human":
        for r in records:
            stream.write(format_human(r) + "\n")
    else:
        raise ValueError(f"unknown output format {fmt!r}")
