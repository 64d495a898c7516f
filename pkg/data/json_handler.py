import json
from functools import lru_cache
from pathlib import Path

from jsonschema import Draft202012Validator
from jsonschema.exceptions import ValidationError

from config import CERTIFICATE_SCHEMA_PATH, RECORD_SCHEMA_PATH, SCHEMA_VERSION
from data.graph6_handler import encode_graph6, parse_graph6
from processing.cospectral_certifier import certificate_from_scaled
from processing.exact_matrix import IntMatrix
from processing.mate_groups import ShardResult
from processing.canonical_form import canonical_labeling
from utils.exceptions import CertificateFormatError, Graph6ParseError, SingularWalkMatrixError


@lru_cache(maxsize=None)
def _validator(schema_path):
    with open(schema_path, "r", encoding="utf-8") as f:
        return Draft202012Validator(json.load(f))


def validate_document(doc, schema_path=CERTIFICATE_SCHEMA_PATH):
    """
    Valida doc contra el esquema JSON indicado.
    Lanza CertificateFormatError con la primera discrepancia encontrada.
    """
    try:
        _validator(Path(schema_path)).validate(doc)
    except ValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise CertificateFormatError(f"{where}: {e.message}") from e


def validate_record(record):
    validate_document(record, RECORD_SCHEMA_PATH)


def _predicates(cert):
    return {
        "is_valid": cert.is_valid,
        "is_mate": cert.is_mate,
        "is_regular": cert.is_regular,
        "is_orthogonal": cert.is_orthogonal,
        "conjugation_holds": cert.conjugation_holds,
        "is_permutation": cert.is_permutation,
        "is_primitive": cert.is_primitive,
        "level_divides_last_invariant_gcd": cert.level_constraints.divides_last_invariant_gcd,
        "level_odd": cert.level_constraints.level_odd,
        "level_square_free": cert.level_constraints.level_square_free,
    }


def certificate_to_document(cert):
    """
    Q se guarda como la matriz entera level*Q más el nivel; todos los enteros
    van como cadenas decimales.
    """
    scaled = cert.scaled_q
    doc = {
        "schema": SCHEMA_VERSION,
        "kind": "certificate",
        "graph_g": encode_graph6(cert.graph_g),
        "graph_h": encode_graph6(cert.graph_h),
        "order": str(cert.graph_g.order),
        "level": str(cert.level),
        "scaled_q": [[str(x) for x in row] for row in scaled.to_rows()],
        "per_prime_ranks": [{"prime": str(p), "rank": str(r)} for p, r in cert.per_prime_ranks],
        "predicates": _predicates(cert),
    }
    validate_document(doc)
    return doc


def certificate_from_document(doc):
    """
    Reconstruye el certificado y recalcula cada predicado; si alguno no coincide
    con lo guardado el documento se rechaza.
    """
    validate_document(doc)
    try:
        g = parse_graph6(doc["graph_g"])
        h = parse_graph6(doc["graph_h"])
    except Graph6ParseError as e:
        raise CertificateFormatError(f"bad graph6 in certificate: {e}") from e

    n = int(doc["order"])
    rows = doc["scaled_q"]
    if g.order != n or h.order != n or len(rows) != n or any(len(r) != n for r in rows):
        raise CertificateFormatError(f"certificate dimensions do not match order {n}")
    scaled = IntMatrix.from_rows([[int(x) for x in r] for r in rows])
    try:
        cert = certificate_from_scaled(g, h, scaled, int(doc["level"]))
    except SingularWalkMatrixError as e:
        raise CertificateFormatError(f"certificate for uncertifiable graphs: {e}") from e

    if cert.level != int(doc["level"]):
        raise CertificateFormatError(f"stored level {doc['level']} is not the level of Q ({cert.level})")
    mismatched = [k for k, v in _predicates(cert).items() if doc["predicates"][k] != v]
    if mismatched:
        raise CertificateFormatError(f"stored predicates disagree with Q: {', '.join(mismatched)}")
    return cert


def save_certificate(cert, json_path):
    with open(json_path, "w", encoding="utf-8") as f:
        json.dump(certificate_to_document(cert), f, indent=4)


def load_certificate(json_path):
    json_path = Path(json_path)
    if not json_path.exists():
        raise FileNotFoundError(f"No se encontró el archivo {json_path}")
    with open(json_path, "r", encoding="utf-8") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise CertificateFormatError(f"{json_path}: not JSON ({e})") from e
    return certificate_from_document(doc)


def shard_to_record(result):
    forms = sorted(result.classes)
    return {
        "schema": SCHEMA_VERSION,
        "kind": "shard",
        "order": str(result.order),
        "shards": [[str(i), str(t)] for i, t in sorted(result.shards)],
        "classes": [encode_graph6(result.classes[form]) for form in forms],
    }


def shard_from_record(record):
    validate_record(record)
    if record["kind"] != "shard":
        raise CertificateFormatError(f"expected a shard record, got {record['kind']!r}")
    n = int(record["order"])
    classes = {}
    for text in record["classes"]:
        g = parse_graph6(text)
        if g.order != n:
            raise CertificateFormatError(f"shard of order {n} holds a graph of order {g.order}")
        form, _ = canonical_labeling(g)
        classes[form] = form.to_graph()
    shards = frozenset((int(i), int(t)) for i, t in record["shards"])
    return ShardResult(n, classes, shards)


def save_shard_result(result, json_path):
    with open(json_path, "w", encoding="utf-8") as f:
        json.dump(shard_to_record(result), f, indent=4)


def load_shard_result(json_path):
    json_path = Path(json_path)
    if not json_path.exists():
        raise FileNotFoundError(f"No se encontró el archivo {json_path}")
    with open(json_path, "r", encoding="utf-8") as f:
        return shard_from_record(json.load(f))
