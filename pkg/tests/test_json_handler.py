import copy
import json

import pytest

from data.graph import cycle_graph
from data.graph6_handler import encode_graph6
from data.json_handler import (
    certificate_from_document,
    certificate_to_document,
    load_certificate,
    load_shard_result,
    save_certificate,
    save_shard_result,
    shard_from_record,
    shard_to_record,
    validate_record,
)
from processing.cospectral_certifier import verify_pair
from processing.mate_groups import run_sweep_shard
from utils.exceptions import CertificateFormatError


@pytest.fixture
def certificate(graph_g, graph_h):
    return verify_pair(graph_g, graph_h)


def test_document_layout(certificate):
    doc = certificate_to_document(certificate)
    assert doc["schema"] == "walkspec/1"
    assert doc["kind"] == "certificate"
    assert doc["order"] == "9"
    assert doc["level"] == "11"
    assert all(isinstance(x, str) for row in doc["scaled_q"] for x in row)
    assert doc["per_prime_ranks"] == [{"prime": "11", "rank": "1"}]
    assert doc["predicates"]["is_mate"] is True


def test_certificate_file_round_trip(certificate, tmp_path):
    path = tmp_path / "cert.json"
    save_certificate(certificate, path)
    assert load_certificate(path) == certificate


def test_tampered_predicate_rejected(certificate):
    doc = certificate_to_document(certificate)
    doc["predicates"]["is_permutation"] = True
    with pytest.raises(CertificateFormatError, match="is_permutation"):
        certificate_from_document(doc)


def test_tampered_matrix_rejected(certificate):
    doc = certificate_to_document(certificate)
    forged = copy.deepcopy(doc)
    forged["scaled_q"][0][0] = str(int(doc["scaled_q"][0][0]) + 11)
    forged["scaled_q"][0][1] = str(int(doc["scaled_q"][0][1]) - 11)
    with pytest.raises(CertificateFormatError):
        certificate_from_document(forged)


def test_schema_violations(certificate):
    doc = certificate_to_document(certificate)
    missing = {k: v for k, v in doc.items() if k != "level"}
    with pytest.raises(CertificateFormatError, match="level"):
        certificate_from_document(missing)
    with pytest.raises(CertificateFormatError):
        certificate_from_document({**doc, "schema": "walkspec/0"})
    with pytest.raises(CertificateFormatError):
        certificate_from_document({**doc, "level": 11})
    with pytest.raises(CertificateFormatError):
        certificate_from_document({**doc, "extra": "1"})


def test_dimension_mismatch(certificate):
    doc = certificate_to_document(certificate)
    with pytest.raises(CertificateFormatError, match="dimensions"):
        certificate_from_document({**doc, "scaled_q": doc["scaled_q"][:-1]})


def test_missing_and_malformed_files(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_certificate(tmp_path / "absent.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(CertificateFormatError):
        load_certificate(bad)


def test_shard_record_round_trip(tmp_path):
    result = run_sweep_shard(4, 1, 3)
    record = shard_to_record(result)
    validate_record(record)
    assert record["shards"] == [["1", "3"]]
    assert shard_from_record(json.loads(json.dumps(record))) == result

    path = tmp_path / "shard.json"
    save_shard_result(result, path)
    assert load_shard_result(path) == result


def test_shard_record_rejects_wrong_order():
    record = shard_to_record(run_sweep_shard(3))
    record["classes"].append("D??")
    with pytest.raises(CertificateFormatError):
        shard_from_record(record)


def test_document_for_singular_walk_matrices_rejected(graph_g):
    c5 = encode_graph6(cycle_graph(5))
    doc = certificate_to_document(verify_pair(graph_g, graph_g))
    doc.update(
        graph_g=c5,
        graph_h=c5,
        order="5",
        scaled_q=[["1" if i == j else "0" for j in range(5)] for i in range(5)],
    )
    with pytest.raises(CertificateFormatError, match="uncertifiable"):
        certificate_from_document(doc)
