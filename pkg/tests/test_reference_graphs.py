from data.reference_graphs import (
    REFERENCE_GRAPHS,
    ReferenceDiscrepancy,
    check_reference_discrepancies,
    parse_reference_graphs,
)


def test_reference_graphs_parse():
    assert set(REFERENCE_GRAPHS) == {"G", "H", "N", "M"}
    assert all(g.order == 9 for g in REFERENCE_GRAPHS.values())


def test_second_mate_matches_first_pair_mate():
    assert REFERENCE_GRAPHS["M"] == REFERENCE_GRAPHS["H"]


def test_only_the_second_mate_disagrees():
    found = check_reference_discrepancies()
    assert [(d.graph, d.quantity) for d in found] == [("M", "det"), ("M", "rank_3")]
    det_entry = found[0]
    assert det_entry.stated == 10224
    assert abs(det_entry.computed) == 1936
    assert found[1].computed == 9
    assert "stated det = 10224" in str(det_entry)


def test_parse_blocks():
    graphs = parse_reference_graphs("A\n01\n10\n\nB\n00\n00\n")
    assert graphs["A"].edge_count == 1
    assert graphs["B"].edge_count == 0
    assert ReferenceDiscrepancy("A", "det", 1, 2).computed == 2
