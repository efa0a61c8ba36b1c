"""The 27-line arrangement and its degenerated monodromy factorization."""

import time

import pytest

from braidforge.braid import delta_squared
from braidforge.data import golden_json
from braidforge.degeneration import (_marker_text, build_tt,
                                     check_pair_partition, degree_audit,
                                     dt_notation, markers, parasitic_Dt, phi8,
                                     tilde_Cj, tilde_Delta2)


def test_graph_combinatorics(graph):
    assert graph.n_lines == 27
    for v in range(1, 10):
        assert len(graph.incident_lines(v)) == 6
    # every unordered line pair either meets at a vertex or is parasitic
    assert check_pair_partition(graph)


def test_block_degrees(graph):
    c = {j: tilde_Cj(graph, j).degree for j in range(1, 10)}
    d = {j: tilde_Delta2(graph, j).degree for j in range(1, 10)}
    assert sum(c.values()) == 432
    assert sum(d.values()) == 270
    assert all(x == 30 for x in d.values())


def test_total_degree_and_audit(graph, phi8_fz):
    audit = degree_audit(phi8_fz, 27 * 26)
    assert audit["pass"] and audit["total"] == 702


def test_blocks_partition_the_factorization(graph, phi8_fz):
    rebuilt = None
    for j in range(1, 10):
        part = tilde_Cj(graph, j) + tilde_Delta2(graph, j)
        rebuilt = part if rebuilt is None else rebuilt + part
    assert rebuilt == phi8_fz
    assert [f.label for f in rebuilt] == [f.label for f in phi8_fz]


def test_product_is_the_full_twist(phi8_fz):
    t0 = time.monotonic()
    assert phi8_fz.product() == delta_squared(27)
    assert time.monotonic() - t0 < 120


def test_parasitic_factors_are_nodes(graph):
    for t in range(1, 28):
        dt = parasitic_Dt(graph, t)
        expected = [p for p in range(1, t) if graph.disjoint(p, t)]
        assert len(dt) == len(expected)
        for f in dt:
            assert f.exponent == 2 and f.tag == "node" and f.degree == 2


def _golden_notation(t: int, entry: dict) -> str:
    """Render one transcribed parasitic list in the serialized notation."""
    parts = []
    for p in entry["i"]:
        if t - p == 1:
            parts.append(f"Z2[{p},{t}]")
        else:
            parts.append(f"Zbar2[{p},{t}]" + _marker_text(entry["markers"]))
    return " . ".join(parts) if parts else "Id"


def test_parasitic_notation_matches_transcription(graph):
    golden = golden_json("dt_list.json")
    for t in range(1, 28):
        entry = golden[str(t)]
        assert dt_notation(graph, t) == _golden_notation(t, entry), f"D_{t}"
        assert [p for p in range(1, t) if graph.disjoint(p, t)] == entry["i"]
        if entry["i"]:
            assert list(markers(graph, t)) == entry["markers"], f"D_{t} markers"


def test_determinism():
    a, b = build_tt(), build_tt()
    assert phi8(a).dumps() == phi8(b).dumps()
