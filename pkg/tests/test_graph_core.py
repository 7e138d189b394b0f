import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import random_connected
from eccenergy.graph_core import (
    CoalescenceSpec,
    DisconnectedGraphError,
    EdgeCase,
    EdgeRef,
    FamilySpec,
    Graph,
    GraphError,
    add_edge,
    build_coalescence,
    build_complete,
    build_family,
    build_friendship,
    classify_edge,
    delete_edge,
    distances,
    edge_case_counts,
    format_graph,
    is_connected,
    parse_graph,
    path_graph,
    read_graph,
    representative_edge,
    write_graph,
)


def test_complete_graph():
    g = build_complete(5)
    assert g.order == 5 and g.edge_count == 10
    assert distances(g).diameter == 1


def test_single_vertex():
    g = build_complete(1)
    info = distances(g)
    assert g.edge_count == 0 and info.diameter == 0


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(np.array([[0, 1], [0, 0]], dtype=bool))
    with pytest.raises(GraphError):
        Graph(np.eye(2, dtype=bool))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_graph_is_immutable():
    g = build_complete(3)
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = False


def test_edge_ref_orders_endpoints():
    assert EdgeRef.of(4, 2) == EdgeRef(2, 4)
    with pytest.raises(GraphError):
        EdgeRef(3, 1)


@pytest.mark.parametrize(
    "k,parts,order,size",
    [(3, (6, 6), 9, 27), (1, (3, 3), 5, 6), (2, (4, 5, 6), 11, 6 + 10 + 15 - 2)],
)
def test_coalescence_counts(k, parts, order, size):
    spec = CoalescenceSpec(k, parts)
    g = build_coalescence(spec)
    assert spec.order == g.order == order
    assert spec.size == g.edge_count == size


@pytest.mark.parametrize("k,parts", [(0, (3, 3)), (3, (3, 4)), (1, (2, 3)), (1, (4,))])
def test_coalescence_validation(k, parts):
    with pytest.raises(GraphError):
        CoalescenceSpec(k, parts)


def test_family_labels():
    fam = FamilySpec(3, 2)
    g = build_family(fam)
    assert g.order == 9
    # clique vertices see everything; private blocks of different parts do not meet
    assert g.adjacency[:3].sum() == 3 * 8
    assert not g.has_edge(3, 6)
    assert g.has_edge(3, 4)


def test_family_validation():
    with pytest.raises(GraphError):
        FamilySpec(1, 3)
    with pytest.raises(GraphError):
        FamilySpec(3, 1)


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2), (3, 4), (5, 3)])
def test_edge_classes_partition_edges(n, l):  # noqa: E741
    fam = FamilySpec(n, l)
    g = build_family(fam)
    spec = fam.coalescence()
    counts = {c: 0 for c in EdgeCase}
    for e in g.edges():
        counts[classify_edge(spec, e)] += 1
    assert counts == edge_case_counts(fam)
    assert sum(counts.values()) == g.edge_count


def test_representative_edges():
    spec = FamilySpec(3, 2).coalescence()
    assert representative_edge(spec, EdgeCase.CLIQUE_INTERNAL) == EdgeRef(0, 1)
    assert representative_edge(spec, EdgeCase.CLIQUE_INCIDENT) == EdgeRef(0, 3)
    assert representative_edge(spec, EdgeCase.CLIQUE_EXTERNAL) == EdgeRef(3, 4)
    for case in EdgeCase:
        assert classify_edge(spec, representative_edge(spec, case)) is case


def test_classify_rejects_non_edge():
    spec = FamilySpec(3, 2).coalescence()
    with pytest.raises(GraphError):
        classify_edge(spec, EdgeRef(3, 6))


def test_friendship_graph():
    g = build_friendship(4)
    assert g.order == 9 and g.edge_count == 12
    assert distances(g).ecc.tolist() == [1] + [2] * 8


def test_delete_and_add_edge():
    g = path_graph(4)
    h = delete_edge(g, EdgeRef(1, 2))
    assert not is_connected(h)
    with pytest.raises(DisconnectedGraphError):
        delete_edge(g, EdgeRef(1, 2), require_connected=True)
    with pytest.raises(DisconnectedGraphError):
        distances(h)
    assert add_edge(h, EdgeRef(1, 2)) == g
    with pytest.raises(GraphError):
        delete_edge(g, EdgeRef(0, 3))
    with pytest.raises(GraphError):
        add_edge(g, EdgeRef(0, 1))


def test_path_distances():
    info = distances(path_graph(5))
    assert info.dist[0].tolist() == [0, 1, 2, 3, 4]
    assert info.ecc.tolist() == [4, 3, 2, 3, 4]
    assert info.diameter == 4


def test_text_round_trip(tmp_path):
    g = build_family(FamilySpec(3, 2))
    p = tmp_path / "g.txt"
    write_graph(g, p)
    assert p.read_bytes().count(b"\r") == 0
    assert read_graph(p) == g
    assert format_graph(g).splitlines()[0] == "9 27"


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 1\n0 3\n", "3 1\n1 0\n", "3 2\n0 1\n0 1\n", "3 2\n0 1\n", "3 1\n0 x\n", "0 0\n"],
)
def test_parse_rejects(text):
    with pytest.raises(GraphError):
        parse_graph(text)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 14), st.integers(0, 20), st.integers(0, 10_000))
def test_distance_invariants(n, extra, seed):
    g = random_connected(n, extra, seed)
    info = distances(g)
    d = info.dist
    assert np.array_equal(d, d.T)
    assert not d.diagonal().any()
    assert np.array_equal(d == 1, g.adjacency)
    assert info.ecc.tolist() == d.max(axis=1).tolist()
    assert info.diameter == info.ecc.max()
    assert parse_graph(format_graph(g)) == g
