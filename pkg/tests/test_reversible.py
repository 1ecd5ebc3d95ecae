import itertools

import pytest

from chordal.graph import DisconnectedGraphError, Graph, GraphError
from chordal.oracle import CorpusSpec, brute_reversible_orderings, enumerate_graphs, has_reversible_ordering
from chordal.reversible import (
    BULL,
    CLAW,
    NET,
    PATTERNS,
    SUN3,
    ReversibilityCertificate,
    find_induced,
    find_reversible_ordering,
    induces,
    is_bisimplicial,
    is_proper_interval,
    is_reversible_ordering,
)
from chordal.search import is_hole, simplicial_vertices


def names(g, order):
    return tuple(g.label(v) for v in order)


def test_bull_labelling():
    edges = {frozenset((BULL.label(u), BULL.label(v))) for u, v in BULL.edges()}
    assert edges == {frozenset(p) for p in ("ab", "bc", "bd", "cd", "ce")}


def test_bull_order_is_reversible():
    order = [BULL.vertex(x) for x in "abdce"]
    assert is_reversible_ordering(BULL, order)


def test_bull_has_exactly_two_reversible_orderings():
    found = [p for p in itertools.permutations(range(5)) if is_reversible_ordering(BULL, p)]
    assert sorted(names(BULL, p) for p in found) == [tuple("abdce"), tuple("ecdba")]
    assert sorted(names(BULL, p) for p in brute_reversible_orderings(BULL)) == [tuple("abdce"), tuple("ecdba")]


def test_claw_has_no_reversible_ordering():
    assert not any(is_reversible_ordering(CLAW, p) for p in itertools.permutations(range(4)))


def test_complete_graph_every_order_reversible():
    k4 = Graph.complete(4)
    assert all(is_reversible_ordering(k4, p) for p in itertools.permutations(range(4)))


def test_reversible_witness_direction():
    # Forward fails at the path's middle vertex placed first.
    check = is_reversible_ordering(Graph.path(3), [1, 0, 2])
    assert not check and check.direction == "forward" and check.failure.vertex == 1
    # Forward order 0,2,1 is a scheme; its reverse 1,2,0 is not.
    check = is_reversible_ordering(Graph.path(3), [0, 2, 1])
    assert not check and check.direction == "backward"


def test_reversible_rejects_non_permutation():
    with pytest.raises(GraphError):
        is_reversible_ordering(Graph.path(3), [0, 1, 1])


def test_bisimplicial_examples():
    assert all(is_bisimplicial(SUN3, v) for v in range(6))
    assert not is_bisimplicial(CLAW, 0)
    g = Graph.cycle(6)
    for v in simplicial_vertices(BULL):
        assert is_bisimplicial(BULL, v)
    assert all(is_bisimplicial(g, v) for v in range(6))
    # Center of a star with three leaves plus a fourth: still not two cliques.
    assert not is_bisimplicial(Graph(5, [(0, i) for i in range(1, 5)]), 0)


def test_path_gets_path_order():
    for n in range(1, 9):
        cert = find_reversible_ordering(Graph.path(n))
        assert cert.reversible
        assert list(cert.vertices) in (list(range(n)), list(range(n))[::-1])


@pytest.mark.parametrize("g, kind", [(CLAW, "claw"), (NET, "net"), (SUN3, "sun3")])
def test_forbidden_witnesses(g, kind):
    cert = find_reversible_ordering(g)
    assert cert.kind == kind and not cert.reversible
    assert cert.verify(g)
    assert brute_reversible_orderings(g) == []


def test_hole_witness():
    cert = find_reversible_ordering(Graph.cycle(5))
    assert cert.kind == "hole" and is_hole(Graph.cycle(5), cert.vertices)


def test_is_proper_interval_examples():
    assert is_proper_interval(Graph.path(4))
    assert not is_proper_interval(CLAW)
    assert is_proper_interval(BULL)
    assert find_reversible_ordering(BULL).vertices == tuple(BULL.vertex(x) for x in "abdce")


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        find_reversible_ordering(Graph(3, [(0, 1)]))


def test_matches_brute_force_on_all_labeled_graphs():
    for g in enumerate_graphs(CorpusSpec(n_max=6)):
        cert = find_reversible_ordering(g)
        assert cert.verify(g)
        assert cert.reversible == has_reversible_ordering(g)


def test_positive_instances_structure():
    for g in enumerate_graphs(CorpusSpec(n_max=7, labeled=False)):
        cert = find_reversible_ordering(g)
        if not cert.reversible:
            continue
        simp = simplicial_vertices(g)
        assert all(v in simp or is_bisimplicial(g, v) for v in range(g.n))
        for pattern in PATTERNS.values():
            assert find_induced(g, pattern) is None


def test_find_induced_and_induces():
    assert find_induced(Graph.path(5), CLAW) is None
    star = Graph(5, [(0, i) for i in range(1, 5)])
    hit = find_induced(star, CLAW)
    assert hit[0] == 0 and induces(star, hit, CLAW)
    assert induces(CLAW, (3, 0, 1, 2), CLAW) is False or induces(CLAW, (1, 0, 2, 3), CLAW)
    assert not induces(Graph.complete(4), (0, 1, 2, 3), CLAW)
    assert not induces(star, (0, 1, 2), CLAW)


def test_certificate_json_round_trip():
    for g in (BULL, CLAW, NET, SUN3, Graph.cycle(6)):
        cert = find_reversible_ordering(g)
        data = cert.to_json(g)
        assert set(data) == {"kind", "vertices"}
        back = ReversibilityCertificate.from_json(data, g)
        assert back == cert and back.verify(g)
