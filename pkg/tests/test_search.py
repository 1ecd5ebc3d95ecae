import itertools

import pytest

from chordal.graph import DisconnectedGraphError, Graph, GraphError
from chordal.oracle import (
    CorpusSpec,
    brute_holes,
    enumerate_graphs,
    graph_from_masks,
    is_chordal_brute,
    masks,
    unlabeled_connected_chordal,
)
from chordal.reversible import SUN3
from chordal.search import (
    ChordalityCertificate,
    NotChordalError,
    canonical_cycle,
    find_hole,
    is_chordal,
    is_hole,
    is_simplicial_elimination_scheme,
    lexbfs,
    lexbfs_plus,
    mcs,
    perfect_elimination_ordering,
    simplicial_vertices,
)


def chordal_corpus(n_max=8):
    for n in range(1, n_max + 1):
        for adj in unlabeled_connected_chordal(n):
            yield graph_from_masks(list(adj))


def test_lexbfs_small_examples():
    assert lexbfs(Graph.complete(3), 0) == [0, 1, 2]
    order = lexbfs(Graph.path(4), 0)
    assert order == [0, 1, 2, 3]
    assert is_simplicial_elimination_scheme(Graph.path(4), order[::-1])


def test_lexbfs_is_lexicographic():
    # Vertex 3 is seen by 0 and 1, vertex 2 only by 1: 3 must precede 2.
    g = Graph(5, [(0, 1), (0, 3), (1, 3), (1, 2), (2, 4)])
    assert lexbfs(g, 0) == [0, 1, 3, 2, 4]


def test_mcs_examples():
    assert mcs(Graph.complete(3), 0) == [0, 1, 2]
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert mcs(star, 0) == [0, 1, 2, 3]


def test_searches_reject_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    for search in (lexbfs, mcs):
        with pytest.raises(DisconnectedGraphError):
            search(g, 0)
    with pytest.raises(DisconnectedGraphError):
        is_chordal(g)


def test_searches_on_trivial_graphs():
    assert lexbfs(Graph(0)) == [] and mcs(Graph(0)) == []
    assert lexbfs(Graph(1)) == [0] and mcs(Graph(1)) == [0]


def test_reversed_searches_are_schemes_on_all_small_chordal_graphs():
    for g in chordal_corpus(8):
        simp = simplicial_vertices(g)
        for start in range(g.n):
            lb = lexbfs(g, start)
            assert sorted(lb) == list(range(g.n))
            assert is_simplicial_elimination_scheme(g, lb[::-1])
            assert lb[-1] in simp
            mc = mcs(g, start)
            assert is_simplicial_elimination_scheme(g, mc[::-1])


def test_lexbfs_plus_prefers_late_vertices():
    g = Graph.path(5)
    first = lexbfs(g, 2)
    second = lexbfs_plus(g, first)
    assert second[0] == first[-1]
    assert sorted(second) == list(range(5))


def test_scheme_on_complete_graph():
    k4 = Graph.complete(4)
    for order in itertools.permutations(range(4)):
        assert is_simplicial_elimination_scheme(k4, order)


def test_cycle_has_no_scheme():
    c4 = Graph.cycle(4)
    results = [is_simplicial_elimination_scheme(c4, p) for p in itertools.permutations(range(4))]
    assert len(results) == 24 and not any(results)


def test_scheme_failure_witness():
    c4 = Graph.cycle(4)
    check = is_simplicial_elimination_scheme(c4, [0, 1, 2, 3])
    assert not check and check.position == 0 and check.vertex == 0
    a, b = check.pair
    assert {a, b} == {1, 3} and not c4.has_edge(a, b)


def test_scheme_example_on_path():
    assert is_simplicial_elimination_scheme(Graph.path(4), (0, 3, 1, 2))


def test_scheme_rejects_non_permutation():
    with pytest.raises(GraphError):
        is_simplicial_elimination_scheme(Graph.path(3), [0, 0, 1])
    with pytest.raises(GraphError):
        is_simplicial_elimination_scheme(Graph.path(3), [0, 1])


def test_is_chordal_examples():
    cert = is_chordal(Graph.cycle(4))
    assert not cert.chordal and cert.hole == (0, 1, 2, 3)
    assert is_chordal(SUN3).chordal
    c5_chord = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    cert = is_chordal(c5_chord)
    assert not cert.chordal and len(cert.hole) == 4
    assert frozenset(cert.hole) in brute_holes(c5_chord)


def test_certificates_verify_on_all_labeled_graphs():
    for g in enumerate_graphs(CorpusSpec(n_max=6)):
        cert = is_chordal(g)
        assert cert.verify(g)
        assert cert.chordal == is_chordal_brute(masks(g))
        again = ChordalityCertificate.from_json(cert.to_json(g), g)
        assert again == cert


def test_find_hole_only_on_non_chordal():
    for g in enumerate_graphs(CorpusSpec(n_max=6, labeled=False)):
        hole = find_hole(g)
        assert (hole is None) == is_chordal_brute(masks(g))
        if hole is not None:
            assert is_hole(g, hole)


def test_perfect_elimination_ordering_raises_with_hole():
    with pytest.raises(NotChordalError) as info:
        perfect_elimination_ordering(Graph.cycle(6))
    assert is_hole(Graph.cycle(6), info.value.hole)


def test_simplicial_vertices():
    assert simplicial_vertices(Graph.path(4)) == {0, 3}
    assert simplicial_vertices(Graph.complete(5)) == set(range(5))
    assert simplicial_vertices(SUN3) == {3, 4, 5}


def test_canonical_cycle():
    assert canonical_cycle([2, 3, 0, 1]) == (0, 1, 2, 3)
    assert canonical_cycle([3, 2, 1, 0]) == (0, 1, 2, 3)
    assert not is_hole(Graph.complete(4), [0, 1, 2, 3])
    assert not is_hole(Graph.cycle(4), [0, 1, 2])
