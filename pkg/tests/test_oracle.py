import ast
import pathlib

import pytest

import chordal.oracle as oracle
from chordal.graph import Graph
from chordal.oracle import (
    CorpusSpec,
    OracleBudgetError,
    bits,
    brute_maximal_cliques,
    brute_minimal_separators,
    brute_reversible_orderings,
    count_max_clique_trees,
    enumerate_graphs,
    enumerate_max_clique_trees,
    has_reversible_ordering,
    is_reversible_brute,
    labeled_adjacencies,
    unlabeled_connected_chordal,
    unlabeled_graphs,
)

from conftest import labeled, vs


def test_oracle_imports_no_primary_algorithms():
    tree = ast.parse(pathlib.Path(oracle.__file__).read_text())
    local = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom) and node.level:
            local.add(node.module)
    assert local <= {"graph", "structures"}, local


def test_exhaustive_counts():
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(n_min=3, n_max=3))) == 4
    assert sum(1 for _ in enumerate_graphs(CorpusSpec(n_min=2, n_max=2))) == 1
    four = list(enumerate_graphs(CorpusSpec(n_min=4, n_max=4)))
    chordal4 = list(enumerate_graphs(CorpusSpec(n_min=4, n_max=4, chordal=True)))
    assert len(four) == 38 and len(chordal4) == 35
    assert not any(g.m == 4 and all(g.degree(v) == 2 for v in range(4)) for g in chordal4)


def test_labeled_enumeration_is_complete():
    seen = {tuple(a) for a in labeled_adjacencies(4)}
    assert len(seen) == 2 ** 6


def test_unlabeled_counts():
    assert [len(unlabeled_connected_chordal(n)) for n in range(1, 8)] == [1, 1, 2, 5, 15, 58, 272]
    connected = [sum(1 for _ in enumerate_graphs(CorpusSpec(n_min=n, n_max=n, labeled=False)))
                 for n in range(1, 7)]
    assert connected == [1, 1, 2, 6, 21, 112]
    assert len(unlabeled_graphs(4)) == 11


def test_budget_errors():
    with pytest.raises(OracleBudgetError):
        list(enumerate_graphs(CorpusSpec(n_max=9)))
    with pytest.raises(OracleBudgetError):
        list(enumerate_graphs(CorpusSpec(n_max=10, labeled=False, chordal=True)))
    star = Graph(9, [(0, i) for i in range(1, 9)])
    with pytest.raises(OracleBudgetError):
        count_max_clique_trees(star)
    with pytest.raises(OracleBudgetError):
        sum(1 for _ in enumerate_max_clique_trees(star))
    with pytest.raises(OracleBudgetError):
        brute_minimal_separators(Graph.path(13), "subset")


def test_random_corpus_is_seeded():
    spec = CorpusSpec(mode="random", count=5, n_min=5, n_max=9, seed=4)
    assert list(enumerate_graphs(spec)) == list(enumerate_graphs(spec))


def test_tree_enumeration_examples(g1, three_triangles):
    assert len(list(enumerate_max_clique_trees(g1))) == 1
    trees = list(enumerate_max_clique_trees(three_triangles))
    assert len(trees) == 3 and len({t.edge_key_set() for t in trees}) == 3
    k4 = list(enumerate_max_clique_trees(Graph.complete(4)))
    assert len(k4) == 1 and k4[0].edges == ()


def test_star_tree_count():
    assert count_max_clique_trees(Graph(7, [(0, i) for i in range(1, 7)])) == 6 ** 4


def test_separator_examples(g1):
    assert brute_minimal_separators(Graph.path(4)) == {frozenset({1}), frozenset({2})}
    assert brute_minimal_separators(g1) == {vs(g1, "cd"), vs(g1, "e")}
    assert brute_minimal_separators(Graph.complete(5)) == set()


def test_separator_modes_agree():
    for g in enumerate_graphs(CorpusSpec(n_max=7, labeled=False)):
        assert brute_minimal_separators(g, "subset") == brute_minimal_separators(g, "close")


def test_maximal_cliques_bron_kerbosch():
    assert brute_maximal_cliques(Graph.cycle(4)) == [frozenset(p) for p in ({0, 1}, {0, 3}, {1, 2}, {2, 3})]


def test_reversible_orderings_examples(bull, claw):
    assert sorted(brute_reversible_orderings(bull)) == sorted(
        [tuple(bull.vertex(x) for x in "abdce"), tuple(bull.vertex(x) for x in "ecdba")]
    )
    assert brute_reversible_orderings(claw) == []
    assert len(brute_reversible_orderings(Graph.complete(3))) == 6
    assert is_reversible_brute(Graph.path(3), (0, 1, 2))
    assert not is_reversible_brute(Graph.path(3), (1, 0, 2))


def test_reversible_existence_matches_listing():
    for g in enumerate_graphs(CorpusSpec(n_max=6, labeled=False)):
        assert has_reversible_ordering(g) == bool(brute_reversible_orderings(g))


def test_bits_helper():
    assert bits(0) == ()
    assert bits(0b1011) == (0, 1, 3)
    assert bits(1 << 40 | 1) == (0, 40)


def test_labeled_helper_in_conftest():
    g = labeled("x-y y-z")
    assert g.m == 2 and g.label(0) == "x"
