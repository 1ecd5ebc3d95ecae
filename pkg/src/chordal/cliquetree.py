"""Maximal cliques, clique trees and the reduced clique graph of a chordal graph."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, components, require_connected
from .search import NotChordalError, is_chordal, lexbfs, perfect_elimination_ordering
from .structures import CliqueTree, ReducedCliqueGraph


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Maximal cliques from a perfect elimination ordering.

    ``{v} + later(v)`` is maximal unless some vertex u with parent v has
    exactly one more later neighbour, in which case it is contained in u's set.
    """
    order = perfect_elimination_ordering(g)
    if not order:
        return []
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    later = [[w for w in g.nbrs[v] if pos[w] > pos[v]] for v in range(g.n)]
    absorbed = [False] * g.n
    for u in order:
        if later[u]:
            p = min(later[u], key=pos.__getitem__)
            if len(later[u]) == len(later[p]) + 1:
                absorbed[p] = True
    return [frozenset([v, *later[v]]) for v in order if not absorbed[v]]


def build_clique_tree(g: Graph) -> CliqueTree:
    """A maximal clique tree, built in one sweep over the LexBFS visit order.

    Each vertex either extends the clique its latest-visited neighbour was
    placed in (when its visited neighbourhood is that whole clique) or opens
    a new clique attached there through its visited neighbourhood.  The same
    sweep runs the parent test of the elimination-scheme check, so a
    non-chordal input is caught without a separate pass.
    """
    visit = lexbfs(g, 0)
    n = g.n
    adj = g.adj
    pos = [0] * n
    for i, v in enumerate(visit):
        pos[v] = i
    seen = [False] * n
    home = [-1] * n
    nodes: list[list[int]] = []
    edges: list[tuple[int, int, frozenset[int]]] = []
    for v in visit:
        earlier = [w for w in g.nbrs[v] if seen[w]]
        seen[v] = True
        if not earlier:
            home[v] = len(nodes)
            nodes.append([v])
            continue
        u = max(earlier, key=pos.__getitem__)
        if len(adj[u].intersection(earlier)) != len(earlier) - 1:
            raise NotChordalError(is_chordal(g).hole)
        h = home[u]
        if len(nodes[h]) == len(earlier):
            nodes[h].append(v)
            home[v] = h
        else:
            home[v] = len(nodes)
            nodes.append(earlier + [v])
            edges.append((h, home[v], frozenset(earlier)))
    return CliqueTree(tuple(frozenset(c) for c in nodes), tuple(edges))


def separator_multiset(t: CliqueTree) -> Counter:
    return t.separator_multiset()


def reduced_clique_graph(g: Graph) -> ReducedCliqueGraph:
    """Cliques joined when their intersection separates their private parts.

    One representative per side suffices: each private part lies inside a
    single component of ``g - S``, which is asserted while testing.
    """
    cliques = maximal_cliques(g)
    containing: list[list[int]] = [[] for _ in range(g.n)]
    for i, c in enumerate(cliques):
        for v in c:
            containing[v].append(i)
    pairs = set()
    for owners in containing:
        pairs.update(combinations(owners, 2))
    comp_cache: dict[frozenset[int], list[int]] = {}
    edges = []
    for i, j in sorted(pairs):
        s = cliques[i] & cliques[j]
        comp = comp_cache.get(s)
        if comp is None:
            comp = [-1] * g.n
            for k, part in enumerate(components(g, s)):
                for x in part:
                    comp[x] = k
            comp_cache[s] = comp
        side_i = {comp[x] for x in cliques[i] - s}
        side_j = {comp[y] for y in cliques[j] - s}
        assert len(side_i) == 1 and len(side_j) == 1
        if side_i != side_j:
            edges.append((i, j, s))
    return ReducedCliqueGraph(tuple(cliques), tuple(edges))


@dataclass(frozen=True)
class TreeReport:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_clique_tree(g: Graph, t: CliqueTree) -> TreeReport:
    """Check every clique-tree invariant; report the first one violated.

    The weight test uses the bound that a spanning tree on the maximal cliques
    weighs at most sum(|C|) - n, reached exactly by clique trees.
    """
    require_connected(g)
    if not is_chordal(g):
        return TreeReport(False, "graph is not chordal")
    cliques = maximal_cliques(g)
    k = len(t.nodes)
    if len(set(t.nodes)) != k or set(t.nodes) != set(cliques):
        return TreeReport(False, "nodes are not exactly the maximal cliques")
    if len(t.edges) != k - 1:
        return TreeReport(False, f"expected {k - 1} edges, found {len(t.edges)}")
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, s in t.edges:
        if not (0 <= i < k and 0 <= j < k) or i == j:
            return TreeReport(False, f"bad edge endpoints ({i}, {j})")
        if s != t.nodes[i] & t.nodes[j]:
            return TreeReport(False, f"label of edge ({i}, {j}) is not the clique intersection")
        ri, rj = find(i), find(j)
        if ri == rj:
            return TreeReport(False, f"edge ({i}, {j}) closes a cycle")
        parent[ri] = rj
    node_count = Counter(v for c in t.nodes for v in c)
    edge_count = Counter(v for _, _, s in t.edges for v in s)
    for v in range(g.n):
        if edge_count[v] != node_count[v] - 1:
            return TreeReport(False, f"cliques containing vertex {v} do not induce a subtree")
    bound = sum(len(c) for c in cliques) - g.n
    if t.weight != bound:
        return TreeReport(False, f"weight {t.weight} is not the maximum {bound}")
    return TreeReport(True)
