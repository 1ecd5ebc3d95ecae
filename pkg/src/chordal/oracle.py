"""Brute-force ground truth for small graphs.

Everything here works on adjacency bitmasks and imports nothing from the
search / clique-tree / min-max modules, so agreement between the two sides
is evidence rather than tautology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .graph import Graph, GraphError, generate_random_chordal
from .structures import CliqueTree

LABELED_MAX_N = 8
UNLABELED_MAX_N = 9
TREE_BUDGET = 100_000


class OracleBudgetError(GraphError):
    pass


# --- bitmask helpers ------------------------------------------------------


def masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.nbrs[v]) for v in range(g.n)]


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# Bit positions of every mask below 2**10, so small-graph loops skip the
# generator machinery.
_SMALL = 1 << 10
_BITS: list[tuple[int, ...]] = [()]
for _x in range(1, _SMALL):
    _low = _x & -_x
    _BITS.append((_low.bit_length() - 1,) + _BITS[_x ^ _low])


def bits(x: int) -> tuple[int, ...]:
    """Set bit positions of ``x`` in increasing order."""
    return _BITS[x] if x < _SMALL else tuple(_iter_bits(x))


def to_set(x: int) -> frozenset[int]:
    return frozenset(bits(x))


def to_mask(vs) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def mask_components(adj: list[int], alive: int) -> list[int]:
    comps = []
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            nxt = 0
            for v in _BITS[frontier] if frontier < _SMALL else _iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & alive & ~comp
            comp |= frontier
        comps.append(comp)
        alive &= ~comp
    return comps


def neighbourhood(adj: list[int], s: int) -> int:
    out = 0
    for v in _BITS[s] if s < _SMALL else _iter_bits(s):
        out |= adj[v]
    return out & ~s


def mask_is_clique(adj: list[int], s: int) -> bool:
    for v in _BITS[s] if s < _SMALL else _iter_bits(s):
        if s & ~adj[v] & ~(1 << v):
            return False
    return True


def graph_from_masks(adj: list[int]) -> Graph:
    return Graph._trusted([bits(a) for a in adj])


# --- corpora --------------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    """What graphs to stream.

    ``mode="exhaustive"`` walks every graph with ``n_min <= n <= n_max``
    vertices, either all labeled graphs or one representative per
    isomorphism class (``labeled=False``, chordal only beyond 7 vertices).
    ``mode="random"`` draws ``count`` random chordal graphs with vertex
    counts uniform in ``[n_min, n_max]`` from a seeded generator.
    """

    mode: str = "exhaustive"
    n_max: int = 5
    n_min: int = 1
    connected: bool = True
    chordal: bool = False
    labeled: bool = True
    count: int = 0
    density: float | None = None
    seed: int = 0

    def check_budget(self) -> None:
        if self.mode == "exhaustive":
            limit = LABELED_MAX_N if self.labeled else UNLABELED_MAX_N
            if self.n_max > limit:
                raise OracleBudgetError(f"exhaustive n_max {self.n_max} exceeds budget {limit}")
            if not self.labeled and not self.chordal and self.n_max > 7:
                raise OracleBudgetError("unlabeled non-chordal enumeration stops at 7 vertices")
        elif self.mode != "random":
            raise GraphError(f"unknown corpus mode {self.mode!r}")


def is_chordal_brute(adj: list[int]) -> bool:
    """Repeatedly delete any simplicial vertex; chordal iff nothing is left."""
    alive = (1 << len(adj)) - 1
    while alive:
        for v in bits(alive):
            if mask_is_clique(adj, adj[v] & alive):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True


def is_connected_mask(adj: list[int]) -> bool:
    return len(adj) <= 1 or len(mask_components(adj, (1 << len(adj)) - 1)) == 1


def labeled_adjacencies(n: int) -> Iterator[list[int]]:
    """Every labeled graph on n vertices, Gray-code order (one edge flips per step)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    adj = [0] * n
    yield list(adj)
    for k in range(1, 1 << len(pairs)):
        u, v = pairs[(k & -k).bit_length() - 1]
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        yield list(adj)


def _nx():
    import networkx as nx

    return nx


def _canonical_dedupe(candidates: list[list[int]]) -> list[list[int]]:
    nx = _nx()
    buckets: dict[str, list] = {}
    out = []
    for adj in candidates:
        h = nx.Graph()
        h.add_nodes_from(range(len(adj)))
        h.add_edges_from((u, v) for u in range(len(adj)) for v in bits(adj[u]) if u < v)
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=3) + f":{h.number_of_edges()}"
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        out.append(adj)
    return out


def _all_cliques(adj: list[int]) -> list[int]:
    """All non-empty cliques as bitmasks."""
    out = []

    def grow(clique: int, cand: int) -> None:
        for v in bits(cand):
            c = clique | (1 << v)
            out.append(c)
            grow(c, cand & adj[v] & ~((1 << (v + 1)) - 1))

    grow(0, (1 << len(adj)) - 1)
    return out


@lru_cache(maxsize=None)
def unlabeled_connected_chordal(n: int) -> tuple[tuple[int, ...], ...]:
    """One adjacency-mask tuple per isomorphism class of connected chordal graphs.

    Grown by attaching a simplicial vertex to every clique of every smaller
    representative, then deduplicated up to isomorphism.
    """
    if n < 1:
        return ()
    if n == 1:
        return ((0,),)
    candidates = []
    for base in unlabeled_connected_chordal(n - 1):
        for k in _all_cliques(list(base)):
            adj = list(base) + [k]
            for v in bits(k):
                adj[v] |= 1 << (n - 1)
            candidates.append(adj)
    return tuple(tuple(a) for a in _canonical_dedupe(candidates))


@lru_cache(maxsize=None)
def unlabeled_graphs(n: int) -> tuple[tuple[int, ...], ...]:
    """One representative per isomorphism class, all graphs on n <= 7 vertices."""
    nx = _nx()
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != n:
            continue
        adj = [0] * n
        for u, v in h.edges():
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        out.append(tuple(adj))
    return tuple(out)


def enumerate_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    spec.check_budget()
    if spec.mode == "random":
        import random

        rng = random.Random(spec.seed)
        for i in range(spec.count):
            n = rng.randint(spec.n_min, spec.n_max)
            density = spec.density if spec.density is not None else rng.uniform(0.2, 0.9)
            yield generate_random_chordal(n, density, rng.randrange(2**31))
        return
    for n in range(max(spec.n_min, 1), spec.n_max + 1):
        if spec.labeled:
            source = labeled_adjacencies(n)
        elif spec.chordal and spec.connected:
            source = unlabeled_connected_chordal(n)
        else:
            source = unlabeled_graphs(n)
        for adj in source:
            adj = list(adj)
            if spec.connected and not is_connected_mask(adj):
                continue
            if spec.chordal and not is_chordal_brute(adj):
                continue
            yield graph_from_masks(adj)


# --- separators and cliques -----------------------------------------------


def maximal_clique_masks(adj: list[int]) -> list[int]:
    """Bron-Kerbosch with pivoting."""
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot, best = -1, -1
        for u in bits(p | x):
            c = (adj[u] & p).bit_count()
            if c > best:
                pivot, best = u, c
        for v in bits(p & ~adj[pivot]):
            bk(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if adj:
        bk(0, (1 << len(adj)) - 1, 0)
    return out


def brute_maximal_cliques(g: Graph) -> list[frozenset[int]]:
    return sorted((to_set(c) for c in maximal_clique_masks(masks(g))), key=sorted)


def _is_min_sep_mask(adj: list[int], s: int, full: int) -> bool:
    n_full = 0
    for comp in mask_components(adj, full & ~s):
        if neighbourhood(adj, comp) == s:
            n_full += 1
            if n_full == 2:
                return True
    return False


def _close_candidates(adj: list[int]) -> Iterator[int]:
    """Distinct candidates N(C) reached by the closure, in discovery order."""
    n = len(adj)
    full = (1 << n) - 1
    found: set[int] = set()
    todo = []
    for v in range(n):
        closed = adj[v] | (1 << v)
        for comp in mask_components(adj, full & ~closed):
            s = neighbourhood(adj, comp)
            if s not in found:
                found.add(s)
                todo.append(s)
                yield s
    while todo:
        s = todo.pop()
        for x in bits(s):
            for comp in mask_components(adj, full & ~(s | adj[x])):
                t = neighbourhood(adj, comp)
                if t and t not in found:
                    found.add(t)
                    todo.append(t)
                    yield t


def _separator_stream(adj: list[int], mode: str) -> Iterator[int]:
    full = (1 << len(adj)) - 1
    if mode == "subset":
        if len(adj) > 12:
            raise OracleBudgetError("subset mode limited to 12 vertices")
        candidates: Iterable[int] = range(1 << len(adj))
    elif mode == "close":
        candidates = _close_candidates(adj)
    else:
        raise GraphError(f"unknown mode {mode!r}")
    return (s for s in candidates if _is_min_sep_mask(adj, s, full))


def minimal_separator_masks(adj: list[int], mode: str = "subset") -> set[int]:
    """All minimal separators as masks.

    ``subset``: test every vertex subset for two full components (n <= 12).
    ``close``: grow from the separators N(C), C a component of g - N[v],
    closing under S -> N(C) for C a component of g - (S + N(x)), x in S.
    Either way each candidate is kept only if it has two full components.
    """
    return set(_separator_stream(adj, mode))


def brute_minimal_separators(g: Graph, mode: str = "subset") -> set[frozenset[int]]:
    return {to_set(s) for s in minimal_separator_masks(masks(g), mode)}


def separators_are_cliques_masks(adj: list[int], mode: str = "close") -> bool:
    # Stops at the first non-clique separator.
    return all(mask_is_clique(adj, s) for s in _separator_stream(adj, mode))


def separators_are_cliques(g: Graph, mode: str = "close") -> bool:
    return separators_are_cliques_masks(masks(g), mode)


# --- maximum spanning trees of the clique intersection graph --------------


def _intersection_levels(cliques: list[frozenset[int]]) -> list[tuple[int, list[tuple[int, int]]]]:
    by_weight: dict[int, list[tuple[int, int]]] = {}
    for i, j in itertools.combinations(range(len(cliques)), 2):
        w = len(cliques[i] & cliques[j])
        if w:
            by_weight.setdefault(w, []).append((i, j))
    return sorted(by_weight.items(), reverse=True)


class _DSU:
    def __init__(self, k: int):
        self.parent = list(range(k))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _spanning_forests(edges: list[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """Index tuples of all maximal spanning forests of a multigraph, lazily."""
    index = {r: i for i, r in enumerate(sorted({x for e in edges for x in e}))}
    local = [(index[a], index[b]) for a, b in edges]
    probe = _DSU(len(index))
    needed = sum(probe.union(a, b) for a, b in local)

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i: int, parent: list[int], chosen: list[int]):
        if len(chosen) == needed:
            yield tuple(chosen)
            return
        if needed - len(chosen) > len(local) - i:
            return
        a, b = local[i]
        ra, rb = find(parent, a), find(parent, b)
        if ra != rb:
            nxt = parent[:]
            nxt[ra] = rb
            yield from rec(i + 1, nxt, chosen + [i])
        yield from rec(i + 1, parent, chosen)

    yield from rec(0, list(range(len(index))), [])


def max_clique_tree_levels(cliques: list[frozenset[int]]) -> list[tuple[int, list[tuple[int, int]], list]]:
    """Kruskal weight classes that matter, as ``(weight, cross pairs, contracted pairs)``.

    ``cross`` are the clique pairs of that weight joining different blocks of
    the heavier classes; ``contracted`` the same pairs as block pairs.  A
    maximum spanning tree uses, per class, one maximal spanning forest of
    ``contracted`` (parallel pairs stay distinct choices).
    """
    dsu = _DSU(len(cliques))
    levels = []
    for w, pairs in _intersection_levels(cliques):
        cross = [(i, j) for i, j in pairs if dsu.find(i) != dsu.find(j)]
        if not cross:
            continue
        levels.append((w, cross, [(dsu.find(i), dsu.find(j)) for i, j in cross]))
        for i, j in cross:
            dsu.union(i, j)
    return levels


def _level_forests(level) -> Iterator[list[tuple[int, int]]]:
    _, cross, contracted = level
    for f in _spanning_forests(contracted):
        yield [cross[i] for i in f]


def count_max_clique_trees(g: Graph, limit: int = TREE_BUDGET) -> int:
    cliques = brute_maximal_cliques(g)
    count = 1
    for level in max_clique_tree_levels(cliques):
        here = 0
        for _ in _level_forests(level):
            here += 1
            if here * count > limit:
                raise OracleBudgetError(f"more than {limit} maximum spanning trees")
        count *= here
    return count


def is_subtree_tree(cliques: list[frozenset[int]], edges: list[tuple[int, int]], n: int) -> bool:
    """Spanning tree on the cliques where each vertex's cliques are connected."""
    k = len(cliques)
    if len(edges) != k - 1:
        return False
    dsu = _DSU(k)
    if not all(dsu.union(i, j) for i, j in edges):
        return False
    node_count = [0] * n
    edge_count = [0] * n
    for c in cliques:
        for v in c:
            node_count[v] += 1
    for i, j in edges:
        for v in cliques[i] & cliques[j]:
            edge_count[v] += 1
    return all(edge_count[v] == node_count[v] - 1 for v in range(n))


def enumerate_max_clique_trees(g: Graph, limit: int = TREE_BUDGET) -> Iterator[CliqueTree]:
    """Every maximum-weight spanning tree of the clique intersection graph.

    Kruskal weight classes are independent: a maximum spanning tree picks, per
    class, one maximal spanning forest of that class over the blocks merged by
    heavier classes.  Trees stream out as the product of those choices; each
    is checked for the subtree property before it is yielded.  The budget
    counts trees actually produced, so a consumer that stops early may use
    graphs with more than ``limit`` trees.
    """
    if g.n == 0:
        return
    cliques = brute_maximal_cliques(g)
    if len(cliques) > 9:
        raise OracleBudgetError("tree enumeration limited to 9 maximal cliques")
    levels = max_clique_tree_levels(cliques)

    def product(i: int, acc: list[tuple[int, int]]):
        if i == len(levels):
            yield acc
            return
        for forest in _level_forests(levels[i]):
            yield from product(i + 1, acc + forest)

    for count, edges in enumerate(product(0, [])):
        if count == limit:
            raise OracleBudgetError(f"more than {limit} maximum spanning trees")
        if not is_subtree_tree(cliques, edges, g.n):
            raise AssertionError(f"maximum spanning tree {edges} is not a clique tree")
        yield CliqueTree(tuple(cliques), tuple((i, j, cliques[i] & cliques[j]) for i, j in edges))


def clique_tree_exists_masks(adj: list[int]) -> bool:
    """Some spanning tree of the maximal cliques has the subtree property.

    A spanning tree weighs at most sum(|C|) - n with equality exactly for
    subtree-property trees, so one Kruskal run decides existence.
    """
    cliques = maximal_clique_masks(adj)
    k = len(cliques)
    by_weight: dict[int, list[tuple[int, int]]] = {}
    for i in range(k):
        for j in range(i + 1, k):
            w = (cliques[i] & cliques[j]).bit_count()
            if w:
                by_weight.setdefault(w, []).append((i, j))
    parent = list(range(k))
    weight = joined = 0
    for w in sorted(by_weight, reverse=True):
        for i, j in by_weight[w]:
            while parent[i] != i:
                i = parent[i]
            while parent[j] != j:
                j = parent[j]
            if i != j:
                parent[i] = j
                weight += w
                joined += 1
    total = sum(c.bit_count() for c in cliques)
    return joined == k - 1 and weight == total - len(adj)


def clique_tree_exists(g: Graph) -> bool:
    return clique_tree_exists_masks(masks(g))


def max_spanning_union(g: Graph) -> set[frozenset]:
    """Clique pairs lying on some maximum spanning tree (cycle-rule test)."""
    cliques = brute_maximal_cliques(g)
    dsu = _DSU(len(cliques))
    out = set()
    for w, pairs in _intersection_levels(cliques):
        for i, j in pairs:
            if dsu.find(i) != dsu.find(j):
                out.add(frozenset((cliques[i], cliques[j])))
        for i, j in pairs:
            dsu.union(i, j)
    return out


# --- min-max / min-min questions by enumeration ---------------------------


def inclusion_extremes(seps: set[frozenset[int]]) -> tuple[set, set]:
    """(maximal, minimal) elements under inclusion."""
    maxi = {s for s in seps if not any(s < t for t in seps)}
    mini = {s for s in seps if not any(t < s for t in seps)}
    return maxi, mini


def pending_edges(t: CliqueTree) -> list[tuple[int, frozenset[int]]]:
    """(leaf node, label) for every edge incident to a leaf."""
    deg = [0] * len(t.nodes)
    for i, j, _ in t.edges:
        deg[i] += 1
        deg[j] += 1
    out = []
    for i, j, s in t.edges:
        if deg[i] == 1:
            out.append((i, s))
        if deg[j] == 1:
            out.append((j, s))
    return out


def brute_minmax_simplicial(g: Graph, limit: int = TREE_BUDGET) -> set[int]:
    """Vertices of C - S over all trees with a leaf C pending on a min-max S."""
    seps = brute_minimal_separators(g, "close")
    if not seps:
        return set(range(g.n))
    maxi, _ = inclusion_extremes(seps)
    out: set[int] = set()
    for t in enumerate_max_clique_trees(g, limit):
        for leaf, s in pending_edges(t):
            if s in maxi:
                out |= t.nodes[leaf] - s
    return out


def has_minmin_pending_tree(g: Graph, limit: int = TREE_BUDGET) -> tuple[bool, int]:
    """Whether some tree has a pending edge on a min-min separator.

    Returns the answer and how many trees were inspected (stops at the first hit).
    """
    seps = brute_minimal_separators(g, "close")
    _, mini = inclusion_extremes(seps)
    seen = 0
    for t in enumerate_max_clique_trees(g, limit):
        seen += 1
        if any(s in mini for _, s in pending_edges(t)):
            return True, seen
    return False, seen


# --- reversible orderings -------------------------------------------------


def _placeable(adj: list[int], placed: int, v: int) -> bool:
    nv = adj[v]
    return mask_is_clique(adj, nv & placed) and mask_is_clique(adj, nv & ~placed)


def brute_reversible_orderings(g: Graph) -> list[tuple[int, ...]]:
    """All orderings simplicial in both directions (n <= 9).

    Backtracks over prefixes: position i is fine forwards iff the neighbours
    after it form a clique, backwards iff those before it do, and both only
    depend on the set already placed.
    """
    if g.n > 9:
        raise OracleBudgetError("reversible-ordering search limited to 9 vertices")
    adj = masks(g)
    out: list[tuple[int, ...]] = []
    order: list[int] = []

    def rec(placed: int) -> None:
        if len(order) == g.n:
            out.append(tuple(order))
            return
        for v in range(g.n):
            if not placed >> v & 1 and _placeable(adj, placed, v):
                order.append(v)
                rec(placed | (1 << v))
                order.pop()

    rec(0)
    return out


def has_reversible_ordering(g: Graph) -> bool:
    """Existence via reachability over placed-vertex subsets."""
    adj = masks(g)
    full = (1 << g.n) - 1
    reach = {0}
    for _ in range(g.n):
        nxt = set()
        for placed in reach:
            for v in bits(full & ~placed):
                if _placeable(adj, placed, v):
                    nxt.add(placed | (1 << v))
        if not nxt:
            return False
        reach = nxt
    return True


def is_reversible_brute(g: Graph, order) -> bool:
    adj = masks(g)
    placed = 0
    for v in order:
        if not _placeable(adj, placed, v):
            return False
        placed |= 1 << v
    return True


# --- small-pattern checks -------------------------------------------------


def brute_holes(g: Graph) -> list[frozenset[int]]:
    """Vertex sets inducing a chordless cycle of length >= 4."""
    adj = masks(g)
    out = []
    for s in range(1 << g.n):
        k = s.bit_count()
        if k < 4:
            continue
        if all((adj[v] & s).bit_count() == 2 for v in bits(s)) and len(mask_components(adj, s)) == 1:
            out.append(to_set(s))
    return out


def induces_pattern(g: Graph, vertices, pattern: Graph) -> bool:
    """Whether ``vertices`` induce a copy of ``pattern`` (permutation search)."""
    vs = list(vertices)
    if len(vs) != pattern.n or len(set(vs)) != len(vs):
        return False
    for perm in itertools.permutations(vs):
        if all(
            g.has_edge(perm[i], perm[j]) == pattern.has_edge(i, j)
            for i in range(pattern.n)
            for j in range(i + 1, pattern.n)
        ):
            return True
    return False
