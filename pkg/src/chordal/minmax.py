"""Separator containment, pending min-max clique trees and derived schemes.

Terminology: a *min-max* separator is a minimal separator that is maximal
under inclusion among all minimal separators; a *min-min* one is minimal.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .cliquetree import build_clique_tree
from .graph import Graph, GraphError, components
from .search import lexbfs, mcs
from .structures import CliqueTree, ReducedCliqueGraph

log = logging.getLogger(__name__)

_MANY = -1
# Nodes up to this degree compare their edge labels pairwise.
_DIRECT_DEGREE = 8


class NotApplicable(GraphError):
    """A transformation whose precondition does not hold (nothing to do)."""


# --- poset ----------------------------------------------------------------


def _sep_key(s: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


@dataclass(frozen=True)
class SeparatorPoset:
    """Distinct minimal separators ordered by inclusion.

    ``separators`` are sorted by size then by sorted vertex ids; ``hasse``
    holds index pairs ``(i, j)`` with ``separators[i]`` a cover of
    ``separators[j]`` from below.
    """

    separators: tuple[frozenset[int], ...]
    multiplicity: tuple[int, ...]
    hasse: tuple[tuple[int, int], ...]
    min_max: frozenset[int]
    min_min: frozenset[int]

    def index(self, s: Iterable[int]) -> int:
        return self.separators.index(frozenset(s))

    def is_min_max(self, s: Iterable[int]) -> bool:
        return self.index(s) in self.min_max

    def is_min_min(self, s: Iterable[int]) -> bool:
        return self.index(s) in self.min_min

    def less(self, s: Iterable[int], t: Iterable[int]) -> bool:
        return frozenset(s) < frozenset(t)

    def to_json(self, g: Graph) -> dict[str, Any]:
        return {
            "separators": [
                {
                    "vertices": [g.label(v) for v in _sep_key(s)],
                    "multiplicity": self.multiplicity[i],
                    "min_max": i in self.min_max,
                    "min_min": i in self.min_min,
                }
                for i, s in enumerate(self.separators)
            ],
            "hasse": [list(e) for e in self.hasse],
        }


def poset_from_multiset(counts: Counter) -> SeparatorPoset:
    seps = sorted(counts, key=lambda s: (len(s), _sep_key(s)))
    below = {j: [i for i in range(len(seps)) if seps[i] < seps[j]] for j in range(len(seps))}
    hasse = []
    for j, lower in below.items():
        for i in lower:
            if not any(seps[i] < seps[h] for h in lower if h != i):
                hasse.append((i, j))
    has_above = {i for i, _ in hasse}
    has_below = {j for _, j in hasse}
    return SeparatorPoset(
        separators=tuple(seps),
        multiplicity=tuple(counts[s] for s in seps),
        hasse=tuple(sorted(hasse)),
        min_max=frozenset(i for i in range(len(seps)) if i not in has_above),
        min_min=frozenset(i for i in range(len(seps)) if i not in has_below),
    )


def separator_poset(g: Graph) -> SeparatorPoset:
    return poset_from_multiset(build_clique_tree(g).separator_multiset())


def minmax_labels(t: CliqueTree) -> set[frozenset[int]]:
    """Inclusion-maximal edge labels, found locally on the tree.

    A label S has a proper superset among the labels iff some S-labelled
    edge shares an endpoint with an edge whose label properly contains S:
    the cliques containing S form a subtree, so walking from an S edge
    towards a larger one meets such an adjacent pair first.
    """
    adjacency = t.adjacency()
    dominated: set[frozenset[int]] = set()
    for incident in adjacency:
        d = len(incident)
        if d < 2:
            continue
        if d <= _DIRECT_DEGREE:
            labels = [s for _, s in incident]
            for x in range(d):
                sx = labels[x]
                for y in range(x + 1, d):
                    sy = labels[y]
                    if sx < sy:
                        dominated.add(sx)
                    elif sy < sx:
                        dominated.add(sy)
            continue
        by_vertex: dict[int, list[int]] = {}
        for idx, (_, s) in enumerate(incident):
            for v in s:
                by_vertex.setdefault(v, []).append(idx)
        for idx, (_, s) in enumerate(incident):
            if s in dominated:
                continue
            rarest = min(s, key=lambda v: len(by_vertex[v]))
            size = len(s)
            for c in by_vertex[rarest]:
                other = incident[c][1]
                if len(other) > size and s <= other:
                    dominated.add(s)
                    break
    return {s for _, _, s in t.edges if s not in dominated}


# --- chain reduction ------------------------------------------------------


def _tree_structure_ok(t: CliqueTree) -> str | None:
    """Graph-free clique-tree checks: tree shape, labels, subtree property."""
    k = len(t.nodes)
    if len(t.edges) != k - 1:
        return "wrong edge count"
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, s in t.edges:
        if s != t.nodes[i] & t.nodes[j]:
            return f"label of ({i}, {j}) is not the intersection"
        ri, rj = find(i), find(j)
        if ri == rj:
            return "cycle"
        parent[ri] = rj
    nodes = Counter(v for c in t.nodes for v in c)
    edges = Counter(v for _, _, s in t.edges for v in s)
    if any(edges[v] != nodes[v] - 1 for v in nodes):
        return "subtree property violated"
    return None


def _side(t: CliqueTree, a: int, b: int) -> list[tuple[int, int]]:
    """(parent, node) pairs of the component of ``a`` in ``t - ab``, preorder."""
    adjacency = t.adjacency()
    out = []
    stack = [(b, a)]
    while stack:
        p, x = stack.pop()
        out.append((p, x))
        for y, _ in reversed(adjacency[x]):
            if y != p:
                stack.append((x, y))
    return out


def chain_reduction(
    t: CliqueTree,
    ab: tuple[int, int],
    side: int,
    xy: tuple[int, int] | None = None,
    rcg: ReducedCliqueGraph | None = None,
) -> CliqueTree:
    """Exchange an edge ``xy`` of the ``side`` subtree for ``by``.

    ``ab`` is a tree edge and ``side`` one of its endpoints, naming the
    subtree ``T_side`` left after deleting ``ab``.  ``xy`` is an edge of that
    subtree with ``y`` the endpoint farther from ``ab``; its label must be
    contained in the label of ``ab``.  The clique ``y`` (with whatever hangs
    below it) is re-attached to the other endpoint ``b``; the label multiset
    and hence the weight are unchanged.  Without ``xy`` the first pending
    edge of ``T_side`` (preorder) whose label qualifies is used.
    """
    a = side
    b = ab[1] if ab[0] == a else ab[0]
    if a not in ab:
        raise GraphError("side must be an endpoint of ab")
    labels = {frozenset((i, j)): s for i, j, s in t.edges}
    s_ab = labels.get(frozenset(ab))
    if s_ab is None:
        raise GraphError(f"{ab} is not a tree edge")
    order = _side(t, a, b)
    far = {x: p for p, x in order[1:]}
    if not far:
        raise NotApplicable("subtree is a single clique; ab is already pending")
    if xy is None:
        pending = [(p, x) for p, x in order[1:] if t.degree(x) == 1 and labels[frozenset((p, x))] <= s_ab]
        if not pending:
            raise NotApplicable("no pending edge below ab with label inside S(ab)")
        x, y = pending[0]
    else:
        x, y = xy
        if far.get(y) != x:
            if far.get(x) == y:
                x, y = y, x
            else:
                raise GraphError(f"{xy} is not an edge of the subtree")
    s_xy = labels[frozenset((x, y))]
    if not s_xy <= s_ab:
        raise GraphError("label of xy is not contained in the label of ab")
    edges = [e for e in t.edges if {e[0], e[1]} != {x, y}]
    new_label = t.nodes[b] & t.nodes[y]
    edges.append((b, y, new_label))
    out = CliqueTree(t.nodes, tuple(edges))
    if rcg is not None and frozenset((t.nodes[b], t.nodes[y])) not in rcg.edge_key_set():
        raise AssertionError("exchanged edge is missing from the reduced clique graph")
    problem = _tree_structure_ok(out)
    if problem is not None or out.weight != t.weight:
        raise AssertionError(f"chain reduction broke the clique tree: {problem or 'weight changed'}")
    return out


# --- pending min-max trees ------------------------------------------------


@dataclass(frozen=True)
class PendingTreeResult:
    """A clique tree with a leaf hanging on a min-max separator.

    ``pending_edge`` is ``(leaf, neighbour, separator)`` or None when the
    graph is a single clique.  ``transform_log`` lists the exchanges applied,
    each as ``((removed u, removed v), (added u, added v))``; ``traversals``
    counts tree-edge traversals made while searching.
    """

    tree: CliqueTree
    pending_edge: tuple[int, int, frozenset[int]] | None
    transform_log: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = ()
    traversals: int = 0

    @property
    def leaf_clique(self) -> frozenset[int] | None:
        return None if self.pending_edge is None else self.tree.nodes[self.pending_edge[0]]

    @property
    def separator(self) -> frozenset[int] | None:
        return None if self.pending_edge is None else self.pending_edge[2]

    def to_json(self, g: Graph) -> dict[str, Any]:
        data = self.tree.to_json(g)
        if self.pending_edge is None:
            data["pending_edge"] = None
        else:
            leaf, other, s = self.pending_edge
            data["pending_edge"] = {"leaf": leaf, "neighbour": other,
                                    "separator": [g.label(v) for v in _sep_key(s)]}
        data["transform_log"] = [[list(r), list(a)] for r, a in self.transform_log]
        data["traversals"] = self.traversals
        return data

    def to_dot(self, g: Graph) -> str:
        hl = None if self.pending_edge is None else self.pending_edge[:2]
        return self.tree.to_dot(g, highlight=hl)


def make_pending(t: CliqueTree) -> PendingTreeResult:
    """Transform ``t`` so that a leaf hangs on a min-max separator.

    Starts from the min-max edge with the lexicographically smallest label
    and looks, on either side, for a clique z whose edge towards that start is
    min-max while nothing below z carries a different min-max label.  Every
    other edge at z is then labelled inside z's edge label (otherwise a
    larger incomparable min-max label would sit below z), so those subtrees
    can be re-hung on z's neighbour, leaving z pending.
    """
    k = len(t.nodes)
    if k == 1:
        return PendingTreeResult(t, None)
    mm = minmax_labels(t)
    start = min((e for e in t.edges if e[2] in mm), key=lambda e: _sep_key(e[2]))
    adjacency = t.adjacency()

    def summarise(a: int, b: int):
        """Per node of T_a: parent, parent label and min-max labels strictly below."""
        parent = {a: b}
        plabel = {a: start[2]}
        order = [a]
        stack = [a]
        while stack:
            x = stack.pop()
            px = parent[x]
            for y, s in adjacency[x]:
                if y != px:
                    parent[y] = x
                    plabel[y] = s
                    order.append(y)
                    stack.append(y)
        below: dict[int, Any] = {}
        for x in reversed(order):
            acc = None
            px = parent[x]
            for y, s in adjacency[x]:
                if y == px:
                    continue
                for item in (s if s in mm else None, below[y]):
                    if item is None or acc == item:
                        continue
                    acc = item if acc is None else _MANY
            below[x] = acc
        return parent, plabel, order, below

    def qualifies(z, plabel, below) -> bool:
        label = plabel[z]
        return label in mm and below[z] in (None, label)

    i, j = start[0], start[1]
    parent, plabel, order, below = summarise(i, j)
    # Each pass crosses every edge of its side twice (down, then back up).
    traversals = 1 + 2 * (len(order) - 1)
    if qualifies(i, plabel, below):
        z = i
    else:
        parent_j, plabel_j, order_j, below_j = summarise(j, i)
        traversals += 2 * (len(order_j) - 1)
        if qualifies(j, plabel_j, below_j):
            z, parent, plabel = j, parent_j, plabel_j
        else:
            z = next(x for x in order if qualifies(x, plabel, below))
    up = parent[z]
    label = plabel[z]
    log_ = []
    edges = []
    for a, b, s in t.edges:
        if z in (a, b) and up not in (a, b):
            c = b if a == z else a
            if not s <= label:
                raise AssertionError("edge below a qualifying clique escapes its label")
            edges.append((up, c, s))
            log_.append(((z, c), (up, c)))
        else:
            edges.append((a, b, s))
    out = CliqueTree(t.nodes, tuple(edges))
    return PendingTreeResult(out, (z, up, label), tuple(log_), traversals)


def pending_minmax_tree(g: Graph) -> PendingTreeResult:
    """Clique tree of ``g`` with a pending edge on a min-max separator."""
    return make_pending(build_clique_tree(g))


# --- containment elimination scheme ---------------------------------------


@dataclass(frozen=True)
class PruneStep:
    vertices: tuple[int, ...]
    separator: frozenset[int] | None


def containment_elimination_steps(g: Graph) -> list[PruneStep]:
    """Repeatedly prune ``C - S`` for a leaf C pending on a min-max S.

    The remaining tree is a clique tree of the remaining graph, so each round
    reuses it instead of rebuilding from scratch.
    """
    tree = build_clique_tree(g)
    steps = []
    while len(tree.nodes) > 1:
        res = make_pending(tree)
        leaf, _, s = res.pending_edge
        steps.append(PruneStep(tuple(sorted(tree.nodes[leaf] - s)), s))
        keep = [x for x in range(len(tree.nodes)) if x != leaf]
        renum = {x: i for i, x in enumerate(keep)}
        tree = CliqueTree(
            tuple(tree.nodes[x] for x in keep),
            tuple((renum[a], renum[b], lab) for a, b, lab in res.tree.edges if leaf not in (a, b)),
        )
    if tree.nodes:
        steps.append(PruneStep(tuple(sorted(tree.nodes[0])), None))
    return steps


def containment_elimination_scheme(g: Graph) -> list[int]:
    return [v for step in containment_elimination_steps(g) for v in step.vertices]


# --- leaf attachments and min-max simplicial vertices ---------------------


def leaf_attachments(g: Graph, cliques: Sequence[frozenset[int]] | None = None
                     ) -> dict[frozenset[int], frozenset[int] | None]:
    """For each maximal clique C, the separator it can pend on, if any.

    C is a leaf of some clique tree exactly when the neighbourhoods of the
    components of ``g - C`` have a largest member S; it then pends on S.
    """
    if cliques is None:
        cliques = build_clique_tree(g).nodes
    out: dict[frozenset[int], frozenset[int] | None] = {}
    for c in cliques:
        nbhds = set()
        for comp in components(g, c):
            nbhds.add(frozenset(w for u in comp for w in g.adj[u] if w in c))
        if not nbhds:
            out[c] = None
            continue
        top = max(nbhds, key=len)
        out[c] = top if all(s <= top for s in nbhds) else None
    return out


def minmax_simplicial_vertices(g: Graph) -> set[int]:
    """Vertices in C - S for some clique tree with leaf C pending on min-max S."""
    tree = build_clique_tree(g)
    if len(tree.nodes) == 1:
        return set(range(g.n))
    mm = minmax_labels(tree)
    out: set[int] = set()
    for c, s in leaf_attachments(g, tree.nodes).items():
        if s is not None and s in mm:
            out |= c - s
    return out


def has_minmin_pending(g: Graph) -> bool:
    """Some clique tree has a pending edge labelled by a min-min separator."""
    tree = build_clique_tree(g)
    if len(tree.nodes) == 1:
        return False
    labels = set(tree.separator_multiset())
    minimal = {s for s in labels if not any(t < s for t in labels)}
    return any(s is not None and s in minimal for s in leaf_attachments(g, tree.nodes).values())


# --- counterexample search ------------------------------------------------

KINDS = ("no-minmax-terminal", "no-minmin-pending")


@dataclass(frozen=True)
class Counterexample:
    graph: Graph
    kind: str
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "graph": [[self.graph.label(u), self.graph.label(v)] for u, v in self.graph.edges()],
            "n": self.graph.n,
            "kind": self.kind,
            "evidence": self.evidence,
        }


def terminal_table(g: Graph) -> dict[int, tuple[int, int]]:
    """Start vertex -> (last LexBFS vertex, last MCS vertex)."""
    return {s: (lexbfs(g, s)[-1], mcs(g, s)[-1]) for s in range(g.n)}


def check_no_minmax_terminal(g: Graph) -> dict | None:
    if len(build_clique_tree(g).nodes) < 2:
        return None
    targets = minmax_simplicial_vertices(g)
    table = terminal_table(g)
    if any(end in targets for ends in table.values() for end in ends):
        return None
    return {
        "minmax_simplicial": sorted(targets),
        "terminals": {str(s): {"lexbfs": a, "mcs": b} for s, (a, b) in table.items()},
    }


def check_no_minmin_pending(g: Graph) -> dict | None:
    from .oracle import enumerate_max_clique_trees, inclusion_extremes, pending_edges

    tree = build_clique_tree(g)
    if len(set(tree.separator_multiset())) < 2 or has_minmin_pending(g):
        return None
    seps = set(tree.separator_multiset())
    _, mini = inclusion_extremes(seps)
    trees = []
    for t in enumerate_max_clique_trees(g):
        pend = pending_edges(t)
        if any(s in mini for _, s in pend):
            raise AssertionError("oracle found a min-min pending tree the classifier missed")
        trees.append({
            "edges": [[sorted(t.nodes[i]), sorted(t.nodes[j])] for i, j, _ in t.edges],
            "pending_labels": sorted(sorted(s) for _, s in pend),
        })
    return {"min_min": sorted(sorted(s) for s in mini), "trees": trees}


_CHECKS = {"no-minmax-terminal": check_no_minmax_terminal, "no-minmin-pending": check_no_minmin_pending}


def _run_chunk(args):
    kind, graphs = args
    check = _CHECKS[kind]
    out = []
    for g in graphs:
        evidence = check(g)
        if evidence is not None:
            out.append(Counterexample(g, kind, evidence))
    return out


def _canonical(ce: Counterexample):
    return (ce.graph.n, tuple(ce.graph.edges()))


def search_counterexamples(kind: str, graphs: Iterable[Graph], workers: int = 1,
                           chunk: int = 256) -> list[Counterexample]:
    """Graphs on which the named property fails, each with its evidence.

    ``no-minmin-pending``: no clique tree has a leaf pending on a min-min
    separator.  ``no-minmax-terminal``: from every start vertex both LexBFS
    and MCS end outside the min-max simplicial vertices.  Non-chordal or
    disconnected inputs are skipped.  Output order does not depend on
    ``workers``.
    """
    if kind not in _CHECKS:
        raise GraphError(f"unknown kind {kind!r}; expected one of {KINDS}")
    from .graph import is_connected
    from .search import is_chordal

    usable = (g for g in graphs if g.n and is_connected(g) and is_chordal(g))
    found: list[Counterexample] = []
    if workers <= 1:
        found = _run_chunk((kind, usable))
    else:
        batches, batch = [], []
        for g in usable:
            batch.append(g)
            if len(batch) == chunk:
                batches.append((kind, batch))
                batch = []
        if batch:
            batches.append((kind, batch))
        with ProcessPoolExecutor(workers) as pool:
            for part in pool.map(_run_chunk, batches):
                found.extend(part)
    found.sort(key=_canonical)
    log.info("%s: %d counterexamples", kind, len(found))
    return found
