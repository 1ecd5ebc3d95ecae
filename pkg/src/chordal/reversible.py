"""Orderings simplicial in both directions and proper interval recognition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .graph import Graph, GraphError, require_connected
from .search import SchemeCheck, is_chordal, is_hole, is_simplicial_elimination_scheme, lexbfs, lexbfs_plus

CLAW = Graph(4, [(0, 1), (0, 2), (0, 3)])
NET = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
SUN3 = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)])
# Triangle b-c-d with pendants a-b and e-c.
BULL = Graph.from_labeled_edges([("a", "b"), ("b", "c"), ("b", "d"), ("c", "d"), ("c", "e")])

PATTERNS = {"claw": CLAW, "net": NET, "sun3": SUN3}


@dataclass(frozen=True)
class ReversibleCheck:
    ok: bool
    direction: str | None = None
    failure: SchemeCheck | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_reversible_ordering(g: Graph, order: Sequence[int]) -> ReversibleCheck:
    forward = is_simplicial_elimination_scheme(g, order)
    if not forward:
        return ReversibleCheck(False, "forward", forward)
    backward = is_simplicial_elimination_scheme(g, list(order)[::-1])
    if not backward:
        return ReversibleCheck(False, "backward", backward)
    return ReversibleCheck(True)


def is_bisimplicial(g: Graph, v: int) -> bool:
    """N(v) splits into at most two cliques iff its complement is bipartite."""
    g.check_vertices((v,))
    ns = g.nbrs[v]
    adj = g.adj
    colour: dict[int, int] = {}
    for root in ns:
        if root in colour:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in ns:
                if y == x or y in adj[x]:
                    continue
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


def find_induced(g: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Vertices inducing ``pattern`` (mapped in pattern order), or None.

    Backtracking that extends along pattern edges; meant for patterns of a
    handful of vertices.
    """
    k = pattern.n
    order = [0]
    for x in range(k):
        for y in pattern.nbrs[order[x]] if x < len(order) else ():
            if y not in order:
                order.append(y)
    order += [x for x in range(k) if x not in order]
    anchor = {}
    for i, p in enumerate(order[1:], 1):
        anchor[p] = next((q for q in order[:i] if pattern.has_edge(p, q)), None)
    image: dict[int, int] = {}
    used: set[int] = set()

    def consistent(p: int, v: int) -> bool:
        for q, w in image.items():
            if pattern.has_edge(p, q) != g.has_edge(v, w):
                return False
        return True

    def rec(i: int) -> bool:
        if i == k:
            return True
        p = order[i]
        a = anchor.get(p)
        pool = g.nbrs[image[a]] if a is not None else range(g.n)
        for v in pool:
            if v in used or not consistent(p, v):
                continue
            image[p] = v
            used.add(v)
            if rec(i + 1):
                return True
            del image[p]
            used.discard(v)
        return False

    if rec(0):
        return tuple(image[p] for p in range(k))
    return None


def induces(g: Graph, vertices: Sequence[int], pattern: Graph) -> bool:
    vs = list(vertices)
    if len(vs) != pattern.n or len(set(vs)) != len(vs):
        return False
    g.check_vertices(vs)
    k = len(vs)
    return any(
        all(g.has_edge(p[i], p[j]) == pattern.has_edge(i, j)
            for i in range(k) for j in range(i + 1, k))
        for p in permutations(vs)
    )


@dataclass(frozen=True)
class ReversibilityCertificate:
    """A reversible ordering, or vertices inducing a claw, net, 3-sun or hole."""

    kind: str
    vertices: tuple[int, ...]

    @property
    def reversible(self) -> bool:
        return self.kind == "ordering"

    def __bool__(self) -> bool:
        return self.reversible

    def verify(self, g: Graph) -> bool:
        if self.kind == "ordering":
            return bool(is_reversible_ordering(g, self.vertices))
        if self.kind == "hole":
            return is_hole(g, self.vertices)
        return induces(g, self.vertices, PATTERNS[self.kind])

    def to_json(self, g: Graph) -> dict:
        return {"kind": self.kind, "vertices": [g.label(v) for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict, g: Graph) -> ReversibilityCertificate:
        return cls(data["kind"], tuple(g.vertex(str(x)) for x in data["vertices"]))


def umbrella_candidate(g: Graph) -> list[int]:
    """Third sweep of LexBFS, LexBFS+, LexBFS+.

    On proper interval graphs the result has consecutive closed
    neighbourhoods; callers must still verify it.
    """
    first = lexbfs(g, 0)
    second = lexbfs_plus(g, first)
    return lexbfs_plus(g, second)


def find_reversible_ordering(g: Graph) -> ReversibilityCertificate:
    require_connected(g)
    cert = is_chordal(g)
    if not cert.chordal:
        return ReversibilityCertificate("hole", cert.hole)
    if g.n:
        order = umbrella_candidate(g)
        if is_reversible_ordering(g, order):
            return ReversibilityCertificate("ordering", tuple(order))
    else:
        return ReversibilityCertificate("ordering", ())
    for kind in ("claw", "net", "sun3"):
        found = find_induced(g, PATTERNS[kind])
        if found is not None:
            return ReversibilityCertificate(kind, found)
    raise GraphError(
        "no reversible ordering found and no forbidden subgraph present; "
        "the recognition sweep and the forbidden-subgraph list disagree"
    )


def is_proper_interval(g: Graph) -> bool:
    return find_reversible_ordering(g).reversible
