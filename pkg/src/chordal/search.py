"""Graph searches, elimination-scheme checks and chordality certificates."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import DisconnectedGraphError, Graph, GraphError, components


class NotChordalError(GraphError):
    """Raised by operations that need a chordal input; carries a hole."""

    def __init__(self, hole: Sequence[int]):
        self.hole = tuple(hole)
        super().__init__(f"graph is not chordal; chordless cycle {list(self.hole)}")


# Partition cells are lists indexed by these slots; plain lists are much
# cheaper to create than objects, and a search creates one per split.
_ITEMS, _PTR, _LIVE, _PREV, _NEXT, _STAMP, _SPLIT = range(7)


def _cell(items: list[int], live: int) -> list:
    return [items, 0, live, None, None, -1, None]


def lexbfs(g: Graph, start: int = 0) -> list[int]:
    """Lexicographic breadth-first search visit order from ``start``.

    Partition refinement over a linked list of cells; each cell keeps its
    members in increasing id order, so picking the first live member of the
    head cell breaks ties by smallest id.  O(n + m).  Disconnection is
    noticed when a vertex is picked from the never-refined starting cell.
    """
    if g.n == 0:
        return []
    g.check_vertices((start,))
    return _lexbfs(g.nbrs, list(range(g.n)), start)


def lexbfs_plus(g: Graph, previous: Sequence[int]) -> list[int]:
    """LexBFS breaking ties towards the vertex latest in ``previous``."""
    if sorted(previous) != list(range(g.n)):
        raise GraphError("ordering is not a permutation of the vertices")
    if g.n == 0:
        return []
    rank = list(reversed(previous))
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for v in rank:
        for u in g.nbrs[v]:
            nbrs[u].append(v)
    return _lexbfs(nbrs, rank, rank[0])


def _lexbfs(nbrs, initial: list[int], start: int) -> list[int]:
    # Cells keep members in ``initial`` order provided every nbrs[v] lists
    # neighbours in that same order.
    n = len(initial)
    head = first = _cell(list(initial), n)
    cell_of = [head] * n
    visited = [False] * n
    order = []
    v = start
    for step in range(n):
        if step:
            while head[_LIVE] == 0:
                head = head[_NEXT]
            if head is first:
                raise DisconnectedGraphError("graph is not connected")
            items = head[_ITEMS]
            while True:
                x = items[head[_PTR]]
                if cell_of[x] is head and not visited[x]:
                    break
                head[_PTR] += 1
            v = x
        cell_of[v][_LIVE] -= 1
        visited[v] = True
        order.append(v)
        for w in nbrs[v]:
            if visited[w]:
                continue
            c = cell_of[w]
            if c[_STAMP] != step:
                new = _cell([], 0)
                prev = c[_PREV]
                new[_NEXT] = c
                new[_PREV] = prev
                if prev is not None:
                    prev[_NEXT] = new
                c[_PREV] = new
                if c is head:
                    head = new
                c[_STAMP] = step
                c[_SPLIT] = new
            new = c[_SPLIT]
            c[_LIVE] -= 1
            new[_ITEMS].append(w)
            new[_LIVE] += 1
            cell_of[w] = new
    return order


def mcs(g: Graph, start: int = 0) -> list[int]:
    """Maximum cardinality search visit order, ties to the smallest id.

    Weight buckets hold lazy min-heaps; stale entries are skipped on pop.
    """
    n = g.n
    if n == 0:
        return []
    g.check_vertices((start,))
    weight = [0] * n
    buckets: list[list[int]] = [[] for _ in range(n)]
    buckets[0] = list(range(n))
    visited = [False] * n
    top = 0
    order = []
    v = start
    for step in range(n):
        if step:
            while True:
                while not buckets[top]:
                    top -= 1
                x = heapq.heappop(buckets[top])
                if not visited[x] and weight[x] == top:
                    break
            if top == 0:
                raise DisconnectedGraphError("graph is not connected")
            v = x
        visited[v] = True
        order.append(v)
        for w in g.nbrs[v]:
            if not visited[w]:
                weight[w] += 1
                heapq.heappush(buckets[weight[w]], w)
                if weight[w] > top:
                    top = weight[w]
    return order


@dataclass(frozen=True)
class SchemeCheck:
    """Outcome of an elimination-scheme test.

    On failure ``position`` is the first index whose later neighbours are not
    a clique and ``pair`` two non-adjacent later neighbours of that vertex.
    """

    ok: bool
    position: int | None = None
    vertex: int | None = None
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _positions(g: Graph, order: Sequence[int]) -> list[int]:
    if len(order) != g.n:
        raise GraphError("ordering length differs from vertex count")
    pos = [-1] * g.n
    for i, v in enumerate(order):
        if not 0 <= v < g.n or pos[v] != -1:
            raise GraphError("ordering is not a permutation of the vertices")
        pos[v] = i
    return pos


def is_simplicial_elimination_scheme(g: Graph, order: Sequence[int]) -> SchemeCheck:
    pos = _positions(g, order)
    adj, nbrs = g.adj, g.nbrs
    # Parent test: each vertex's later neighbours minus the earliest one must
    # be adjacent to that earliest one.  Linear, and exact for the whole order.
    for v in order:
        pv = pos[v]
        later = [w for w in nbrs[v] if pos[w] > pv]
        if len(later) < 2:
            continue
        p = min(later, key=pos.__getitem__)
        ap = adj[p]
        if any(w != p and w not in ap for w in later):
            break
    else:
        return SchemeCheck(True)
    for i, v in enumerate(order):
        later = [w for w in nbrs[v] if pos[w] > i]
        for j, a in enumerate(later):
            aa = adj[a]
            for b in later[j + 1:]:
                if b not in aa:
                    return SchemeCheck(False, i, v, (a, b))
    raise AssertionError("parent test failed but every vertex is simplicial")


def simplicial_vertices(g: Graph) -> set[int]:
    adj = g.adj
    out = set()
    for v in range(g.n):
        ns = g.nbrs[v]
        if all(b in adj[a] for i, a in enumerate(ns) for b in ns[i + 1:]):
            out.add(v)
    return out


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate to the smallest vertex and orient towards its smaller neighbour."""
    c = list(cycle)
    k = c.index(min(c))
    c = c[k:] + c[:k]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[:0:-1]
    return tuple(c)


def _path_avoiding(g: Graph, a: int, b: int, allowed) -> list[int] | None:
    """Shortest a-b path whose interior vertices satisfy ``allowed``."""
    prev = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for w in g.nbrs[u]:
            if w in prev:
                continue
            if w == b:
                path = [b, u]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
            if allowed(w):
                prev[w] = u
                queue.append(w)
    return None


def hole_through(g: Graph, v: int, a: int, b: int) -> tuple[int, ...] | None:
    """Chordless cycle through ``a, v, b`` if one exists (``a``, ``b`` non-adjacent)."""
    closed = g.adj[v]
    path = _path_avoiding(g, a, b, lambda w: w != v and w not in closed)
    if path is None:
        return None
    return canonical_cycle([v] + path)


def find_hole(g: Graph) -> tuple[int, ...] | None:
    """Some chordless cycle of length >= 4, or None for chordal graphs.

    For each vertex v, a component K of g - N[v] whose neighbourhood holds a
    non-adjacent pair closes a hole through v; every hole arises this way.
    """
    adj = g.adj
    for v in range(g.n):
        closed = set(adj[v])
        closed.add(v)
        for comp in components(g, closed):
            inside = set(comp)
            attach = sorted({w for u in comp for w in adj[u] if w in closed})
            for i, a in enumerate(attach):
                for b in attach[i + 1:]:
                    if b not in adj[a]:
                        path = _path_avoiding(g, a, b, inside.__contains__)
                        return canonical_cycle([v] + path)
    return None


def is_hole(g: Graph, cycle: Sequence[int]) -> bool:
    c = list(cycle)
    k = len(c)
    if k < 4 or len(set(c)) != k:
        return False
    g.check_vertices(c)
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(c[i], c[j]) != consecutive:
                return False
    return True


@dataclass(frozen=True)
class ChordalityCertificate:
    """Either a perfect elimination ordering or a chordless cycle."""

    ordering: tuple[int, ...] | None = None
    hole: tuple[int, ...] | None = None

    @property
    def chordal(self) -> bool:
        return self.ordering is not None

    def __bool__(self) -> bool:
        return self.chordal

    def verify(self, g: Graph) -> bool:
        if self.ordering is not None:
            return bool(is_simplicial_elimination_scheme(g, self.ordering))
        return self.hole is not None and is_hole(g, self.hole)

    def to_json(self, g: Graph) -> dict:
        if self.chordal:
            return {"chordal": True, "kind": "ordering",
                    "vertices": [g.label(v) for v in self.ordering]}
        return {"chordal": False, "kind": "hole", "vertices": [g.label(v) for v in self.hole]}

    @classmethod
    def from_json(cls, data: dict, g: Graph) -> ChordalityCertificate:
        vs = tuple(g.vertex(str(x)) for x in data["vertices"])
        if data["kind"] == "ordering":
            return cls(ordering=vs)
        if data["kind"] == "hole":
            return cls(hole=vs)
        raise GraphError(f"unknown certificate kind {data['kind']!r}")


def is_chordal(g: Graph) -> ChordalityCertificate:
    order = lexbfs(g, 0)[::-1]
    check = is_simplicial_elimination_scheme(g, order)
    if check.ok:
        return ChordalityCertificate(ordering=tuple(order))
    a, b = check.pair
    hole = hole_through(g, check.vertex, a, b) or find_hole(g)
    if hole is None:
        raise AssertionError("elimination check failed but no hole was found")
    return ChordalityCertificate(hole=hole)


def perfect_elimination_ordering(g: Graph) -> list[int]:
    """Reversed LexBFS order; raises :class:`NotChordalError` with a hole."""
    cert = is_chordal(g)
    if not cert.chordal:
        raise NotChordalError(cert.hole)
    return list(cert.ordering)
