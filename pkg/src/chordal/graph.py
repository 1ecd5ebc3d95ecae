"""Undirected simple graphs over dense integer vertex ids.

Vertices are ``0..n-1``; optional string labels survive parsing and
serialization through a label table.  Graphs are immutable once built.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Base class for invalid graph input."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(GraphError):
    pass


class Graph:
    """Simple undirected graph with adjacency sets.

    ``adj[v]`` is a frozenset for O(1) membership; ``nbrs[v]`` holds the same
    neighbours as a sorted tuple, which the searches scan to keep their
    smallest-id tie-breaking linear.
    """

    __slots__ = ("n", "adj", "nbrs", "labels", "_m", "_index")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError("label table length differs from vertex count")
            if len(set(labels)) != n:
                raise GraphError("vertex labels must be distinct")
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in sets)
        self.nbrs: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in sets)
        self.labels: tuple[str, ...] | None = labels
        self._m = sum(len(s) for s in sets) // 2
        self._index: dict[str, int] | None = None

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def from_labeled_edges(cls, edges: Iterable[tuple[str, str]]) -> Graph:
        """Build from label pairs; ids follow first appearance."""
        index: dict[str, int] = {}
        pairs = []
        for a, b in edges:
            for x in (a, b):
                if x not in index:
                    index[x] = len(index)
            pairs.append((index[a], index[b]))
        return cls(len(index), pairs, list(index))

    @classmethod
    def _trusted(cls, nbrs: Sequence[tuple[int, ...]]) -> Graph:
        """Skip validation: ``nbrs`` must be sorted, symmetric and loop-free."""
        g = cls.__new__(cls)
        g.n = len(nbrs)
        g.nbrs = tuple(nbrs)
        g.adj = tuple(frozenset(x) for x in nbrs)
        g.labels = None
        g._m = sum(map(len, nbrs)) // 2
        g._index = None
        return g

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.nbrs[u]:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, label: str) -> int:
        """Inverse of :meth:`label`."""
        if self._index is None:
            self._index = {self.label(v): v for v in range(self.n)}
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def check_vertices(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} outside range 0..{self.n - 1}")

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, renumbered densely in increasing id order.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        self.check_vertices(keep)
        new = {v: i for i, v in enumerate(keep)}
        edges = [(new[u], new[v]) for u in keep for v in self.nbrs[u] if u < v and v in new]
        labels = [self.label(v) for v in keep] if self.labels is not None else None
        return Graph(len(keep), edges, labels), keep

    def relabel(self, labels: Sequence[str]) -> Graph:
        return Graph(self.n, self.edges(), labels)


# --- predicates -----------------------------------------------------------


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = list(s)
    g.check_vertices(vs)
    adj = g.adj
    for i, u in enumerate(vs):
        au = adj[u]
        for v in vs[i + 1:]:
            if v != u and v not in au:
                return False
    return True


def components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of ``g - removed``, each in BFS order."""
    seen = [False] * g.n
    for v in removed:
        seen[v] = True
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque(comp)
        while queue:
            u = queue.popleft()
            for w in g.nbrs[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def separates(g: Graph, s: Iterable[int], a: int, b: int) -> bool:
    """True iff ``a`` and ``b`` lie in different components of ``g - s``."""
    s = set(s)
    g.check_vertices(s)
    g.check_vertices((a, b))
    if a in s or b in s:
        raise GraphError("endpoints must lie outside the separator")
    if a == b:
        raise GraphError("endpoints must be distinct")
    seen = set(s)
    seen.add(a)
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for w in g.nbrs[u]:
            if w == b:
                return False
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return True


def full_components(g: Graph, s: Iterable[int]) -> list[list[int]]:
    """Components of ``g - s`` whose neighbourhood is all of ``s``."""
    s = set(s)
    full = []
    for comp in components(g, s):
        touched = set()
        for u in comp:
            touched.update(g.adj[u] & s)
        if len(touched) == len(s):
            full.append(comp)
    return full


def is_minimal_separator(g: Graph, s: Iterable[int]) -> bool:
    """A set is a minimal separator iff ``g - s`` has two full components."""
    require_connected(g)
    s = set(s)
    g.check_vertices(s)
    return len(full_components(g, s)) >= 2


# --- generation -----------------------------------------------------------


def generate_random_chordal(
    n: int,
    density: float = 0.5,
    seed: int = 0,
    max_clique: int | None = None,
) -> Graph:
    """Random connected chordal graph on ``n`` vertices.

    Each new vertex picks a random maximal clique of the graph built so far
    and joins a random non-empty subset of it, keeping each member with
    probability ``density``.  The new vertex is simplicial on arrival, so the
    reverse insertion order is a perfect elimination ordering.  ``max_clique``
    caps clique growth, which bounds the average degree on large instances.
    """
    if n < 1:
        raise GraphError("need at least one vertex")
    if not 0.0 <= density <= 1.0:
        raise GraphError("density must lie in [0, 1]")
    rng = random.Random(seed)
    cliques: list[list[int]] = [[0]]
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        ci = rng.randrange(len(cliques))
        clique = cliques[ci]
        chosen = [u for u in clique if rng.random() < density]
        if not chosen:
            chosen = [clique[rng.randrange(len(clique))]]
        if max_clique is not None and len(chosen) >= max_clique:
            chosen = rng.sample(chosen, max_clique - 1)
        edges.extend((u, v) for u in chosen)
        if len(chosen) == len(clique):
            clique.append(v)
        else:
            cliques.append(chosen + [v])
    return Graph(n, edges)


# --- I/O ------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``label label`` lines; ``#`` starts a comment, blanks are skipped."""
    index: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tokens)}", lineno)
        a, b = tokens
        if a == b:
            raise ParseError(f"self-loop on {a!r}", lineno)
        for x in tokens:
            if x not in index:
                index[x] = len(index)
        u, v = index[a], index[b]
        edges.add((min(u, v), max(u, v)))
    return Graph(len(index), sorted(edges), list(index))


def parse_dimacs(text: str) -> Graph:
    """Read ``p edge n m`` / ``e u v`` files with 1-based vertex numbers."""
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError("malformed problem line", lineno)
            try:
                n = int(tokens[2])
            except ValueError:
                raise ParseError("vertex count is not an integer", lineno) from None
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(tokens) != 3:
                raise ParseError("malformed edge line", lineno)
            try:
                u, v = int(tokens[1]) - 1, int(tokens[2]) - 1
            except ValueError:
                raise ParseError("vertex is not an integer", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError("vertex out of range", lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            edges.add((min(u, v), max(u, v)))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    return Graph(n, sorted(edges), [str(i + 1) for i in range(n)])


def parse_graph(text: str) -> Graph:
    """DIMACS if a ``p`` line is present, else edge list."""
    if any(line.split()[:1] == ["p"] for line in text.splitlines()):
        return parse_dimacs(text)
    return parse_edge_list(text)


def to_edge_list(g: Graph) -> str:
    return "".join(f"{g.label(u)} {g.label(v)}\n" for u, v in g.edges())


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if not g.nbrs[v]:
            lines.append(f"  {_dot_id(g.label(v))};")
    for u, v in g.edges():
        lines.append(f"  {_dot_id(g.label(u))} -- {_dot_id(g.label(v))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def split_components(g: Graph) -> list[Graph]:
    """One induced subgraph per connected component, labels preserved."""
    labeled = g if g.labels is not None else g.relabel([str(v) for v in range(g.n)])
    return [labeled.induced(c)[0] for c in components(g)]
