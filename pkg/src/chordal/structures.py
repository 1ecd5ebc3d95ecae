"""Plain data carriers for clique trees and clique graphs.

Kept free of algorithms so that the brute-force oracle can produce the same
types without importing any of the fast code paths it is meant to check.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from .graph import Graph, _dot_id

VertexSet = frozenset  # frozenset[int]
Edge = tuple  # (node index, node index, separator)


@dataclass(frozen=True)
class CliqueGraph:
    """Graph on maximal cliques whose edges carry the clique intersection."""

    nodes: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int, frozenset[int]], ...] = ()
    _adjacency: list = field(default=None, init=False, repr=False, compare=False)

    @property
    def weight(self) -> int:
        return sum(len(s) for _, _, s in self.edges)

    def adjacency(self) -> list[list[tuple[int, frozenset[int]]]]:
        if self._adjacency is None:
            adj: list[list[tuple[int, frozenset[int]]]] = [[] for _ in self.nodes]
            for i, j, s in self.edges:
                adj[i].append((j, s))
                adj[j].append((i, s))
            object.__setattr__(self, "_adjacency", adj)
        return self._adjacency

    def degree(self, i: int) -> int:
        return len(self.adjacency()[i])

    def leaves(self) -> list[int]:
        return [i for i in range(len(self.nodes)) if self.degree(i) == 1]

    def separator_multiset(self) -> Counter:
        return Counter(s for _, _, s in self.edges)

    def edge_key_set(self) -> frozenset:
        """Edges as unordered pairs of clique sets, independent of node order."""
        return frozenset(frozenset((self.nodes[i], self.nodes[j])) for i, j, _ in self.edges)

    def to_json(self, g: Graph | None = None) -> dict[str, Any]:
        name = (lambda v: g.label(v)) if g is not None else (lambda v: v)
        return {
            "nodes": [[name(v) for v in sorted(c)] for c in self.nodes],
            "edges": [
                {"source": i, "target": j, "separator": [name(v) for v in sorted(s)]}
                for i, j, s in self.edges
            ],
            "labels": [g.label(v) for v in range(g.n)] if g is not None else None,
        }

    def to_dot(self, g: Graph | None = None, name: str = "T",
               highlight: tuple[int, int] | None = None) -> str:
        def members(vs):
            return ",".join(g.label(v) if g is not None else str(v) for v in sorted(vs))

        lines = [f"graph {name} {{", "  node [shape=box];"]
        for i, c in enumerate(self.nodes):
            lines.append(f"  n{i} [label={_dot_id('{' + members(c) + '}')}];")
        for i, j, s in self.edges:
            attrs = f"label={_dot_id('{' + members(s) + '}')}"
            if highlight is not None and {i, j} == set(highlight):
                attrs += ", color=red, penwidth=3"
            lines.append(f"  n{i} -- n{j} [{attrs}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


class CliqueTree(CliqueGraph):
    """Clique graph whose edges are expected to form a spanning tree."""


class ReducedCliqueGraph(CliqueGraph):
    pass


def tree_from_json(data: dict[str, Any], g: Graph) -> CliqueTree:
    """Inverse of :meth:`CliqueGraph.to_json` for a graph with known labels."""
    nodes = tuple(frozenset(g.vertex(str(x)) for x in c) for c in data["nodes"])
    edges = tuple(
        (e["source"], e["target"], frozenset(g.vertex(str(x)) for x in e["separator"]))
        for e in data["edges"]
    )
    return CliqueTree(nodes, edges)
