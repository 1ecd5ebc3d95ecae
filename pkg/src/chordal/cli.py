"""Command-line interface.

Exit status: 0 for a positive answer, 1 for a negative certificate (not
chordal, not proper interval, no counterexample found, oracle mismatch),
2 for usage, input or parse errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable

from . import __version__
from .bench import DEFAULT_SIZES, run_bench
from .cliquetree import build_clique_tree, maximal_cliques, reduced_clique_graph, verify_clique_tree
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    generate_random_chordal,
    parse_graph,
    split_components,
    to_dot,
    to_edge_list,
)
from .minmax import (
    KINDS,
    containment_elimination_steps,
    minmax_simplicial_vertices,
    pending_minmax_tree,
    search_counterexamples,
    separator_poset,
)
from .reversible import find_reversible_ordering
from .search import NotChordalError, is_chordal, lexbfs, mcs

log = logging.getLogger("chordal")

DEFAULT_SEED = 0

OK, NEGATIVE, USAGE = 0, 1, 2


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def load(args) -> Graph:
    """Parse the input once; the graph is kept on ``args`` for error reports."""
    args.graph = read_graph(args.input)
    return args.graph


def read_graph(path: str) -> Graph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise _Exit(USAGE, f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_graph(text)


def _labels(g: Graph, vs) -> list[str]:
    return [g.label(v) for v in vs]


def _emit(obj, fmt: str, text: str | None = None, dot: str | None = None) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    elif fmt == "dot":
        sys.stdout.write(dot)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _hole_result(g: Graph, hole, fmt: str) -> int:
    data = {"chordal": False, "kind": "hole", "vertices": _labels(g, hole)}
    _emit(data, "text" if fmt == "dot" else fmt, f"not chordal; hole: {' '.join(data['vertices'])}")
    return NEGATIVE


def _members(g: Graph, vs) -> str:
    return "{" + ",".join(g.label(v) for v in sorted(vs)) + "}"


def _tree_text(g: Graph, t) -> str:
    lines = [f"{len(t.nodes)} cliques"]
    lines += [f"  {i}: {_members(g, c)}" for i, c in enumerate(t.nodes)]
    lines += [f"  {i} -- {j}  {_members(g, s)}" for i, j, s in t.edges]
    return "\n".join(lines)


# --- subcommands ----------------------------------------------------------


def cmd_check(args) -> int:
    g = load(args)
    cert = is_chordal(g)
    data = cert.to_json(g)
    word = "chordal; elimination order" if cert.chordal else "not chordal; hole"
    _emit(data, args.format, f"{word}: {' '.join(data['vertices'])}")
    return OK if cert.chordal else NEGATIVE


def cmd_peo(args) -> int:
    g = load(args)
    start = g.vertex(args.start) if args.start is not None else 0
    visit = (mcs if args.search == "mcs" else lexbfs)(g, start)
    order = visit[::-1]
    cert = is_chordal(g)
    if not cert.chordal:
        return _hole_result(g, cert.hole, args.format)
    data = {"search": args.search, "start": g.label(start), "ordering": _labels(g, order)}
    _emit(data, args.format, " ".join(data["ordering"]))
    return OK


def cmd_clique_tree(args) -> int:
    g = load(args)
    t = build_clique_tree(g)
    report = verify_clique_tree(g, t)
    if not report:
        raise AssertionError(f"built tree failed verification: {report.violation}")
    _emit(t.to_json(g), args.format, _tree_text(g, t), t.to_dot(g))
    return OK


def cmd_rcg(args) -> int:
    g = load(args)
    r = reduced_clique_graph(g)
    _emit(r.to_json(g), args.format, _tree_text(g, r), r.to_dot(g, name="Cr"))
    return OK


def cmd_minmax_tree(args) -> int:
    g = load(args)
    res = pending_minmax_tree(g)
    text = _tree_text(g, res.tree)
    if res.pending_edge is None:
        text += "\nsingle clique; no separators"
    else:
        leaf, other, s = res.pending_edge
        text += f"\npending: {leaf} -- {other} on {_members(g, s)}"
    _emit(res.to_json(g), args.format, text, res.to_dot(g))
    return OK


def cmd_scheme(args) -> int:
    g = load(args)
    steps = containment_elimination_steps(g)
    order = [v for step in steps for v in step.vertices]
    data = {
        "ordering": _labels(g, order),
        "steps": [
            {"vertices": _labels(g, st.vertices),
             "separator": None if st.separator is None else _labels(g, sorted(st.separator))}
            for st in steps
        ],
    }
    lines = [" ".join(data["ordering"])]
    for st in data["steps"]:
        sep = "-" if st["separator"] is None else "{" + ",".join(st["separator"]) + "}"
        lines.append(f"  prune {' '.join(st['vertices'])} over {sep}")
    _emit(data, args.format, "\n".join(lines))
    return OK


def cmd_reversible(args) -> int:
    g = load(args)
    cert = find_reversible_ordering(g)
    data = cert.to_json(g)
    word = "reversible ordering" if cert.reversible else f"{cert.kind} witness"
    _emit(data, args.format, f"{word}: {' '.join(data['vertices'])}")
    return OK if cert.reversible else NEGATIVE


def cmd_separators(args) -> int:
    g = load(args)
    poset = separator_poset(g)
    data = poset.to_json(g)
    lines = []
    for i, s in enumerate(poset.separators):
        flags = [f for f, on in (("min-max", i in poset.min_max), ("min-min", i in poset.min_min)) if on]
        lines.append(f"{_members(g, s)} x{poset.multiplicity[i]} {' '.join(flags)}".rstrip())
    if args.with_simplicial:
        data["minmax_simplicial"] = _labels(g, sorted(minmax_simplicial_vertices(g)))
        lines.append("min-max simplicial: " + " ".join(data["minmax_simplicial"]))
    _emit(data, args.format, "\n".join(lines) or "no minimal separators")
    return OK


def cmd_components(args) -> int:
    g = load(args)
    parts = split_components(g)
    data = [{"labels": [h.label(v) for v in range(h.n)],
             "edges": [[h.label(u), h.label(v)] for u, v in h.edges()]} for h in parts]
    text = "\n".join(f"# component {i}\n" + (to_edge_list(h) or f"# isolated vertex {h.label(0)}")
                     for i, h in enumerate(parts))
    _emit(data, args.format, text)
    return OK


def _corpus(args):
    from .oracle import CorpusSpec, enumerate_graphs

    if args.random:
        spec = CorpusSpec(mode="random", n_min=args.n_min, n_max=args.n_max,
                          count=args.random, seed=args.seed, chordal=True)
    else:
        spec = CorpusSpec(n_min=args.n_min, n_max=args.n_max, chordal=True,
                          labeled=args.labeled)
    return enumerate_graphs(spec)


def cmd_search(args) -> int:
    found = search_counterexamples(args.kind, _corpus(args), workers=args.workers)
    data = {"kind": args.kind, "count": len(found), "instances": [c.to_json() for c in found]}
    if args.limit is not None:
        data["instances"] = data["instances"][: args.limit]
    text = [f"{len(found)} graphs"]
    text += [" ".join(f"{u}-{v}" for u, v in c["graph"]) for c in data["instances"]]
    _emit(data, args.format, "\n".join(text))
    return OK if found else NEGATIVE


def cmd_gen(args) -> int:
    g = generate_random_chordal(args.n, args.density, args.seed, args.max_clique)
    data = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    _emit(data, args.format, to_edge_list(g) or "0", to_dot(g))
    return OK


def oracle_report(g: Graph) -> dict[str, bool | str]:
    """Cross-check the fast routines against brute force on one graph."""
    from . import oracle

    checks: dict[str, bool | str] = {}

    def guarded(name: str, fn: Callable[[], bool]) -> None:
        try:
            checks[name] = bool(fn())
        except oracle.OracleBudgetError as exc:
            checks[name] = f"skipped: {exc}"

    cert = is_chordal(g)
    checks["chordality"] = cert.verify(g) and cert.chordal == oracle.is_chordal_brute(oracle.masks(g))
    if cert.chordal:
        tree = build_clique_tree(g)
        checks["maximal_cliques"] = set(maximal_cliques(g)) == set(oracle.brute_maximal_cliques(g))
        checks["separators"] = set(tree.separator_multiset()) == oracle.brute_minimal_separators(g, "close")
        checks["clique_tree"] = bool(verify_clique_tree(g, tree))
        rcg = reduced_clique_graph(g)
        checks["reduced_clique_graph"] = set(rcg.edge_key_set()) == oracle.max_spanning_union(g)

        def pending_in_enumeration() -> bool:
            res = pending_minmax_tree(g)
            if res.pending_edge is None:
                return len(tree.nodes) == 1
            key = res.tree.edge_key_set()
            return any(t.edge_key_set() == key for t in oracle.enumerate_max_clique_trees(g))

        guarded("pending_tree", pending_in_enumeration)
        guarded("minmax_simplicial",
                lambda: minmax_simplicial_vertices(g) == oracle.brute_minmax_simplicial(g))
    if g.n <= 9:
        checks["reversible"] = (find_reversible_ordering(g).reversible
                                == oracle.has_reversible_ordering(g))
    else:
        checks["reversible"] = "skipped: more than 9 vertices"
    return checks


def cmd_verify(args) -> int:
    g = load(args)
    checks = oracle_report(g)
    ok = all(v is True or isinstance(v, str) for v in checks.values())
    data = {"ok": ok, "checks": checks}
    text = "\n".join(f"{k}: {'ok' if v is True else 'MISMATCH' if v is False else v}"
                     for k, v in checks.items())
    _emit(data, args.format, text)
    return OK if ok else NEGATIVE


def cmd_bench(args) -> int:
    report = run_bench(tuple(args.sizes), seed=args.seed, repeats=args.repeats,
                       memory=not args.no_memory)
    lines = [f"{'m':>9} {'n':>8} {'seconds':>9} {'peak MiB':>9}"]
    for r in report.rows:
        peak = "-" if r.peak_bytes is None else f"{r.peak_bytes / 2**20:.1f}"
        lines.append(f"{r.m:>9} {r.n:>8} {r.seconds:>9.3f} {peak:>9}")
    lines.append(f"log-log slope, time: {report.time_slope:.3f}")
    if report.memory_slope is not None:
        lines.append(f"log-log slope, memory: {report.memory_slope:.3f}")
    _emit(report.to_json(), args.format, "\n".join(lines))
    return OK


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chordal", description="Chordal graph structure tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, fn, help_: str, formats=("json", "text"), takes_input=True):
        p = sub.add_parser(name, help=help_, description=help_)
        if takes_input:
            p.add_argument("input", nargs="?", default="-",
                           help="edge list or DIMACS file ('-' or omitted: stdin)")
        p.add_argument("-f", "--format", choices=formats, default=formats[0])
        p.set_defaults(func=fn)
        return p

    add("check", cmd_check, "recognise chordal graphs, with an ordering or a hole")
    p = add("peo", cmd_peo, "perfect elimination ordering from a reversed search")
    p.add_argument("--search", choices=("lexbfs", "mcs"), default="lexbfs")
    p.add_argument("--start", help="label of the start vertex (default: first vertex)")
    add("clique-tree", cmd_clique_tree, "maximal clique tree", ("json", "text", "dot"))
    add("rcg", cmd_rcg, "reduced clique graph", ("json", "text", "dot"))
    add("minmax-tree", cmd_minmax_tree, "clique tree with a leaf pending on a min-max separator",
        ("json", "text", "dot"))
    add("scheme", cmd_scheme, "elimination scheme following separator containment")
    add("reversible", cmd_reversible, "reversible ordering or forbidden induced subgraph")
    p = add("separators", cmd_separators, "minimal separators ordered by inclusion")
    p.add_argument("--with-simplicial", action="store_true",
                   help="also list the min-max simplicial vertices")
    add("components", cmd_components, "split the input into connected components")

    p = add("search", cmd_search, "search a corpus for counterexample graphs", takes_input=False)
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--labeled", action="store_true",
                   help="walk labeled graphs instead of isomorphism classes")
    p.add_argument("--random", type=int, metavar="COUNT", default=0,
                   help="draw COUNT random chordal graphs instead of enumerating")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--limit", type=int, help="report at most this many instances")

    p = add("gen", cmd_gen, "random connected chordal graph", ("text", "json", "dot"),
            takes_input=False)
    p.add_argument("n", type=int)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--max-clique", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    add("verify", cmd_verify, "cross-check every routine against brute force on one graph")

    p = add("bench", cmd_bench, "time the pending min-max tree construction", ("text", "json"),
            takes_input=False)
    p.add_argument("--sizes", type=int, nargs="+", default=list(DEFAULT_SIZES), metavar="M")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--no-memory", action="store_true", help="skip the traced-memory pass")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"chordal: {exc}", file=sys.stderr)
        return exc.code
    except NotChordalError as exc:
        return _hole_result(args.graph, exc.hole, args.format)
    except DisconnectedGraphError:
        print("chordal: graph is not connected; split it with 'chordal components'",
              file=sys.stderr)
        return USAGE
    except GraphError as exc:
        print(f"chordal: {exc}", file=sys.stderr)
        return USAGE

