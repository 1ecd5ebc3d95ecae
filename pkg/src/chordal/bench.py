"""Scaling benchmark for the pending min-max tree construction."""

from __future__ import annotations

import gc
import math
import statistics
import time
import tracemalloc
from dataclasses import dataclass

from .graph import Graph, generate_random_chordal
from .minmax import pending_minmax_tree

DEFAULT_SIZES = (10_000, 100_000, 1_000_000)
# About four edges per vertex; the per-vertex interpreter cost dominates
# sparser families.
DENSITY = 0.8
MAX_CLIQUE = 24


@dataclass(frozen=True)
class BenchRow:
    m: int
    n: int
    seconds: float
    peak_bytes: int | None


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    time_slope: float
    memory_slope: float | None

    def to_json(self) -> dict:
        return {
            "rows": [r.__dict__ for r in self.rows],
            "time_slope": self.time_slope,
            "memory_slope": self.memory_slope,
        }


def graph_with_edges(m: int, seed: int = 0, density: float = DENSITY,
                     max_clique: int = MAX_CLIQUE) -> Graph:
    """Random chordal graph with roughly ``m`` edges."""
    probe = generate_random_chordal(2000, density, seed, max_clique)
    rate = probe.m / (probe.n - 1)
    n = max(2, round(m / rate) + 1)
    return generate_random_chordal(n, density, seed, max_clique)


def loglog_slope(xs, ys) -> float:
    return statistics.linear_regression([math.log(x) for x in xs], [math.log(y) for y in ys]).slope


def _time_once(g: Graph) -> float:
    # Cyclic GC off while timing, as timeit does: its full collections scan
    # the whole live heap and would bill the graph's size to the algorithm.
    gc.collect()
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        pending_minmax_tree(g)
        return time.perf_counter() - t0
    finally:
        if enabled:
            gc.enable()


def _peak(g: Graph) -> int:
    gc.collect()
    tracemalloc.start()
    try:
        pending_minmax_tree(g)
        return tracemalloc.get_traced_memory()[1]
    finally:
        tracemalloc.stop()


def run_bench(sizes=DEFAULT_SIZES, seed: int = 0, repeats: int = 3, memory: bool = True) -> BenchReport:
    """Median wall time (and optionally peak traced memory) per size.

    Graphs are generated before timing starts; only the tree construction
    is measured.  Memory is taken in a separate pass since tracing slows
    the run down.
    """
    rows = []
    for i, m in enumerate(sizes):
        g = graph_with_edges(m, seed + i)
        secs = statistics.median(_time_once(g) for _ in range(repeats))
        peak = _peak(g) if memory else None
        rows.append(BenchRow(g.m, g.n, secs, peak))
        del g
    ms = [r.m for r in rows]
    tslope = loglog_slope(ms, [r.seconds for r in rows])
    mslope = loglog_slope(ms, [r.peak_bytes for r in rows]) if memory else None
    return BenchReport(tuple(rows), tslope, mslope)
