"""Three approximation algorithms for small 2-vertex strongly biconnected
spanning subgraphs.

* ``algorithm1``: minimal 2-vertex-connected spanning subgraph, then repair
  the remaining b-articulation points by re-adding discarded edges.
* ``algorithm2``: one greedy edge-deletion pass keeping the full property.
* ``algorithm3``: protect a greedy degree cover, then delete everything else
  that can go.

Every scan walks edges in canonical order, so identical inputs produce
identical outputs.
"""

import time
from dataclasses import dataclass, field

from .connectivity import (
    _biconnected,
    _sbcc_comembership,
    _strongly_connected,
    _und_adj,
    b_articulation_points,
    is_2v_strongly_biconnected,
    is_2vertex_connected,
)
from .graph import DiGraph, Edge, build, delete_edge, delete_vertex


class RepairLoopStalled(RuntimeError):
    """Algorithm 1 ran out of candidate edges while a b-articulation point
    remained; signals an invalid input or a component-membership mismatch."""


@dataclass(frozen=True, slots=True)
class AlgoTrace:
    """Counters recorded while an algorithm runs.

    ``l_bap_count``/``bap_set`` describe the b-articulation points of
    algorithm 1's first-phase subgraph; the other counters apply where the
    relevant algorithm says so.
    """

    l_bap_count: int = 0
    bap_set: frozenset[int] = frozenset()
    edges_added: int = 0
    edges_removed: int = 0
    phase1_size: int = 0


@dataclass(frozen=True, slots=True)
class AlgoResult:
    """Output subgraph plus timing and trace counters."""

    subgraph: DiGraph
    algorithm: str
    elapsed: float
    edges_out: int
    trace: AlgoTrace = field(default_factory=AlgoTrace)


def _require_feasible(g: DiGraph) -> None:
    if not is_2v_strongly_biconnected(g):
        raise ValueError("input is not 2-vertex strongly biconnected")


def minimal_2vcss(g: DiGraph, sap_method: str = "fast") -> DiGraph:
    """Minimal 2-vertex-connected spanning subgraph by one deletion pass.

    Scans edges in canonical order and deletes each one whose removal keeps
    the graph 2-vertex connected.  Monotonicity of the property under edge
    addition makes the single pass minimal: every surviving edge is
    individually necessary.
    """
    if not is_2vertex_connected(g, method=sap_method):
        raise ValueError("input is not 2-vertex connected")
    h = g
    for e in g.edges:
        candidate = delete_edge(h, e)
        if is_2vertex_connected(candidate, method=sap_method):
            h = candidate
    return h


def _is_b_articulation(g: DiGraph, v: int, und) -> bool:
    return not (
        _strongly_connected(g.out_adj, g.in_adj, g.n, v)
        and _biconnected(und, g.n, v)
    )


def _repair(full: DiGraph, gplus: DiGraph, v: int) -> DiGraph:
    """Add the first discarded edge that bridges two strongly biconnected
    components of gplus with v deleted."""
    hv, mapping = delete_vertex(gplus, v)
    comp, block_sets = _sbcc_comembership(hv)
    present = gplus.edge_set
    for w, x in full.edges:
        if (w, x) in present or w == v or x == v:
            continue
        mw, mx = mapping[w], mapping[x]
        if comp[mw] != comp[mx] or block_sets[mw].isdisjoint(block_sets[mx]):
            return build(gplus.n, (*gplus.edges, (w, x)))
    raise RepairLoopStalled(
        f"no candidate edge separates components around vertex {v}"
    )


def algorithm1(
    g: DiGraph, *, precheck: bool = True, sap_method: str = "fast"
) -> AlgoResult:
    """Minimal 2-vertex-connected subgraph plus b-articulation repair."""
    if precheck:
        _require_feasible(g)
    t0 = time.perf_counter()
    gplus = minimal_2vcss(g, sap_method=sap_method)
    bap = frozenset(b_articulation_points(gplus))
    added = 0
    for v in sorted(bap):
        while _is_b_articulation(gplus, v, _und_adj(gplus)):
            gplus = _repair(g, gplus, v)
            added += 1
    elapsed = time.perf_counter() - t0
    return AlgoResult(
        subgraph=gplus,
        algorithm="alg1",
        elapsed=elapsed,
        edges_out=gplus.m,
        trace=AlgoTrace(l_bap_count=len(bap), bap_set=bap, edges_added=added),
    )


def algorithm2(g: DiGraph, *, precheck: bool = True) -> AlgoResult:
    """Greedy deletion scan keeping 2-vertex strong biconnectivity.

    The output is minimal: deleting any surviving edge breaks the property.
    """
    if precheck:
        _require_feasible(g)
    t0 = time.perf_counter()
    h = g
    removed = 0
    for e in g.edges:
        candidate = delete_edge(h, e)
        if is_2v_strongly_biconnected(candidate):
            h = candidate
            removed += 1
    elapsed = time.perf_counter() - t0
    return AlgoResult(
        subgraph=h,
        algorithm="alg2",
        elapsed=elapsed,
        edges_out=h.m,
        trace=AlgoTrace(edges_removed=removed),
    )


def greedy_degree_cover(g: DiGraph) -> list[Edge]:
    """Greedy edge set giving every vertex in-degree and out-degree >= 1.

    One scan in canonical order: take an edge whenever its tail still lacks
    an outgoing pick or its head still lacks an incoming one.  At most 2n
    edges are taken.  Requires every vertex to have in- and out-degree >= 1.
    """
    for v in range(g.n):
        if not g.out_adj[v] or not g.in_adj[v]:
            raise ValueError(f"vertex {v} lacks an in- or out-edge")
    out_covered = bytearray(g.n)
    in_covered = bytearray(g.n)
    chosen: list[Edge] = []
    for u, v in g.edges:
        if not out_covered[u] or not in_covered[v]:
            chosen.append((u, v))
            out_covered[u] = 1
            in_covered[v] = 1
    return chosen


def algorithm3(g: DiGraph, *, precheck: bool = True) -> AlgoResult:
    """Degree-cover phase, then deletion scan over the uncovered edges.

    Edges of the cover are never deleted; every surviving edge outside it is
    individually necessary.
    """
    if precheck:
        _require_feasible(g)
    t0 = time.perf_counter()
    cover = greedy_degree_cover(g)
    protected = set(cover)
    h = g
    removed = 0
    for e in g.edges:
        if e in protected:
            continue
        candidate = delete_edge(h, e)
        if is_2v_strongly_biconnected(candidate):
            h = candidate
            removed += 1
    elapsed = time.perf_counter() - t0
    return AlgoResult(
        subgraph=h,
        algorithm="alg3",
        elapsed=elapsed,
        edges_out=h.m,
        trace=AlgoTrace(edges_removed=removed, phase1_size=len(cover)),
    )
