"""Connectivity predicates for directed graphs and their underlying graphs.

Covers strong connectivity, biconnectivity of the underlying undirected
graph, strong biconnectivity (both at once), the 2-vertex variants obtained
by requiring the property to survive every single-vertex deletion, strong
articulation points by definition, b-articulation points, and the
strongly-biconnected-component co-membership test.

Every predicate is a pure function of an immutable graph.  The per-vertex
deletion checks run DFS cores that treat one vertex as absent instead of
materializing each deleted graph; the semantics are identical to composing
``delete_vertex`` with the whole-graph predicates (the test suite checks
this equivalence on random instances).
"""

from dataclasses import dataclass

from .graph import DiGraph, UGraphView, build, underlying


@dataclass(frozen=True, slots=True)
class Partition:
    """Vertex -> SCC class assignment; ids dense in [0, count)."""

    comp: tuple[int, ...]
    count: int


@dataclass(frozen=True, slots=True)
class BlockDecomposition:
    """Biconnected components of an undirected graph plus its cut vertices."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


# ---- traversal cores --------------------------------------------------------


def _reach_count(adj, n: int, start: int, skip: int | None) -> int:
    """Number of vertices reachable from start, treating skip as absent."""
    seen = bytearray(n)
    seen[start] = 1
    if skip is not None:
        seen[skip] = 1
    count = 1
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count


def _strongly_connected(out_adj, in_adj, n: int, skip: int | None = None) -> bool:
    """Forward and backward reachability from one vertex covers everything."""
    n_eff = n if skip is None else n - 1
    if n_eff <= 1:
        return True
    start = 0
    while start == skip:
        start += 1
    return (
        _reach_count(out_adj, n, start, skip) == n_eff
        and _reach_count(in_adj, n, start, skip) == n_eff
    )


def _biconnected(adj, n: int, skip: int | None = None) -> bool:
    """Connected with no articulation point, treating skip as absent.

    Single-vertex graphs count as biconnected, two-vertex graphs count as
    biconnected exactly when the connecting pair is present.
    """
    n_eff = n if skip is None else n - 1
    if n_eff <= 1:
        return True
    root = 0
    while root == skip:
        root += 1
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    disc[root] = low[root] = 1
    timer = 1
    visited = 1
    root_children = 0
    stack = [root]
    while stack:
        v = stack[-1]
        av = adj[v]
        i = ptr[v]
        if i < len(av):
            ptr[v] = i + 1
            w = av[i]
            if w == skip:
                continue
            if disc[w] == 0:
                parent[w] = v
                timer += 1
                disc[w] = low[w] = timer
                visited += 1
                stack.append(w)
            elif w != parent[v] and disc[w] < low[v]:
                low[v] = disc[w]
        else:
            stack.pop()
            p = parent[v]
            if p == -1:
                continue
            if low[v] < low[p]:
                low[p] = low[v]
            if p == root:
                root_children += 1
            elif low[v] >= disc[p]:
                return False
    return visited == n_eff and root_children < 2


def _und_adj(g: DiGraph) -> list[tuple[int, ...]]:
    """Underlying-graph adjacency (antiparallel edges merged)."""
    out_adj, in_adj = g.out_adj, g.in_adj
    return [tuple(dict.fromkeys(out_adj[v] + in_adj[v])) for v in range(g.n)]


def _two_vsb_violation(g: DiGraph, hint: int = 0) -> int | None:
    """None when g is 2-vertex strongly biconnected; otherwise a witness.

    Returns -1 for a whole-graph failure (n < 4, a vertex below the in/out
    degree-2 floor, or g itself not strongly biconnected), else the first
    vertex whose deletion breaks strong biconnectivity, scanning from hint.
    """
    n = g.n
    if n < 4:
        return -1
    out_adj, in_adj = g.out_adj, g.in_adj
    for a in out_adj:
        if len(a) < 2:
            return -1
    for a in in_adj:
        if len(a) < 2:
            return -1
    und = _und_adj(g)
    if not (_strongly_connected(out_adj, in_adj, n) and _biconnected(und, n)):
        return -1
    for i in range(n):
        v = (hint + i) % n
        if not (
            _strongly_connected(out_adj, in_adj, n, v) and _biconnected(und, n, v)
        ):
            return v
    return None


# ---- public predicates ------------------------------------------------------


def scc(g: DiGraph) -> Partition:
    """Strongly connected components (single-pass lowlink DFS, no recursion).

    Component ids are assigned in completion order.
    """
    n = g.n
    adj = g.out_adj
    index = [0] * n
    low = [0] * n
    on_stack = bytearray(n)
    comp = [-1] * n
    ptr = [0] * n
    comp_stack: list[int] = []
    count = 0
    timer = 0
    for root in range(n):
        if index[root]:
            continue
        timer += 1
        index[root] = low[root] = timer
        on_stack[root] = 1
        comp_stack.append(root)
        stack = [root]
        while stack:
            v = stack[-1]
            av = adj[v]
            i = ptr[v]
            if i < len(av):
                ptr[v] = i + 1
                w = av[i]
                if index[w] == 0:
                    timer += 1
                    index[w] = low[w] = timer
                    on_stack[w] = 1
                    comp_stack.append(w)
                    stack.append(w)
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1]
                    if low[v] < low[p]:
                        low[p] = low[v]
                if low[v] == index[v]:
                    while True:
                        w = comp_stack.pop()
                        on_stack[w] = 0
                        comp[w] = count
                        if w == v:
                            break
                    count += 1
    return Partition(comp=tuple(comp), count=count)


def is_strongly_connected(g: DiGraph) -> bool:
    """True iff g has exactly one SCC; single-vertex graphs qualify."""
    return _strongly_connected(g.out_adj, g.in_adj, g.n)


def blocks(u: UGraphView) -> BlockDecomposition:
    """Biconnected components via lowpoint DFS with an edge stack.

    Isolated vertices form singleton blocks.
    """
    n, adj = u.n, u.adj
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    timer = 0
    out: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    for root in range(n):
        if disc[root]:
            continue
        if not adj[root]:
            timer += 1
            disc[root] = timer
            out.append(frozenset((root,)))
            continue
        timer += 1
        disc[root] = low[root] = timer
        root_children = 0
        stack = [root]
        while stack:
            v = stack[-1]
            av = adj[v]
            i = ptr[v]
            if i < len(av):
                ptr[v] = i + 1
                w = av[i]
                if disc[w] == 0:
                    edge_stack.append((v, w))
                    parent[w] = v
                    timer += 1
                    disc[w] = low[w] = timer
                    stack.append(w)
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                p = parent[v]
                if p == -1:
                    continue
                if low[v] < low[p]:
                    low[p] = low[v]
                if p == root:
                    root_children += 1
                if low[v] >= disc[p]:
                    verts: set[int] = set()
                    while True:
                        a, b = edge_stack.pop()
                        verts.add(a)
                        verts.add(b)
                        if (a, b) == (p, v):
                            break
                    out.append(frozenset(verts))
                    if p != root:
                        cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    return BlockDecomposition(blocks=tuple(out), cut_vertices=frozenset(cuts))


def is_biconnected(u: UGraphView) -> bool:
    """Connected with no cut vertex; n=1 counts, n=2 needs its pair present."""
    return _biconnected(u.adj, u.n)


def is_strongly_biconnected(g: DiGraph) -> bool:
    """Strongly connected and the underlying graph is biconnected."""
    return _strongly_connected(g.out_adj, g.in_adj, g.n) and _biconnected(
        _und_adj(g), g.n
    )


def strong_articulation_points_bruteforce(g: DiGraph) -> set[int]:
    """Vertices whose deletion breaks strong connectivity, by definition.

    Requires a strongly connected graph with n >= 3.
    """
    if g.n < 3:
        raise ValueError(f"strong articulation points require n >= 3, got n={g.n}")
    out_adj, in_adj, n = g.out_adj, g.in_adj, g.n
    if not _strongly_connected(out_adj, in_adj, n):
        raise ValueError("graph must be strongly connected")
    return {
        v for v in range(n) if not _strongly_connected(out_adj, in_adj, n, v)
    }


def is_2vertex_connected(g: DiGraph, method: str = "fast") -> bool:
    """Strongly connected, n >= 3, and no strong articulation point.

    ``method`` selects the articulation-point routine: "fast" uses the
    dominator-based algorithm, "brute" the per-vertex definition check.
    """
    if method not in ("fast", "brute"):
        raise ValueError(f"unknown method {method!r}")
    n = g.n
    if n < 3:
        return False
    for a in g.out_adj:
        if len(a) < 2:
            return False
    for a in g.in_adj:
        if len(a) < 2:
            return False
    if not _strongly_connected(g.out_adj, g.in_adj, n):
        return False
    if method == "brute":
        return not strong_articulation_points_bruteforce(g)
    from .dominators import strong_articulation_points_fast

    return not strong_articulation_points_fast(g)


def is_2v_strongly_biconnected(g: DiGraph) -> bool:
    """Strongly biconnected and still so after deleting any single vertex.

    Requires n >= 4: below that no graph satisfies the property under the
    tiny-graph biconnectivity conventions.
    """
    return _two_vsb_violation(g) is None


def b_articulation_points(g: DiGraph) -> set[int]:
    """Vertices whose deletion leaves a graph that is not strongly biconnected."""
    if g.n < 2:
        raise ValueError("b-articulation points require n >= 2")
    out_adj, in_adj, n = g.out_adj, g.in_adj, g.n
    und = _und_adj(g)
    return {
        v
        for v in range(n)
        if not (
            _strongly_connected(out_adj, in_adj, n, v) and _biconnected(und, n, v)
        )
    }


def _sbcc_comembership(g: DiGraph) -> tuple[tuple[int, ...], list[frozenset[int]]]:
    """SCC ids plus, per vertex, the block ids of its SCC's underlying graph.

    Two vertices lie in the same strongly biconnected component exactly when
    their SCC ids match and their block-id sets intersect.
    """
    part = scc(g)
    comp = part.comp
    class_members: list[list[int]] = [[] for _ in range(part.count)]
    for v, c in enumerate(comp):
        class_members[c].append(v)
    class_edges: list[list[tuple[int, int]]] = [[] for _ in range(part.count)]
    for a, b in g.edges:
        if comp[a] == comp[b]:
            class_edges[comp[a]].append((a, b))
    block_sets: list[set[int]] = [set() for _ in range(g.n)]
    next_block = 0
    for members, edges in zip(class_members, class_edges):
        pos = {v: i for i, v in enumerate(members)}
        sub = build(len(members), [(pos[a], pos[b]) for a, b in edges])
        for bl in blocks(underlying(sub)).blocks:
            for local in bl:
                block_sets[members[local]].add(next_block)
            next_block += 1
    return comp, [frozenset(s) for s in block_sets]


def same_sbcc(g: DiGraph, w: int, x: int) -> bool:
    """True iff w and x share an SCC and a block of that SCC's underlying graph."""
    if w == x:
        raise ValueError("vertices must be distinct")
    if not (0 <= w < g.n and 0 <= x < g.n):
        raise ValueError(f"vertex out of range [0, {g.n})")
    comp, block_sets = _sbcc_comembership(g)
    return comp[w] == comp[x] and not block_sets[w].isdisjoint(block_sets[x])
