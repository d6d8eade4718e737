"""Sharpness graphs G_{k,t}, precoloring gadgets and gadget expansion."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .graph import AnyGraph, Graph, GraphError, PrecoloredGraph, U0, VertexState, _base, delete_edge
from .solver import BudgetExceeded, enumerate_colorings


def _rebuild(G: AnyGraph, n: int, edges) -> AnyGraph:
    g = Graph(n, edges)
    if isinstance(G, PrecoloredGraph):
        return G.with_graph(g, G.states + (U0,) * (n - G.n))
    return g


def add_pendent_triangles(G: AnyGraph, v: int, count: int) -> AnyGraph:
    """Glue ``count`` new triangles at ``v``; new vertices are appended and start as U0."""
    g = _base(G)
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range [0, {g.n})")
    if count < 0:
        raise ValueError("count must be non-negative")
    n = g.n
    edges = list(g.edges)
    for _ in range(count):
        a, b = n, n + 1
        edges += [(v, a), (a, b), (v, b)]
        n += 2
    return _rebuild(G, n, edges)


def add_two_threads(G: AnyGraph, y: int, z: int, count: int) -> AnyGraph:
    """Join ``y`` and ``z`` by ``count`` new paths ``y - y' - z' - z``."""
    g = _base(G)
    for x in (y, z):
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} out of range [0, {g.n})")
    if y == z:
        raise GraphError("a 2-thread needs distinct ends")
    if count < 0:
        raise ValueError("count must be non-negative")
    n = g.n
    edges = list(g.edges)
    for _ in range(count):
        a, b = n, n + 1
        edges += [(y, a), (a, b), (b, z)]
        n += 2
    return _rebuild(G, n, edges)


def sharpness_layout(k: int, t: int) -> list[str]:
    """Role name of every vertex of G_{k,t}, indexed by vertex id."""
    return _sharpness(k, t)[1]


def sharpness_graph(k: int, t: int) -> PrecoloredGraph:
    """The critical graph G_{k,t}, trivially precolored.

    Numbering: spine triangles ``v_j, w_j, x_j`` (ids ``3j, 3j+1, 3j+2``),
    then pendent-triangle vertices (at ``v_0``, ``w_0``, ``x_0``, then the
    extra one at ``v_t``), then 2-thread vertices for ``j = 1..t`` (to
    ``v_j``, ``w_j``, ``x_j`` in turn).
    """
    return _sharpness(k, t)[0]


def _sharpness(k: int, t: int):
    if k < 2 or t < 0:
        raise ValueError(f"need k >= 2 and t >= 0, got k={k}, t={t}")
    names = []
    edges = []
    for j in range(t + 1):
        v, w, x = 3 * j, 3 * j + 1, 3 * j + 2
        names += [f"v{j}", f"w{j}", f"x{j}"]
        edges += [(v, w), (w, x), (v, x)]
    g: Graph = Graph(3 * (t + 1), edges)

    def grow(op, *args, label):
        nonlocal g
        before = g.n
        g = op(g, *args)
        names.extend(f"{label}.{i}" for i in range(g.n - before))

    counts = ((k - 2) // 2, (k - 1) // 2, k // 2)
    for off, c, nm in zip(range(3), counts, "vwx"):
        grow(add_pendent_triangles, off, c, label=f"tri@{nm}0")
    grow(add_pendent_triangles, 3 * t, 1, label=f"tri@v{t}")
    for j in range(1, t + 1):
        src = 3 * (j - 1)
        for off, c, nm in zip(range(3), counts, "vwx"):
            grow(add_two_threads, src, 3 * j + off, c, label=f"thread v{j - 1}-{nm}{j}")
    return PrecoloredGraph(g, k), names


# --- gadgets ------------------------------------------------------------------


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int = 0

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise GraphError(f"root {self.root} not a vertex")


def _check_kind(kind: VertexState, k: int) -> None:
    if kind.kind == "U" and not 1 <= kind.j <= k - 1:
        raise GraphError(f"no gadget for {kind} when k={k}")
    kind.check(k)


def attach(host: Graph, at: int, gadget: RootedGraph) -> Graph:
    """Identify the gadget root with ``at``; other gadget vertices are appended in order."""
    gg = gadget.graph
    mapping = {}
    nxt = host.n
    for u in range(gg.n):
        if u == gadget.root:
            mapping[u] = at
        else:
            mapping[u] = nxt
            nxt += 1
    return Graph(nxt, list(host.edges) + [(mapping[a], mapping[b]) for a, b in gg.edges])


def _pendent_edge(to: RootedGraph) -> RootedGraph:
    # new root 0 joined to the root of `to`
    g = Graph(2, [(0, 1)])
    return RootedGraph(attach(g, 1, to), 0)


@lru_cache(maxsize=None)
def gadget(kind: VertexState, k: int) -> RootedGraph:
    """Trivially precolored rooted graph whose root behaves like a vertex in ``kind``.

    ``U(j)``: ``j`` pendent triangles.  ``F(j)``, ``j >= (k+3)//2``: a triangle
    ``v w x`` with ``j - (k+3)//2`` pendent triangles at ``v``,
    ``(k-1)//2`` at ``w`` and ``k//2`` at ``x``.  ``I``: an edge to the
    ``F(k)`` gadget.  ``F(1)``: an edge to the ``I`` gadget.  ``F(j)`` for
    ``1 < j <= (k+1)//2``: the ``F(1)`` gadget plus ``j - 1`` pendent
    triangles at the root.
    """
    _check_kind(kind, k)
    if kind.kind == "U":
        return RootedGraph(add_pendent_triangles(Graph(1), 0, kind.j), 0)
    if kind.kind == "I":
        return _pendent_edge(gadget(VertexState.F(k), k))
    j = kind.j
    switch = (k + 3) // 2
    if j >= switch:
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        g = add_pendent_triangles(g, 0, j - switch)
        g = add_pendent_triangles(g, 1, (k - 1) // 2)
        g = add_pendent_triangles(g, 2, k // 2)
        return RootedGraph(g, 0)
    base = _pendent_edge(gadget(VertexState.I(), k))
    return RootedGraph(add_pendent_triangles(base.graph, 0, j - 1), 0)


def expand_precoloring(G: PrecoloredGraph) -> tuple[PrecoloredGraph, list[int]]:
    """Replace every precolored vertex by its gadget.

    Returns the trivially precolored expansion and the embedding of the
    original vertices (identity on ids ``0..n-1``; gadget vertices follow).
    """
    g = G.graph
    for v, s in enumerate(G.states):
        if s != U0:
            g = attach(g, v, gadget(s, G.k))
    return PrecoloredGraph(g, G.k), list(range(G.n))


# --- gadget verification ------------------------------------------------------


@dataclass
class GadgetVerdict:
    kind: VertexState
    k: int
    outcomes: frozenset = frozenset()
    failures: list[str] = field(default_factory=list)
    i_only_relaxations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def root_outcomes(g: Graph, root: int, k: int, max_nodes: Optional[int] = None) -> frozenset:
    """Set of ``("I", None)`` / ``("F", weight)`` root outcomes over all colorings."""
    G = PrecoloredGraph(g, k)
    out = set()
    for labels in enumerate_colorings(G, max_nodes=max_nodes):
        if labels[root] == "I":
            out.add(("I", None))
            continue
        seen = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if labels[w] == "F" and w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.add(("F", len(seen)))
    return frozenset(out)


def verify_gadget(kind: VertexState, k: int, max_nodes: Optional[int] = 2_000_000) -> GadgetVerdict:
    """Check by exhaustive enumeration that the gadget simulates ``kind``.

    Also checks that deleting any single gadget edge relaxes the root.  For
    ``U(j)``: some coloring has the root in F with component weight at most
    ``j``.  For ``F(j)``: some coloring has the root in I or in F with weight
    at most ``j - 1`` (an I root counts as a component of order 0).  Edges
    where only the I option relaxes an ``F(j)`` root are listed in
    ``verdict.i_only_relaxations``.
    """
    rg = gadget(kind, k)
    g, root = rg.graph, rg.root
    outcomes = root_outcomes(g, root, k, max_nodes)
    verdict = GadgetVerdict(kind, k, outcomes)
    fail = verdict.failures.append
    f_weights = sorted(w for lab, w in outcomes if lab == "F")
    has_i = ("I", None) in outcomes
    if not outcomes:
        fail("gadget has no coloring")
    if kind.kind == "U":
        j = kind.j
        if any(w < j + 1 for w in f_weights):
            fail(f"root in F with weight {f_weights[0]} < {j + 1}")
        if not has_i:
            fail("no coloring puts the root in I")
        if ("F", j + 1) not in outcomes:
            fail(f"no coloring puts the root in F with weight exactly {j + 1}")
    elif kind.kind == "F":
        j = kind.j
        if has_i:
            fail("some coloring puts the root in I")
        if any(w < j for w in f_weights):
            fail(f"root in F with weight {f_weights[0]} < {j}")
        if ("F", j) not in outcomes:
            fail(f"no coloring puts the root in F with weight exactly {j}")
    else:
        if f_weights:
            fail("some coloring puts the root in F")

    if kind.kind in ("U", "F"):
        j = kind.j
        for e in g.edges:
            sub = root_outcomes(delete_edge(g, e), root, k, max_nodes)
            if kind.kind == "U":
                ok = any(lab == "F" and w <= j for lab, w in sub)
            else:
                lighter = any(lab == "F" and w <= j - 1 for lab, w in sub)
                ok = lighter or ("I", None) in sub
                if ok and not lighter:
                    verdict.i_only_relaxations.append(e)
            if not ok:
                fail(f"deleting edge {e[0]} {e[1]} does not relax the root")
    return verdict


__all__ = [
    "BudgetExceeded",
    "GadgetVerdict",
    "RootedGraph",
    "add_pendent_triangles",
    "add_two_threads",
    "attach",
    "expand_precoloring",
    "gadget",
    "root_outcomes",
    "sharpness_graph",
    "sharpness_layout",
    "verify_gadget",
]
