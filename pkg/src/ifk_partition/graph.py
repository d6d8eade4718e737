"""Simple graphs, precolorings, and the line-oriented graph file format."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        seen = set()
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise GraphError(f"vertex {x} out of range [0, {self.n})")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e[0]} {e[1]}")
            seen.add(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)


@dataclass(frozen=True)
class VertexState:
    """Precoloring state of a vertex: ``U(j)``, ``F(j)`` or ``I``.

    ``U(j)``: uncolored with ``j`` fake F-neighbors.  ``F(j)``: colored F,
    counting as ``j`` vertices of its F-component (itself plus ``j-1`` fake
    neighbors).  ``I``: colored I.
    """

    kind: str
    j: int = 0

    @staticmethod
    def U(j: int = 0) -> "VertexState":
        return VertexState("U", j)

    @staticmethod
    def F(j: int) -> "VertexState":
        return VertexState("F", j)

    @staticmethod
    def I() -> "VertexState":  # noqa: E743
        return VertexState("I", 0)

    def check(self, k: int) -> None:
        if self.kind == "U":
            ok = 0 <= self.j <= k - 1
        elif self.kind == "F":
            ok = 1 <= self.j <= k
        elif self.kind == "I":
            ok = self.j == 0
        else:
            ok = False
        if not ok:
            raise GraphError(f"state {self} out of bounds for k={k}")

    @property
    def is_free(self) -> bool:
        return self.kind == "U"

    def f_weight(self) -> int:
        """Weight the vertex adds to its F-component when colored F."""
        if self.kind == "U":
            return self.j + 1
        if self.kind == "F":
            return self.j
        raise GraphError("an I vertex has no F-weight")

    def __str__(self) -> str:
        return "I" if self.kind == "I" else f"{self.kind}{self.j}"


U0 = VertexState.U(0)


@dataclass(frozen=True)
class PrecoloredGraph:
    graph: Graph
    k: int
    states: tuple[VertexState, ...] = ()

    def __post_init__(self):
        if self.k < 2:
            raise GraphError(f"k must be at least 2, got {self.k}")
        states = tuple(self.states) if self.states else (U0,) * self.graph.n
        if len(states) != self.graph.n:
            raise GraphError(f"{len(states)} states for {self.graph.n} vertices")
        for s in states:
            s.check(self.k)
        object.__setattr__(self, "states", states)

    @classmethod
    def trivial(cls, graph: Graph, k: int) -> "PrecoloredGraph":
        return cls(graph, k)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def edges(self):
        return self.graph.edges

    @property
    def adj(self):
        return self.graph.adj

    @property
    def is_trivial(self) -> bool:
        return all(s == U0 for s in self.states)

    def with_graph(self, graph: Graph, states: Sequence[VertexState] | None = None) -> "PrecoloredGraph":
        return PrecoloredGraph(graph, self.k, tuple(states) if states is not None else self.states)

    def with_state(self, v: int, state: VertexState) -> "PrecoloredGraph":
        states = list(self.states)
        states[v] = state
        return PrecoloredGraph(self.graph, self.k, tuple(states))


AnyGraph = Union[Graph, PrecoloredGraph]


def _base(G: AnyGraph) -> Graph:
    return G.graph if isinstance(G, PrecoloredGraph) else G


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range [0, {g.n})")


def induced_subgraph(G: AnyGraph, R: Iterable[int]):
    """Subgraph induced by ``R``, relabelled to ``0..|R|-1`` in increasing id order.

    Returns ``(H, mapping)`` with ``mapping[old] = new``.  Precolorings are
    carried over when ``G`` is precolored.
    """
    g = _base(G)
    verts = sorted(set(R))
    for v in verts:
        _check_vertex(g, v)
    mapping = {v: i for i, v in enumerate(verts)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges if u in mapping and v in mapping]
    h = Graph(len(verts), edges)
    if isinstance(G, PrecoloredGraph):
        return G.with_graph(h, [G.states[v] for v in verts]), mapping
    return h, mapping


def delete_edge(G: AnyGraph, e: tuple[int, int]) -> AnyGraph:
    g = _base(G)
    u, v = e
    key = (u, v) if u < v else (v, u)
    if key not in set(g.edges):
        raise GraphError(f"no edge {u} {v}")
    h = Graph(g.n, [x for x in g.edges if x != key])
    return G.with_graph(h) if isinstance(G, PrecoloredGraph) else h


def delete_vertex(G: AnyGraph, v: int):
    """Remove ``v`` and its edges; returns ``(H, mapping)`` like :func:`induced_subgraph`."""
    g = _base(G)
    _check_vertex(g, v)
    return induced_subgraph(G, (u for u in range(g.n) if u != v))


def girth(G: AnyGraph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    g = _base(G)
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def connected_components(G: AnyGraph) -> list[list[int]]:
    """Components as sorted id lists, ordered by smallest member."""
    g = _base(G)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def edges_within(g: Graph, R: Iterable[int]) -> int:
    inside = set(R)
    return sum(1 for u, v in g.edges if u in inside and v in inside)


# --- file format -----------------------------------------------------------


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(lineno, f"expected integer {what}, got {tok!r}") from None


def parse_graph(text: Union[str, bytes]) -> PrecoloredGraph:
    """Parse the ``k``/``n``/``e``/``pre`` line format.

    Unlisted vertices are ``U0``.  Every error carries the offending line number.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    k = n = None
    edges: dict[tuple[int, int], int] = {}
    pre: dict[int, VertexState] = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head = tok[0]
        if k is None and head != "k":
            raise GraphFormatError(lineno, "first directive must be 'k <int>'")
        if head == "k":
            if k is not None:
                raise GraphFormatError(lineno, "repeated 'k' directive")
            if len(tok) != 2:
                raise GraphFormatError(lineno, "expected 'k <int>'")
            k = _int(tok[1], lineno, "k")
            if k < 2:
                raise GraphFormatError(lineno, f"k must be at least 2, got {k}")
        elif head == "n":
            if n is not None:
                raise GraphFormatError(lineno, "repeated 'n' directive")
            if len(tok) != 2:
                raise GraphFormatError(lineno, "expected 'n <int>'")
            n = _int(tok[1], lineno, "n")
            if n < 0:
                raise GraphFormatError(lineno, "negative vertex count")
        elif head in ("e", "pre"):
            if n is None:
                raise GraphFormatError(lineno, f"'{head}' before 'n'")
            if head == "e":
                if len(tok) != 3:
                    raise GraphFormatError(lineno, "expected 'e <u> <v>'")
                u, v = _int(tok[1], lineno, "vertex"), _int(tok[2], lineno, "vertex")
                for x in (u, v):
                    if not 0 <= x < n:
                        raise GraphFormatError(lineno, f"vertex {x} out of range [0, {n})")
                if u == v:
                    raise GraphFormatError(lineno, f"self-loop at vertex {u}")
                key = (min(u, v), max(u, v))
                if key in edges:
                    raise GraphFormatError(lineno, f"duplicate edge {u} {v} (first on line {edges[key]})")
                edges[key] = lineno
            else:
                if len(tok) < 3:
                    raise GraphFormatError(lineno, "expected 'pre <v> U|F <j>' or 'pre <v> I'")
                v = _int(tok[1], lineno, "vertex")
                if not 0 <= v < n:
                    raise GraphFormatError(lineno, f"vertex {v} out of range [0, {n})")
                if v in pre:
                    raise GraphFormatError(lineno, f"vertex {v} precolored twice")
                kind = tok[2]
                if kind == "I" and len(tok) == 3:
                    state = VertexState.I()
                elif kind in ("U", "F") and len(tok) == 4:
                    state = VertexState(kind, _int(tok[3], lineno, "index"))
                else:
                    raise GraphFormatError(lineno, f"bad precoloring {' '.join(tok[2:])!r}")
                try:
                    state.check(k)
                except GraphError as exc:
                    raise GraphFormatError(lineno, str(exc)) from None
                pre[v] = state
        else:
            raise GraphFormatError(lineno, f"unknown directive {head!r}")
    if k is None:
        raise GraphFormatError(lineno + 1, "missing 'k' directive")
    if n is None:
        raise GraphFormatError(lineno + 1, "missing 'n' directive")
    states = tuple(pre.get(v, U0) for v in range(n))
    return PrecoloredGraph(Graph(n, list(edges)), k, states)


def serialize_graph(G: PrecoloredGraph, header: Sequence[str] = ()) -> str:
    """Canonical text form: sorted edges, then sorted non-``U0`` precolorings."""
    lines = [f"# {h}" if h else "#" for h in header]
    lines.append(f"k {G.k}")
    lines.append(f"n {G.n}")
    lines.extend(f"e {u} {v}" for u, v in G.edges)
    for v, s in enumerate(G.states):
        if s == U0:
            continue
        lines.append(f"pre {v} I" if s.kind == "I" else f"pre {v} {s.kind} {s.j}")
    return "\n".join(lines) + "\n"


def comment_lines(text: Union[str, bytes]) -> list[str]:
    """Full-line comments with the leading ``#`` and whitespace stripped."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    out = []
    for raw in text.splitlines():
        s = raw.strip()
        if s.startswith("#"):
            out.append(s[1:].strip())
    return out
