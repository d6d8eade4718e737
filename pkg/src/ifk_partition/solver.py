"""Exact (I,F_k)-coloring of precolored graphs, verification and criticality."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Sequence

from .graph import GraphError, PrecoloredGraph, VertexState, delete_edge, delete_vertex

I, F = "I", "F"
_FREE, _F, _I = 0, 1, 2


class BudgetExceeded(RuntimeError):
    """The search hit its node budget before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exceeded")
        self.nodes = nodes


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class FComponent:
    vertices: tuple[int, ...]
    weight: int


@dataclass(frozen=True)
class Coloring:
    """Labels ``"I"``/``"F"`` per vertex plus the F-components they induce.

    ``component_of[v]`` indexes ``components`` for F vertices and is ``None``
    for I vertices; components are numbered by smallest member.
    """

    labels: tuple[str, ...]
    components: tuple[FComponent, ...] = ()
    component_of: tuple[Optional[int], ...] = ()

    @classmethod
    def from_labels(
        cls,
        G: PrecoloredGraph,
        labels: Sequence[str],
        weights: Optional[Mapping[int, int]] = None,
    ) -> "Coloring":
        labels = tuple(labels)
        if len(labels) != G.n:
            raise ColoringError(f"{len(labels)} labels for {G.n} vertices")
        base = _base_weights(G, weights)
        comp_of: list[Optional[int]] = [None] * G.n
        comps = []
        for s in range(G.n):
            if labels[s] != F or comp_of[s] is not None:
                continue
            idx = len(comps)
            comp_of[s] = idx
            members = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in G.adj[u]:
                    if labels[w] == F and comp_of[w] is None:
                        comp_of[w] = idx
                        members.append(w)
                        stack.append(w)
            members.sort()
            comps.append(FComponent(tuple(members), sum(base[v] for v in members)))
        return cls(labels, tuple(comps), tuple(comp_of))


@dataclass(frozen=True)
class Violation:
    kind: str  # "edge-in-I", "overweight" or "f-cycle"
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()
    weight: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "edge-in-I":
            return f"edge-in-I {self.edges[0][0]} {self.edges[0][1]}"
        if self.kind == "overweight":
            return f"overweight component {list(self.vertices)} weight {self.weight}"
        return f"f-cycle in component {list(self.vertices)} edges {list(self.edges)}"


def _base_weights(G: PrecoloredGraph, weights: Optional[Mapping[int, int]] = None) -> list[int]:
    base = [0 if s.kind == "I" else s.f_weight() for s in G.states]
    if weights:
        for v, w in weights.items():
            base[v] = w
    return base


def verify(
    G: PrecoloredGraph,
    c: Coloring | Sequence[str],
    weights: Optional[Mapping[int, int]] = None,
) -> list[Violation]:
    """All violations of ``c`` as a coloring of ``G``; empty means valid.

    ``weights`` overrides the F-weight of individual vertices (used for the
    weight-0 state that decrementing ``F1`` produces).  Raises
    :class:`ColoringError` if a label contradicts the precoloring.
    """
    labels = c.labels if isinstance(c, Coloring) else tuple(c)
    if len(labels) != G.n:
        raise ColoringError(f"{len(labels)} labels for {G.n} vertices")
    for v, (lab, s) in enumerate(zip(labels, G.states)):
        if lab not in (I, F):
            raise ColoringError(f"vertex {v} has label {lab!r}")
        if s.kind == "I" and lab != I:
            raise ColoringError(f"vertex {v} is precolored I but labeled {lab}")
        if s.kind == "F" and lab != F:
            raise ColoringError(f"vertex {v} is precolored F{s.j} but labeled {lab}")
    coloring = Coloring.from_labels(G, labels, weights)
    out = []
    for u, v in G.edges:
        if labels[u] == I and labels[v] == I:
            out.append(Violation("edge-in-I", (u, v), ((u, v),)))
    for comp in coloring.components:
        members = set(comp.vertices)
        if comp.weight > G.k:
            out.append(Violation("overweight", comp.vertices, weight=comp.weight))
        inner = tuple((u, v) for u, v in G.edges if u in members and v in members)
        if len(inner) >= len(members):
            out.append(Violation("f-cycle", comp.vertices, inner))
    return out


class _Search:
    """Backtracking over I/F labels with an undoable weighted union-find.

    Union-find runs without path compression (union by size) so each merge
    can be undone from the trail.  Fake neighbors only contribute weight.
    ``inbr[v]`` counts the I-labelled neighbors of ``v``.
    """

    def __init__(self, G: PrecoloredGraph, weights=None, max_nodes=None):
        self.n = G.n
        self.k = G.k
        self.adj = G.adj
        self.base = _base_weights(G, weights)
        self.states = G.states
        self.max_nodes = max_nodes
        self.nodes = 0
        self.label = [_FREE] * self.n
        self.inbr = [0] * self.n
        self.parent = list(range(self.n))
        self.weight = list(self.base)
        self.members = [[v] for v in range(self.n)]
        self.trail: list[tuple] = []
        self.order = sorted(range(self.n), key=lambda v: (-len(self.adj[v]), v))

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            v = p[v]
        return v

    def _f_roots(self, v: int):
        """Roots of F-neighbors, or ``None`` if F is impossible (cycle or overweight)."""
        roots = []
        total = self.base[v]
        label = self.label
        parent = self.parent
        for u in self.adj[v]:
            if label[u] == _F:
                while parent[u] != u:
                    u = parent[u]
                if u in roots:
                    return None
                roots.append(u)
                total += self.weight[u]
        if total > self.k:
            return None
        return roots

    def can_i(self, v: int) -> bool:
        return not self.inbr[v]

    def _merge(self, v: int, roots) -> None:
        self.label[v] = _F
        trail = self.trail
        trail.append(("F", v))
        members, weight, parent = self.members, self.weight, self.parent
        r = v
        for s in roots:
            a, b = (r, s) if len(members[r]) >= len(members[s]) else (s, r)
            parent[b] = a  # b hangs under a
            trail.append(("U", a, b, weight[a]))
            weight[a] += weight[b]
            members[a].extend(members[b])
            r = a

    def set_f(self, v: int) -> bool:
        roots = self._f_roots(v)
        if roots is None:
            return False
        self._merge(v, roots)
        return True

    def _mark_i(self, v: int) -> None:
        self.label[v] = _I
        self.trail.append(("I", v))
        inbr = self.inbr
        for u in self.adj[v]:
            inbr[u] += 1

    def set_i(self, v: int) -> bool:
        if self.inbr[v]:
            return False
        self._mark_i(v)
        return True

    def undo(self, mark: int) -> None:
        trail = self.trail
        label, inbr = self.label, self.inbr
        while len(trail) > mark:
            rec = trail.pop()
            tag = rec[0]
            if tag == "F":
                label[rec[1]] = _FREE
            elif tag == "I":
                v = rec[1]
                label[v] = _FREE
                for u in self.adj[v]:
                    inbr[u] -= 1
            else:
                _, a, b, w = rec
                self.parent[b] = b
                self.weight[a] = w
                del self.members[a][len(self.members[a]) - len(self.members[b]):]

    def propagate(self, queue: list[int]) -> bool:
        """Force every free vertex that has only one option left."""
        label, inbr, adj = self.label, self.inbr, self.adj
        while queue:
            u = queue.pop()
            if label[u] != _FREE:
                continue
            roots = self._f_roots(u)
            if roots is not None:
                if not inbr[u]:
                    continue
                self._merge(u, roots)
                for x in self.members[self.find(u)]:
                    queue.extend(w for w in adj[x] if label[w] == _FREE)
            elif not inbr[u]:
                self._mark_i(u)
                queue.extend(w for w in adj[u] if label[w] == _FREE)
            else:
                return False
        return True

    def touched(self, v: int) -> list[int]:
        label = self.label
        if label[v] == _I:
            return [w for w in self.adj[v] if label[w] == _FREE]
        return [w for x in self.members[self.find(v)] for w in self.adj[x] if label[w] == _FREE]

    def start(self) -> bool:
        for v, s in enumerate(self.states):
            if s.kind == "F" and not self.set_f(v):
                return False
        for v, s in enumerate(self.states):
            if s.kind == "I" and not self.set_i(v):
                return False
        return self.propagate([v for v in range(self.n) if self.label[v] == _FREE])

    def next_free(self) -> int:
        """Most constrained free vertex, then highest degree.

        The score is the number of labelled neighbors plus the weight the
        vertex would carry if it joined F now, so vertices about to overflow
        a component are decided first.
        """
        label, adj, parent, weight = self.label, self.adj, self.parent, self.weight
        best, key = -1, (-1, -1)
        for v in self.order:
            if label[v] != _FREE:
                continue
            score = self.base[v]
            roots = []
            for u in adj[v]:
                x = label[u]
                if x != _FREE:
                    score += 1
                    if x == _F:
                        while parent[u] != u:
                            u = parent[u]
                        if u not in roots:
                            roots.append(u)
                            score += weight[u]
            if (score, len(adj[v])) > key:
                best, key = v, (score, len(adj[v]))
        return best

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(self.max_nodes)

    def solutions(self) -> Iterator[tuple[str, ...]]:
        """Every valid labelling, depth first, F before I."""
        v = self.next_free()
        if v < 0:
            yield tuple(F if x == _F else I for x in self.label)
            return
        for setter in (self.set_f, self.set_i):
            self.tick()
            mark = len(self.trail)
            if setter(v) and self.propagate(self.touched(v)):
                yield from self.solutions()
            self.undo(mark)


def _run(G: PrecoloredGraph, weights=None, max_nodes=None, limit=None) -> list[tuple[str, ...]]:
    search = _Search(G, weights, max_nodes)
    if not search.start():
        return []
    out = []
    depth = sys.getrecursionlimit()
    if depth < 4 * G.n + 200:
        sys.setrecursionlimit(4 * G.n + 200)
    for sol in search.solutions():
        out.append(sol)
        if limit is not None and len(out) >= limit:
            break
    return out


def solve(
    G: PrecoloredGraph,
    *,
    max_nodes: Optional[int] = None,
    weights: Optional[Mapping[int, int]] = None,
) -> Optional[Coloring]:
    """An (I,F_k)-coloring of ``G``, or ``None`` if none exists.

    Vertices are branched in order of decreasing degree (ties by id), F
    first.  Raises :class:`BudgetExceeded` if ``max_nodes`` is given and the
    search needs more branch nodes.
    """
    sols = _run(G, weights, max_nodes, limit=1)
    if not sols:
        return None
    return Coloring.from_labels(G, sols[0], weights)


def enumerate_colorings(G: PrecoloredGraph, *, limit: Optional[int] = None, max_nodes: Optional[int] = None):
    """All colorings of ``G`` (as label tuples), in search order."""
    return _run(G, None, max_nodes, limit)


# --- criticality -------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """A coloring showing that one reduced instance of ``G`` is colorable."""

    kind: str  # "edge", "vertex" or "decrement"
    target: tuple[int, ...]
    instance: PrecoloredGraph
    coloring: Coloring
    weights: Optional[dict[int, int]] = None

    def check(self) -> bool:
        return not verify(self.instance, self.coloring, self.weights)


@dataclass(frozen=True)
class CriticalityVerdict:
    is_critical: bool
    reason: str  # "critical", "colorable", "edge", "vertex" or "decrement"
    coloring: Optional[Coloring] = None
    failing: Optional[tuple[int, ...]] = None
    certificates: tuple[Certificate, ...] = field(default=(), repr=False)

    def __str__(self) -> str:
        if self.is_critical:
            return "critical"
        if self.reason == "colorable":
            return "not critical: the graph is colorable"
        what = {"edge": "deleting edge", "vertex": "deleting vertex", "decrement": "decrementing vertex"}
        return f"not critical: {what[self.reason]} {' '.join(map(str, self.failing))} leaves it uncolorable"


def decrement(state: VertexState) -> tuple[VertexState, Optional[int]]:
    """State after lowering the index by one, plus a weight override.

    ``F1`` has no lower state; it becomes an F vertex of weight 0, returned
    as ``(F1, 0)`` so callers pass the override to :func:`solve`.
    """
    if state.kind == "U" and state.j >= 1:
        return VertexState.U(state.j - 1), None
    if state.kind == "F" and state.j >= 2:
        return VertexState.F(state.j - 1), None
    if state.kind == "F" and state.j == 1:
        return state, 0
    raise GraphError(f"state {state} cannot be decremented")


def is_critical(G: PrecoloredGraph, *, max_nodes: Optional[int] = None) -> CriticalityVerdict:
    """Decide (I,F_k)-criticality.

    Checks that ``G`` is uncolorable while every single-edge deletion, every
    single-vertex deletion and every single decrement of a precolored index is
    colorable.  Colorability is monotone under taking subgraphs, so single
    deletions cover all proper subgraphs.
    """
    base = solve(G, max_nodes=max_nodes)
    if base is not None:
        return CriticalityVerdict(False, "colorable", coloring=base)
    certs = []
    for e in G.edges:
        H = delete_edge(G, e)
        c = solve(H, max_nodes=max_nodes)
        if c is None:
            return CriticalityVerdict(False, "edge", failing=e)
        certs.append(Certificate("edge", e, H, c))
    for v in range(G.n):
        H, _ = delete_vertex(G, v)
        c = solve(H, max_nodes=max_nodes)
        if c is None:
            return CriticalityVerdict(False, "vertex", failing=(v,))
        certs.append(Certificate("vertex", (v,), H, c))
    for v, s in enumerate(G.states):
        if s.kind == "I" or s == VertexState.U(0):
            continue
        new_state, w = decrement(s)
        H = G.with_state(v, new_state)
        weights = {v: w} if w is not None else None
        c = solve(H, max_nodes=max_nodes, weights=weights)
        if c is None:
            return CriticalityVerdict(False, "decrement", failing=(v,))
        certs.append(Certificate("decrement", (v,), H, c, weights))
    return CriticalityVerdict(True, "critical", certificates=tuple(certs))




# --- coloring file format ----------------------------------------------------


def format_coloring(c: Coloring) -> str:
    """``v <id> I`` or ``v <id> F <component> <weight>`` per vertex."""
    lines = []
    for v, lab in enumerate(c.labels):
        if lab == I:
            lines.append(f"v {v} I")
        else:
            idx = c.component_of[v]
            lines.append(f"v {v} F {idx} {c.components[idx].weight}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_coloring(text, n: int) -> tuple[str, ...]:
    """Labels from the coloring format; component and weight fields are ignored."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    labels: list[Optional[str]] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] != "v" or len(tok) < 3 or tok[2] not in (I, F):
            raise ColoringError(f"line {lineno}: expected 'v <id> I' or 'v <id> F ...'")
        if (tok[2] == I and len(tok) != 3) or (tok[2] == F and len(tok) not in (3, 5)):
            raise ColoringError(f"line {lineno}: wrong number of fields")
        try:
            v = int(tok[1])
        except ValueError:
            raise ColoringError(f"line {lineno}: bad vertex id {tok[1]!r}") from None
        if not 0 <= v < n:
            raise ColoringError(f"line {lineno}: vertex {v} out of range [0, {n})")
        if labels[v] is not None:
            raise ColoringError(f"line {lineno}: vertex {v} labeled twice")
        labels[v] = tok[2]
    missing = [v for v, lab in enumerate(labels) if lab is None]
    if missing:
        raise ColoringError(f"unlabeled vertices: {missing}")
    return tuple(labels)


def to_dot(G: PrecoloredGraph, c: Coloring) -> str:
    """DOT drawing: I vertices black, F vertices white."""
    lines = ["graph coloring {", "  node [shape=circle, style=filled];"]
    for v, lab in enumerate(c.labels):
        if lab == I:
            lines.append(f'  {v} [fillcolor=black, fontcolor=white];')
        else:
            lines.append(f'  {v} [fillcolor=white];')
    lines.extend(f"  {u} -- {v};" for u, v in G.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
