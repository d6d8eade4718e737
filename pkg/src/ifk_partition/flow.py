"""Integral max-flow / min-cut on small directed networks."""

from __future__ import annotations

from collections import deque
from typing import Optional

INF = None  # marker for an uncuttable arc; resolved to a sentinel at solve time


class FlowNetwork:
    """Directed network with integer capacities.

    Arcs added with capacity ``INF`` get the sentinel ``1 + sum(finite
    capacities)``, which no finite cut can reach.
    """

    def __init__(self, num_nodes: int, source: int, sink: int):
        if source == sink:
            raise ValueError("source and sink must differ")
        for x in (source, sink):
            if not 0 <= x < num_nodes:
                raise ValueError(f"node {x} out of range")
        self.num_nodes = num_nodes
        self.source = source
        self.sink = sink
        self.arcs: list[tuple[int, int, Optional[int]]] = []

    def add_arc(self, u: int, v: int, cap: Optional[int]) -> None:
        if not (0 <= u < self.num_nodes and 0 <= v < self.num_nodes):
            raise ValueError(f"arc ({u}, {v}) has an endpoint out of range")
        if cap is not None and (not isinstance(cap, int) or cap < 0):
            raise ValueError(f"capacity must be a non-negative integer, got {cap!r}")
        self.arcs.append((u, v, cap))

    @property
    def infinity(self) -> int:
        return 1 + sum(c for _, _, c in self.arcs if c is not None)


def max_flow(net: FlowNetwork) -> tuple[int, frozenset[int]]:
    """Dinic's algorithm.

    Returns the flow value and the source side of the minimum cut made of all
    nodes reachable from the source in the final residual graph (the unique
    inclusion-minimal minimum cut).
    """
    n = net.num_nodes
    s, t = net.source, net.sink
    big = net.infinity
    head = [[] for _ in range(n)]
    to: list[int] = []
    cap: list[int] = []
    for u, v, c in net.arcs:
        c = big if c is None else c
        head[u].append(len(to))
        to.append(v)
        cap.append(c)
        head[v].append(len(to))
        to.append(u)
        cap.append(0)

    flow = 0
    while True:
        level = [-1] * n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for a in head[u]:
                if cap[a] > 0 and level[to[a]] < 0:
                    level[to[a]] = level[u] + 1
                    q.append(to[a])
        if level[t] < 0:
            break
        it = [0] * n
        while True:
            pushed = _augment(s, t, head, to, cap, level, it)
            if not pushed:
                break
            flow += pushed

    seen = [False] * n
    seen[s] = True
    stack = [s]
    while stack:
        u = stack.pop()
        for a in head[u]:
            if cap[a] > 0 and not seen[to[a]]:
                seen[to[a]] = True
                stack.append(to[a])
    return flow, frozenset(i for i in range(n) if seen[i])


def _augment(s, t, head, to, cap, level, it) -> int:
    # one augmenting path in the level graph, found iteratively
    path: list[int] = []
    u = s
    while True:
        if u == t:
            f = min(cap[a] for a in path)
            for a in path:
                cap[a] -= f
                cap[a ^ 1] += f
            return f
        arcs = head[u]
        while it[u] < len(arcs):
            a = arcs[it[u]]
            if cap[a] > 0 and level[to[a]] == level[u] + 1:
                break
            it[u] += 1
        if it[u] < len(arcs):
            a = arcs[it[u]]
            path.append(a)
            u = to[a]
        else:
            level[u] = -1  # dead end
            if not path:
                return 0
            a = path.pop()
            u = to[a ^ 1]
            it[u] += 1
