"""Sources of critical instances for the property tests."""

from __future__ import annotations

import random
from functools import lru_cache

from ifk_partition import PrecoloredGraph, VertexState, is_critical, sharpness_graph, solve
from ifk_partition.graph import Graph, delete_edge, delete_vertex
from ifk_partition.solver import decrement

from oracles import random_precolored


def _moves(G: PrecoloredGraph):
    for e in G.edges:
        yield delete_edge(G, e)
    for v in range(G.n):
        yield delete_vertex(G, v)[0]
    for v, s in enumerate(G.states):
        if s.kind == "U" and s.j >= 1 or s.kind == "F" and s.j >= 2:
            yield G.with_state(v, decrement(s)[0])


def shrink_to_critical(G: PrecoloredGraph):
    """Greedily shrink an uncolorable instance until no single move keeps it uncolorable.

    Returns ``None`` when the result still fails criticality (only possible
    through the weight-0 ``F1`` decrement, which has no state to shrink to).
    """
    if solve(G) is not None:
        return None
    changed = True
    while changed:
        changed = False
        for H in _moves(G):
            if solve(H) is None:
                G, changed = H, True
                break
    return G if is_critical(G).is_critical else None


@lru_cache(maxsize=None)
def random_critical(k: int, count: int, seed: int, max_n: int = 10) -> tuple[PrecoloredGraph, ...]:
    rng = random.Random(seed)
    found: dict = {}
    tries = 0
    while len(found) < count and tries < 200 * count:
        tries += 1
        n = rng.randint(3, max_n)
        G = random_precolored(rng, n, k, p=rng.uniform(0.3, 0.7), p_pre=rng.uniform(0.0, 0.6))
        H = shrink_to_critical(G)
        if H is not None and H.n <= max_n:
            found.setdefault((H.n, H.edges, H.states), H)
    return tuple(found.values())


def known_critical(k: int) -> list[PrecoloredGraph]:
    K4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    out = [PrecoloredGraph(K4, k), sharpness_graph(k, 0)]
    if k <= 3:
        out.append(sharpness_graph(k, 1))
    # a single edge between F_k-ish vertices that overflow
    out.append(PrecoloredGraph(Graph(2, [(0, 1)]), k, (VertexState.F(k), VertexState.F(1))))
    return out
