"""
Gadgets: replacing precolored vertices by plain subgraphs
=========================================================

"""

from ifk_partition import PrecoloredGraph, VertexState, expand_precoloring, gadget, potential, solve, verify_gadget
from ifk_partition.graph import Graph

k = 3
F2, U1, I = VertexState.F(2), VertexState.U(1), VertexState.I()

# each gadget is a rooted graph; its potential equals the coefficient it imitates
for kind in (U1, F2, VertexState.F(3), I):
    rg = gadget(kind, k)
    H = PrecoloredGraph(rg.graph, k)
    print(f"{kind}: n={rg.graph.n} m={rg.graph.m} rho={potential(H, range(H.n))}")

# the root of a gadget can end up exactly where a precolored vertex could
verdict = verify_gadget(F2, k)
print("F2 gadget behaves:", verdict.passed, sorted(verdict.outcomes))

# expansion keeps both potential and colorability
G = PrecoloredGraph(Graph(3, [(0, 1), (1, 2)]), k, (F2, VertexState.U(0), I))
H, emb = expand_precoloring(G)
print("rho:", potential(G, range(G.n)), "->", potential(H, range(H.n)))
print("colorable:", solve(G) is not None, "->", solve(H) is not None)
