"""
The sharpness family G_{k,t}
============================

Graphs whose mad sits just above f(k) yet admit no (I,F_k)-coloring.
"""

from ifk_partition import f_threshold, is_critical, mad, potential, sharpness_graph, sharpness_layout, solve
from ifk_partition.graph import delete_edge

k = 3
for t in range(4):
    G = sharpness_graph(k, t)
    value, _ = mad(G)
    print(f"G_{{{k},{t}}}: n={G.n:3d} m={G.m:3d} mad={value} > {f_threshold(k)}  rho(V)={potential(G, range(G.n))}")

# the first member, vertex by vertex
G = sharpness_graph(3, 0)
for v, name in enumerate(sharpness_layout(3, 0)):
    print(v, name)

# uncolorable, but losing any single edge makes it colorable
print("colorable:", solve(G) is not None)
print("after deleting each edge:", all(solve(delete_edge(G, e)) is not None for e in G.edges))

# the certificate-backed criticality check says the same
print(is_critical(G))
