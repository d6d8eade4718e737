"""
Planar graphs of large girth
============================

Planar girth >= 9 forces mad < 18/7 = f(3), so an (I,F_3)-coloring exists.
"""

from ifk_partition import PrecoloredGraph, girth, mad, solve
from ifk_partition.graph import Graph

# dodecahedron (20 vertices, 30 edges), every edge subdivided once: girth 10
dodeca = [(i, (i + 1) % 5) for i in range(5)]
dodeca += [(i, i + 5) for i in range(5)]
dodeca += [(5 + i, 10 + i) for i in range(5)] + [(10 + i, 5 + (i + 1) % 5) for i in range(5)]
dodeca += [(10 + i, 15 + i) for i in range(5)] + [(15 + i, 15 + (i + 1) % 5) for i in range(5)]
edges, n = [], 20
for u, v in dodeca:
    edges += [(u, n), (n, v)]
    n += 1
g = Graph(n, edges)
print("girth", girth(g), "mad", mad(g)[0])

c = solve(PrecoloredGraph(g, 3))
print("I:", c.labels.count("I"), "F:", c.labels.count("F"))
print("largest F-component:", max(comp.weight for comp in c.components))
