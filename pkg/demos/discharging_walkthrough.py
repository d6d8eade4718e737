"""
Discharging on a small graph
============================

Charges start at C_E d(v) - 2 C(v); the rules move charge without changing the sum.
"""

from ifk_partition import PrecoloredGraph, discharge
from ifk_partition.discharging import report_tsv
from ifk_partition.graph import Graph

# a triangle with a pendant path, k=3
g = Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])
r = discharge(PrecoloredGraph(g, 3))
print(report_tsv(r))

# the total is -2 rho(V) before and after the rules
print(r.total_initial, r.total_final, -2 * r.rho)
