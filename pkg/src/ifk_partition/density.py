"""Potential coefficients, the mad threshold, minimum-potential sets and exact mad.

All arithmetic is exact: potentials are Python ints, densities are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .flow import INF, FlowNetwork, max_flow
from .graph import AnyGraph, Graph, GraphError, PrecoloredGraph, VertexState, _base

MODES = ("all", "nonempty", "proper")


@dataclass(frozen=True)
class CoefficientTable:
    """Vertex and edge weights of the potential for one value of ``k``.

    ``C_U[j]`` holds the ``U_j`` coefficient for ``0 <= j <= k`` and
    ``C_F[j - 1]`` the ``F_j`` coefficient for ``1 <= j <= k``.
    """

    k: int
    C_E: int
    C_U: tuple[int, ...]
    C_F: tuple[int, ...]
    C_I: int

    def cu(self, j: int) -> int:
        return self.C_U[j]

    def cf(self, j: int) -> int:
        if not 1 <= j <= self.k:
            raise IndexError(f"F index {j} outside 1..{self.k}")
        return self.C_F[j - 1]

    def of(self, state: VertexState) -> int:
        if state.kind == "U":
            return self.cu(state.j)
        if state.kind == "F":
            return self.cf(state.j)
        return self.C_I

    @property
    def low_regime_top(self) -> int:
        """Largest ``j`` with ``C_F[j] = C_E - 3j``."""
        return (self.k + 1) // 2

    @property
    def high_regime_start(self) -> int:
        """Smallest ``j`` with ``C_F[j] = 3(k - j)``."""
        return (self.k + 3) // 2


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")


def coefficients(k: int) -> CoefficientTable:
    _check_k(k)
    ce = 3 * k - 1 if k % 2 == 0 else 3 * k - 2
    cu0 = (3 * ce - 3) // 2
    cu = tuple(cu0 - 3 * j for j in range(k + 1))
    cf = []
    for j in range(1, k + 1):
        if j <= (k + 1) // 2:
            cf.append(ce - 3 * j)
        else:
            cf.append(3 * (k - j))
    ci = cu0 + cf[-1] - ce
    return CoefficientTable(k, ce, cu, tuple(cf), ci)


def f_threshold(k: int) -> Fraction:
    """The sharp mad bound: ``3 - 3/(3k-1)`` for even ``k``, ``3 - 3/(3k-2)`` for odd."""
    _check_k(k)
    return 3 - Fraction(3, 3 * k - 1 if k % 2 == 0 else 3 * k - 2)


def vertex_costs(G: PrecoloredGraph) -> list[int]:
    table = coefficients(G.k)
    return [table.of(s) for s in G.states]


def potential(G: PrecoloredGraph, R: Iterable[int]) -> int:
    table = coefficients(G.k)
    inside = set(R)
    for v in inside:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range [0, {G.n})")
    weight = sum(table.of(G.states[v]) for v in inside)
    e = sum(1 for u, v in G.edges if u in inside and v in inside)
    return weight - table.C_E * e


def project_selection(
    g: Graph,
    edge_profit: int,
    costs: Sequence[int],
    force_in: Iterable[int] = (),
    force_out: Iterable[int] = (),
) -> tuple[int, frozenset[int]]:
    """Maximize ``edge_profit * |E(R)| - sum(costs[R])`` over vertex sets ``R``.

    Network: source -> edge node (``edge_profit``), edge node -> both
    endpoints (infinite), vertex -> sink (its cost).  Forced-in vertices get an
    infinite source arc, forced-out ones an infinite sink arc.  Returns the
    optimum and the vertex part of the canonical min-cut source side.
    """
    m = g.m
    src, snk = 0, 1
    net = FlowNetwork(2 + m + g.n, src, snk)
    vbase = 2 + m
    for i, (u, v) in enumerate(g.edges):
        net.add_arc(src, 2 + i, edge_profit)
        net.add_arc(2 + i, vbase + u, INF)
        net.add_arc(2 + i, vbase + v, INF)
    out = set(force_out)
    for v in range(g.n):
        net.add_arc(vbase + v, snk, INF if v in out else costs[v])
    for v in force_in:
        net.add_arc(src, vbase + v, INF)
    cut, side = max_flow(net)
    R = frozenset(v for v in range(g.n) if vbase + v in side)
    return edge_profit * m - cut, R


def min_potential_subset(G: PrecoloredGraph, mode: str = "all") -> tuple[int, frozenset[int]]:
    """A vertex set of minimum potential, by min-cut.

    ``mode`` is ``"all"`` (the empty set allowed), ``"nonempty"`` or
    ``"proper"`` (nonempty and not all of ``V``; ``"nonempty-proper"`` is
    accepted as an alias).  The first optimum met in a fixed run order is
    returned, so the witness is deterministic.
    """
    if mode == "nonempty-proper":
        mode = "proper"
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    table = coefficients(G.k)
    costs = vertex_costs(G)
    g = G.graph

    runs: list[tuple[tuple[int, ...], tuple[int, ...]]]
    if mode == "all":
        runs = [((), ())]
    elif mode == "nonempty":
        if g.n == 0:
            raise ValueError("the empty graph has no nonempty vertex set")
        runs = [((v,), ()) for v in range(g.n)]
    else:
        if g.n < 2:
            raise ValueError("a graph with fewer than two vertices has no nonempty proper subset")
        # vertex 0 is either in R (some other vertex is out) or out (some other is in)
        runs = [((0,), (w,)) for w in range(1, g.n)] + [((w,), (0,)) for w in range(1, g.n)]

    best = None
    for fin, fout in runs:
        profit, R = project_selection(g, table.C_E, costs, fin, fout)
        value = -profit
        if best is None or value < best[0]:
            best = (value, R)
    return best


def mad(G: AnyGraph) -> tuple[Fraction, frozenset[int]]:
    """Exact maximum average degree and a vertex set attaining it.

    Keeps ``lo`` = density of the best set found and ``hi`` >= mad; each
    probe at ``mid`` asks whether some ``R`` has ``2|E(R)|/|R| > mid`` (one
    min-cut).  Two distinct densities with denominators at most ``n``
    differ by at least ``1/n^2``, so once ``hi - lo < 1/n^2`` the best set
    found is optimal.
    """
    g = _base(G)
    n = g.n
    if n == 0:
        raise GraphError("mad of the empty graph is undefined")
    witness = frozenset(range(n))
    lo = Fraction(2 * g.m, n)
    hi = Fraction(n - 1)
    gap = Fraction(1, n * n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        a, b = mid.numerator, mid.denominator
        profit, R = project_selection(g, 2 * b, [a] * n)
        if profit > 0:
            witness = R
            lo = Fraction(2 * sum(1 for u, v in g.edges if u in R and v in R), len(R))
        else:
            hi = mid
    return lo, witness
