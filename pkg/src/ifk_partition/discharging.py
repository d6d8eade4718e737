"""Initial charges, the discharging rules, and their global identities.

Charges are ``C_E * d(v) - 2 * coefficient(v)``, so they always sum to
``-2 * potential(V)``.  For even ``k`` the single rule is: every ``U_l``
vertex of degree 2 takes 1 from each neighbor, ``l = k/2 - 1``.  For odd
``k``, ``l = (k-3)/2``: every degree-2 ``U_l`` vertex takes 2 from each
neighbor, and every needy vertex (``U_0``, degree 3, exactly two neighbors
that are degree-2 ``U_l``) takes 1 from its remaining neighbor.  All
transfers are computed from the initial classification and applied at once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .density import coefficients, potential
from .graph import GraphError, PrecoloredGraph, VertexState


def ell(k: int) -> int:
    return k // 2 - 1 if k % 2 == 0 else (k - 3) // 2


@dataclass(frozen=True)
class VertexClass:
    state: VertexState
    degree: int
    needy: bool = False

    def __str__(self) -> str:
        if self.state.kind == "I":
            s = f"I^{self.degree}"
        else:
            s = f"{self.state.kind}^{self.degree}_{self.state.j}"
        return s + ("*" if self.needy else "")


def classify(G: PrecoloredGraph) -> list[VertexClass]:
    """``U^i_j`` / ``F^i_j`` class of every vertex; needy flags only for odd ``k``."""
    l = ell(G.k)
    target = VertexState.U(l)
    two = [s == target and len(G.adj[v]) == 2 for v, s in enumerate(G.states)]
    out = []
    for v, s in enumerate(G.states):
        d = len(G.adj[v])
        needy = (
            G.k % 2 == 1
            and s == VertexState.U(0)
            and d == 3
            and sum(two[u] for u in G.adj[v]) == 2
        )
        out.append(VertexClass(s, d, needy))
    return out


@dataclass(frozen=True)
class ChargeReport:
    k: int
    classes: tuple[VertexClass, ...]
    initial: tuple[int, ...]
    final: tuple[int, ...]
    rho: int

    @property
    def total_initial(self) -> int:
        return sum(self.initial)

    @property
    def total_final(self) -> int:
        return sum(self.final)

    @property
    def identity_holds(self) -> bool:
        return self.total_initial == -2 * self.rho

    @property
    def conserved(self) -> bool:
        return self.total_initial == self.total_final


def _reject_i(G: PrecoloredGraph) -> None:
    bad = [v for v, s in enumerate(G.states) if s.kind == "I"]
    if bad:
        raise GraphError(f"charges are not defined for I-precolored vertices: {bad}")


def _charges(G: PrecoloredGraph) -> list[int]:
    table = coefficients(G.k)
    return [table.C_E * len(G.adj[v]) - 2 * table.of(s) for v, s in enumerate(G.states)]


def initial_charges(G: PrecoloredGraph) -> ChargeReport:
    _reject_i(G)
    ch = tuple(_charges(G))
    return ChargeReport(G.k, tuple(classify(G)), ch, ch, potential(G, range(G.n)))


def transfers(G: PrecoloredGraph) -> list[tuple[int, int, int]]:
    """Every ``(giver, taker, amount)`` the rules produce."""
    _reject_i(G)
    classes = classify(G)
    target = VertexState.U(ell(G.k))
    two = [c.state == target and c.degree == 2 for c in classes]
    out = []
    take = 1 if G.k % 2 == 0 else 2
    for v in range(G.n):
        if two[v]:
            out.extend((u, v, take) for u in G.adj[v])
        if classes[v].needy:
            out.extend((u, v, 1) for u in G.adj[v] if not two[u])
    return out


def discharge(G: PrecoloredGraph) -> ChargeReport:
    start = initial_charges(G)
    final = list(start.initial)
    for giver, taker, amount in transfers(G):
        final[giver] -= amount
        final[taker] += amount
    return ChargeReport(G.k, start.classes, start.initial, tuple(final), start.rho)


@dataclass(frozen=True)
class TableEntry:
    """One cell of the lower-bound table for final charges.

    ``derivable`` is true when the bound already follows from the exact
    initial charge minus the most a vertex of that degree can give away; the
    other cells depend on structure that only a minimal counterexample has.
    """

    state: VertexState
    degree: int
    bound: int
    derivable: bool


def table_bounds(k: int) -> list[TableEntry]:
    """Final-charge lower bounds for ``k``, one entry per valid cell."""
    t = coefficients(k)
    ce = t.C_E
    l = ell(k)
    U, F = VertexState.U, VertexState.F
    if k % 2 == 0:
        cells = [
            (F(l + 2), 1, 4),
            (F(1), 2, 4), (U(l), 2, 0), (U(l + 1), 2, 2), (U(l + 2), 2, 8),
            (U(0), 3, 0), (U(1), 3, 6), (F(1), 3, ce + 3),
            (U(0), 4, ce - 1), (U(1), 4, ce + 5), (F(1), 4, 2 * ce + 2),
        ]
        per_edge = 1
    else:
        cells = [
            (F(1), 2, 2), (F(2), 2, 8), (U(l), 2, 0), (U(l + 1), 2, 0), (U(l + 2), 2, 4),
            (U(0), 3, 0), (U(1), 3, 3), (U(2), 3, 9), (F(1), 3, ce), (F(2), 3, ce + 6),
            (U(0), 4, ce - 5), (U(1), 4, ce + 1), (U(2), 4, ce + 7), (F(1), 4, 2 * ce - 2),
        ]
        per_edge = 2
    out = []
    for state, d, bound in cells:
        try:
            state.check(k)
        except GraphError:
            continue
        worst = ce * d - 2 * t.of(state) - per_edge * d
        out.append(TableEntry(state, d, bound, worst >= bound))
    return out


def high_f_charge_bound(k: int, degree: int) -> int:
    """Lower bound on the initial charge of an ``F_j`` vertex in the ``3(k-j)`` regime."""
    ce = coefficients(k).C_E
    return ce * (degree - 1) + (5 if k % 2 == 0 else 7)


def report_tsv(report: ChargeReport) -> str:
    lines = ["vertex\tclass\tinitial\tfinal"]
    for v, (c, a, b) in enumerate(zip(report.classes, report.initial, report.final)):
        lines.append(f"{v}\t{c}\t{a}\t{b}")
    lines.append(f"total\t\t{report.total_initial}\t{report.total_final}")
    lines.append(f"-2rho\t\t{-2 * report.rho}\t{'ok' if report.identity_holds else 'MISMATCH'}")
    return "\n".join(lines) + "\n"
