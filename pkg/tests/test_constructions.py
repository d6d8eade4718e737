import random

import pytest

from ifk_partition.constructions import (
    RootedGraph,
    add_pendent_triangles,
    add_two_threads,
    attach,
    expand_precoloring,
    gadget,
    root_outcomes,
    sharpness_graph,
    sharpness_layout,
    verify_gadget,
)
from ifk_partition.density import coefficients, f_threshold, mad, potential
from ifk_partition.graph import Graph, GraphError, PrecoloredGraph, VertexState
from ifk_partition.solver import solve

from oracles import random_graph, random_states

U, F, I = VertexState.U, VertexState.F, VertexState.I


def test_pendent_triangles_and_threads():
    g = add_pendent_triangles(Graph(1), 0, 2)
    assert (g.n, g.m) == (5, 6) and g.degree(0) == 4
    g = add_two_threads(Graph(2), 0, 1, 3)
    assert (g.n, g.m) == (8, 9)
    assert all(g.degree(v) == 2 for v in range(2, 8))
    G = add_pendent_triangles(PrecoloredGraph(Graph(1), 2, (F(1),)), 0, 1)
    assert G.states == (F(1), U(0), U(0))
    with pytest.raises(GraphError):
        add_two_threads(Graph(2), 0, 0, 1)
    with pytest.raises(GraphError):
        add_pendent_triangles(Graph(1), 3, 1)
    with pytest.raises(ValueError):
        add_pendent_triangles(Graph(1), 0, -1)


@pytest.mark.parametrize("k, t, n, m", [(2, 0, 7, 9), (3, 0, 9, 12), (2, 1, 12, 15)])
def test_sharpness_sizes(k, t, n, m):
    G = sharpness_graph(k, t)
    assert (G.n, G.m) == (n, m) and G.is_trivial


def test_sharpness_layout():
    names = sharpness_layout(2, 1)
    assert names[:6] == ["v0", "w0", "x0", "v1", "w1", "x1"]
    assert len(names) == sharpness_graph(2, 1).n
    assert names[6].startswith("tri@x0") and names[8].startswith("tri@v1")
    assert names[-1].startswith("thread v0-x1")


def test_sharpness_numbering_is_stable():
    G = sharpness_graph(2, 0)
    assert G.edges == ((0, 1), (0, 2), (0, 5), (0, 6), (1, 2), (2, 3), (2, 4), (3, 4), (5, 6))


@pytest.mark.parametrize("k", range(2, 9))
def test_family_growth(k):
    t_ = coefficients(k)
    sizes = [(sharpness_graph(k, t).n, sharpness_graph(k, t).m) for t in range(5)]
    for (n0, m0), (n1, m1) in zip(sizes, sizes[1:]):
        assert n1 - n0 == t_.C_E
        assert m1 - m0 == t_.cu(0)


@pytest.mark.parametrize("k", range(2, 7))
def test_sharpness_above_threshold(k):
    values = [mad(sharpness_graph(k, t))[0] for t in range(4)]
    assert all(v > f_threshold(k) for v in values)
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("k, t", [(2, 0), (2, 1), (3, 0), (3, 1), (4, 0), (5, 0)])
def test_sharpness_potential(k, t):
    G = sharpness_graph(k, t)
    assert potential(G, range(G.n)) == -3


def test_bad_sharpness_args():
    with pytest.raises(ValueError):
        sharpness_graph(1, 0)
    with pytest.raises(ValueError):
        sharpness_graph(2, -1)


# --- gadgets ----------------------------------------------------------------------


def test_gadget_examples():
    rg = gadget(U(1), 4)
    assert (rg.graph.n, rg.graph.m) == (3, 3)
    rg = gadget(F(2), 2)
    assert (rg.graph.n, rg.graph.m) == (5, 6)
    assert potential(PrecoloredGraph(rg.graph, 2), range(5)) == 0
    rg = gadget(I(), 2)
    assert (rg.graph.n, rg.graph.m) == (6, 7)
    assert potential(PrecoloredGraph(rg.graph, 2), range(6)) == 1


@pytest.mark.parametrize("bad", [U(0), F(0), U(3), F(4)])
def test_invalid_gadget_kinds(bad):
    with pytest.raises(GraphError):
        gadget(bad, 3)


def test_attach():
    host = Graph(2, [(0, 1)])
    g = attach(host, 1, RootedGraph(Graph(3, [(0, 1), (1, 2), (0, 2)]), 0))
    assert (g.n, g.m) == (4, 4) and g.degree(1) == 3
    with pytest.raises(GraphError):
        RootedGraph(Graph(1), 1)


def test_root_outcomes_triangle():
    tri = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert root_outcomes(tri, 0, 2) == frozenset({("I", None), ("F", 2)})
    # all three in F would close a cycle, so weight 3 never shows up
    assert root_outcomes(tri, 0, 3) == frozenset({("I", None), ("F", 2)})


@pytest.mark.parametrize("kind, k", [(U(1), 2), (F(2), 2), (F(1), 3)])
def test_gadget_examples_pass(kind, k):
    assert verify_gadget(kind, k).passed


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_all_gadgets_pass(k):
    kinds = [U(j) for j in range(1, k)] + [F(j) for j in range(1, k + 1)] + [I()]
    for kind in kinds:
        verdict = verify_gadget(kind, k)
        assert verdict.passed, (kind, verdict.failures)


def test_i_only_relaxations_are_reported():
    # the pendent-triangle edges at x in the k=2 F2 gadget only free the root to I
    verdict = verify_gadget(F(2), 2)
    assert verdict.passed
    assert verdict.i_only_relaxations


# --- expansion --------------------------------------------------------------------


def test_expand_examples():
    G = sharpness_graph(2, 0)
    H, emb = expand_precoloring(G)
    assert H == G and emb == list(range(7))
    G = PrecoloredGraph(Graph(1), 2, (U(1),))
    H, _ = expand_precoloring(G)
    assert (H.n, H.m) == (3, 3) and potential(H, range(3)) == 3
    G = PrecoloredGraph(Graph(1), 2, (F(2),))
    H, _ = expand_precoloring(G)
    assert H.n == 5 and potential(H, range(5)) == 0


def test_expansion_random():
    rng = random.Random(13)
    for _ in range(400):
        k = rng.choice([2, 3, 4])
        g = random_graph(rng, rng.randint(1, 6), 0.45)
        states = random_states(rng, g.n, k, p_pre=0.6)
        if any(states[u].kind == states[v].kind == "I" for u, v in g.edges):
            continue
        G = PrecoloredGraph(g, k, states)
        H, emb = expand_precoloring(G)
        assert H.is_trivial
        assert potential(G, range(G.n)) == potential(H, range(H.n))
        assert (solve(G) is None) == (solve(H) is None)
        # the original vertices keep their ids and edges
        assert all(H.graph.has_edge(emb[u], emb[v]) for u, v in g.edges)
