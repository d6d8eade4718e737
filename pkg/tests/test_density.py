import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ifk_partition.constructions import gadget, sharpness_graph
from ifk_partition.density import (
    coefficients,
    f_threshold,
    mad,
    min_potential_subset,
    potential,
    project_selection,
)
from ifk_partition.graph import Graph, GraphError, PrecoloredGraph, VertexState, induced_subgraph

from oracles import (
    all_potentials,
    brute_mad,
    brute_min_potential,
    random_graph,
    random_precolored,
    subset_bits,
)

K3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
K4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.mark.parametrize(
    "k, ce, cu, cf, ci",
    [
        (2, 5, [6, 3], [2, 0], 1),
        (3, 7, [9, 6, 3], [4, 1, 0], 2),
        (4, 11, [15, 12, 9, 6], [8, 5, 3, 0], 4),
    ],
)
def test_coefficient_examples(k, ce, cu, cf, ci):
    t = coefficients(k)
    assert t.C_E == ce
    assert list(t.C_U[:k]) == cu
    assert list(t.C_F) == cf
    assert t.C_I == ci


@pytest.mark.parametrize("k", range(2, 65))
def test_coefficient_identities(k):
    t = coefficients(k)
    assert t.C_E == (3 * k - 1 if k % 2 == 0 else 3 * k - 2)
    assert 2 * t.cu(0) == 3 * t.C_E - 3
    for j in range(k + 1):
        assert t.cu(j) == t.cu(0) - 3 * j
    for j in range(1, k + 1):
        if j <= (k + 1) // 2:
            assert t.cf(j) == t.C_E - 3 * j
            # bridging identity on the low regime
            assert t.cf(j) == t.cu(j - 1) + t.C_I - t.C_E
        else:
            assert j >= (k + 3) // 2
            assert t.cf(j) == 3 * (k - j)
    assert t.cf(k) == 0
    assert 2 * t.C_I == t.C_E - 3
    assert t.C_I == t.cu(0) + t.cf(k) - t.C_E
    assert min(t.C_U + t.C_F + (t.C_I, t.C_E)) >= 0
    assert f_threshold(k) == Fraction(2 * t.cu(0), t.C_E)


def test_bad_k():
    for k in (1, 0, -3):
        with pytest.raises(ValueError):
            coefficients(k)
        with pytest.raises(ValueError):
            f_threshold(k)
    with pytest.raises(IndexError):
        coefficients(3).cf(0)


def test_thresholds():
    assert f_threshold(2) == Fraction(12, 5)
    assert f_threshold(3) == Fraction(18, 7)
    assert f_threshold(4) == Fraction(30, 11)
    assert f_threshold(6) == Fraction(48, 17)


def test_potential_examples():
    G = PrecoloredGraph(K3, 2)
    assert potential(G, range(3)) == 3
    assert potential(G, []) == 0
    assert potential(sharpness_graph(2, 0), range(7)) == -3
    with pytest.raises(GraphError):
        potential(G, [3])


def test_min_potential_examples():
    G = PrecoloredGraph(K3, 2)
    assert min_potential_subset(G, "all") == (0, frozenset())
    value, R = min_potential_subset(G, "nonempty-proper")
    assert value == 6 and len(R) == 1
    assert min_potential_subset(G, "proper")[0] == 6
    G20 = sharpness_graph(2, 0)
    assert min_potential_subset(G20, "nonempty") == (-3, frozenset(range(7)))


def test_min_potential_errors():
    with pytest.raises(ValueError):
        min_potential_subset(PrecoloredGraph(K3, 2), "some")
    with pytest.raises(ValueError):
        min_potential_subset(PrecoloredGraph(Graph(1), 2), "proper")
    with pytest.raises(ValueError):
        min_potential_subset(PrecoloredGraph(Graph(0), 2), "nonempty")


def test_project_selection_forced_sets():
    # K3/k=2 with every vertex forced in: profit is minus the full potential
    profit, R = project_selection(K3, 5, [6, 6, 6], force_in=[0, 1, 2])
    assert profit == -3 and R == frozenset({0, 1, 2})
    profit, R = project_selection(K3, 5, [6, 6, 6], force_out=[0])
    assert profit == 0 and 0 not in R


def _check_min(G):
    for mode in ("all", "nonempty", "proper"):
        if mode == "proper" and G.n < 2 or mode == "nonempty" and G.n < 1:
            continue
        value, R = min_potential_subset(G, mode)
        assert value == brute_min_potential(G, mode)
        assert potential(G, R) == value
        if mode != "all":
            assert R
        if mode == "proper":
            assert len(R) < G.n


def test_min_potential_matches_brute_force():
    rng = random.Random(11)
    for _ in range(150):
        k = rng.randint(2, 7)
        G = random_precolored(rng, rng.randint(1, 13), k, p=rng.uniform(0.1, 0.7))
        _check_min(G)


@pytest.mark.parametrize("k, t", [(2, 0), (2, 1), (3, 0), (4, 0), (5, 0)])
def test_min_potential_on_constructions(k, t):
    G = sharpness_graph(k, t)
    if G.n <= 15:
        _check_min(G)


def test_mad_examples():
    assert mad(C5)[0] == 2
    assert mad(K4) == (3, frozenset(range(4)))
    value, R = mad(sharpness_graph(2, 0))
    assert value == Fraction(18, 7) and len(R) == 7
    with pytest.raises(GraphError):
        mad(Graph(0))
    assert mad(Graph(3))[0] == 0


def test_mad_matches_brute_force():
    rng = random.Random(5)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 13), rng.uniform(0.05, 0.8))
        value, R = mad(g)
        assert value == brute_mad(g)
        H, _ = induced_subgraph(g, R)
        assert Fraction(2 * H.m, H.n) == value
        assert value >= Fraction(2 * g.m, g.n)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.floats(0.1, 0.9), st.integers(0, 2**32 - 1))
def test_mad_monotone_under_subgraphs(n, p, seed):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    if not g.edges:
        return
    sub = Graph(n, [e for e in g.edges if rng.random() < 0.6])
    assert mad(sub)[0] <= mad(g)[0]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_submodularity(seed):
    rng = random.Random(seed)
    G = random_precolored(rng, rng.randint(2, 12), rng.randint(2, 6), p=rng.uniform(0.2, 0.8))
    rho = all_potentials(G)
    full = (1 << G.n) - 1
    for _ in range(40):
        a, b = rng.randint(0, full), rng.randint(0, full)
        assert rho[a | b] + rho[a & b] <= rho[a] + rho[b]


def test_submodularity_exhaustive_small():
    rng = random.Random(3)
    G = random_precolored(rng, 6, 3, p=0.5)
    rho = all_potentials(G)
    masks = range(1 << G.n)
    assert all(rho[a | b] + rho[a & b] <= rho[a] + rho[b] for a in masks for b in masks)


def test_trivial_potential_vs_density():
    rng = random.Random(9)
    for _ in range(300):
        k = rng.randint(2, 8)
        g = random_graph(rng, rng.randint(1, 12), rng.uniform(0.1, 0.6))
        G = PrecoloredGraph(g, k)
        dense = Fraction(2 * g.m, g.n) <= f_threshold(k)
        assert (potential(G, range(g.n)) >= 0) == dense


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_gadget_potential_equals_coefficient(k):
    t = coefficients(k)
    kinds = [VertexState.U(j) for j in range(1, k)]
    kinds += [VertexState.F(j) for j in range(1, k + 1)] + [VertexState.I()]
    for kind in kinds:
        rg = gadget(kind, k)
        G = PrecoloredGraph(rg.graph, k)
        assert potential(G, range(G.n)) == t.of(kind), kind


def test_subset_bits_layout():
    bits = subset_bits(3)
    assert bits.shape == (8, 3)
    assert bits[5].tolist() == [1, 0, 1]
