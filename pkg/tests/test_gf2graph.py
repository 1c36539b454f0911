import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twograph import (
    Gf2Graph,
    GraphError,
    bipartite_k,
    bits,
    closed_ball,
    complete_graph,
    delta,
    graph_add,
    mask_of,
    open_neighborhood,
    vertices_of,
)
from twograph.gf2graph import elc_loop, lc

from conftest import random_simple_graph


@st.composite
def graphs(draw, max_n=6, loops=True):
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = [0] * n
    for i in range(n):
        if loops and draw(st.booleans()):
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            if draw(st.booleans()):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Gf2Graph(n, tuple(rows))


@given(st.integers(min_value=0, max_value=(1 << 16) - 1))
def test_bits_mask_roundtrip(mask):
    assert mask_of(bits(mask)) == mask
    vs = vertices_of(mask)
    assert vs == sorted(vs)
    assert mask_of(vs) == mask


def test_validation_rejects_asymmetry():
    with pytest.raises(GraphError):
        Gf2Graph(2, (0b10, 0b00))


def test_validation_rejects_out_of_range_bits():
    with pytest.raises(GraphError):
        Gf2Graph(2, (0b100, 0))
    with pytest.raises(GraphError):
        Gf2Graph(2, (0,))
    with pytest.raises(GraphError):
        Gf2Graph(65, (0,) * 65)


def test_from_edges_roundtrip():
    g = Gf2Graph.from_edges(4, [(0, 1), (2, 3), (1, 1)])
    assert g.edges() == [(0, 1), (1, 1), (2, 3)]
    assert g.has_edge(1, 0)
    assert g.loops() == mask_of([1])
    assert not g.is_simple()
    assert g.strip_loops() == Gf2Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        Gf2Graph.from_edges(2, [(0, 2)])


@given(graphs(), graphs())
def test_graph_add_is_entrywise_xor(a, b):
    if a.n != b.n:
        with pytest.raises(GraphError):
            graph_add(a, b)
        return
    c = graph_add(a, b)
    assert c.rows == tuple(x ^ y for x, y in zip(a.rows, b.rows))
    assert graph_add(c, b) == a  # xor is its own inverse


@given(graphs())
def test_neighborhood_and_ball(g):
    for v in range(g.n):
        nv = open_neighborhood(g, v)
        assert not nv >> v & 1
        assert closed_ball(g, v) == nv | (1 << v)


def test_delta_and_complete():
    assert delta(3, mask_of([0, 2])).edges() == [(0, 0), (2, 2)]
    assert complete_graph(4, mask_of([0, 1, 3])).edges() == [(0, 1), (0, 3), (1, 3)]
    with pytest.raises(GraphError):
        delta(2, 0b100)


def test_bipartite_k_disjoint_is_complete_bipartite():
    g = bipartite_k(5, mask_of([0, 1]), mask_of([3, 4]))
    assert g.edges() == [(0, 3), (0, 4), (1, 3), (1, 4)]
    assert g.is_simple()


def test_bipartite_k_overlap_example():
    # a = {0,1}, b = {1,2}: the 1-1 pair contributes a loop at 1; the pair
    # 0-1 appears once (0 in a, 1 in b) and pair 1-2 once; 0-2 once.
    g = bipartite_k(3, mask_of([0, 1]), mask_of([1, 2]))
    assert g.edges() == [(0, 1), (0, 2), (1, 1), (1, 2)]


@given(graphs(max_n=5), st.data())
def test_bipartite_k_membership_rule(g, data):
    n = g.n
    a = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    b = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    k = bipartite_k(n, a, b)
    for i in range(n):
        assert (k.rows[i] >> i & 1) == (a >> i & 1) & (b >> i & 1)
        for j in range(n):
            if i == j:
                continue
            want = ((a >> i & 1) & (b >> j & 1)) ^ ((a >> j & 1) & (b >> i & 1))
            assert (k.rows[i] >> j & 1) == want


@given(graphs(loops=False), st.data())
def test_lc_is_an_involution(g, data):
    v = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    assert lc(lc(g, v), v) == g


@given(graphs(loops=False), st.data())
def test_lc_only_touches_the_neighbourhood(g, data):
    v = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    h = lc(g, v)
    nv = open_neighborhood(g, v)
    assert h.rows[v] == g.rows[v]
    for u in range(g.n):
        if not nv >> u & 1:
            assert h.rows[u] & ~nv == g.rows[u] & ~nv


def test_lc_rejects_loops():
    with pytest.raises(GraphError):
        lc(Gf2Graph.from_edges(2, [(0, 0), (0, 1)]), 0)


def test_elc_requires_an_edge():
    g = Gf2Graph.from_edges(3, [(0, 1)])
    with pytest.raises(GraphError):
        elc_loop(g, 0, 2)
    with pytest.raises(GraphError):
        elc_loop(g, 1, 1)


def test_elc_on_simple_graphs_is_the_pivot():
    # Stripped of the loops it introduces, edge local complementation on a
    # simple graph equals the classical pivot lc_v lc_w lc_v.
    rng = random.Random(7)
    checked = 0
    while checked < 200:
        n = rng.randint(3, 6)
        g = random_simple_graph(n, rng)
        edges = [e for e in g.edges() if e[0] != e[1]]
        if not edges:
            continue
        v, w = rng.choice(edges)
        assert elc_loop(g, v, w).strip_loops() == lc(lc(lc(g, v), w), v)
        checked += 1
