import pytest
from hypothesis import given
from hypothesis import strategies as st

import brute
from rainbowcycles import (
    Digraph,
    EdgeColouredGraph,
    PreconditionError,
    directed_girth,
    from_digraph,
    girth_exact,
    max_stable_set,
    rainbow_girth_exact,
    validate_certificate,
)
from rainbowcycles.oracle import default_cap

from strategies import coloured_graphs, digraphs, simple_rainbow_graphs


def rainbow(n, pairs):
    return EdgeColouredGraph(n, [(u, v, i) for i, (u, v) in enumerate(pairs)])


K4 = rainbow(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
C5 = rainbow(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
THETA = rainbow(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
SEVEN = Digraph(7, [(i, (i + 1) % 7) for i in range(7)])


class TestRainbowGirth:
    def test_rainbow_triangle(self):
        G = EdgeColouredGraph(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])
        C = rainbow_girth_exact(G, 3)
        assert C.length == 3 and C.rainbow
        assert validate_certificate(G, C) is None

    def test_repeated_colour_triangle(self):
        G = EdgeColouredGraph(3, [(0, 1, 0), (1, 2, 1), (0, 2, 0)])
        assert rainbow_girth_exact(G, 3) is None

    def test_parallel_pair(self):
        G = EdgeColouredGraph(2, [(0, 1, 0), (0, 1, 1)])
        C = rainbow_girth_exact(G, 2)
        assert C.length == 2 and C.edge_ids == (0, 1)

    def test_directed_seven_cycle(self):
        G = from_digraph(SEVEN)
        assert brute.rainbow_girth(list(G.edges)) == 7
        assert rainbow_girth_exact(G, 7).length == 7
        assert rainbow_girth_exact(G, 6) is None

    def test_cap_below_two(self):
        with pytest.raises(PreconditionError):
            rainbow_girth_exact(C5, 1)

    def test_lexicographic_tie_break(self):
        # two rainbow triangles {0,1,2} and {0,1,3}; the first in vertex order wins
        G = rainbow(4, [(0, 3), (1, 3), (0, 1), (1, 2), (0, 2)])
        C = rainbow_girth_exact(G, 4)
        assert C.vertices == (0, 1, 2)

    def test_default_cap(self):
        G = EdgeColouredGraph(9, [(i, (i + 1) % 9, i) for i in range(9)])
        assert default_cap(G) == 9 + 2


class TestGirth:
    def test_c5(self):
        C = girth_exact(C5)
        assert C.length == 5 and not C.rainbow
        assert validate_certificate(C5, C) is None

    def test_forest(self):
        assert girth_exact(rainbow(5, [(0, 1), (1, 2), (1, 3), (3, 4)])) is None

    def test_k4(self):
        assert girth_exact(K4).length == 3

    def test_parallel_edges_give_two(self):
        G = EdgeColouredGraph(3, [(0, 1, 0), (1, 2, 0), (0, 1, 1)])
        assert girth_exact(G).length == 2

    def test_subgraph_view(self):
        assert girth_exact(K4.full().without_vertex(0)).length == 3
        assert girth_exact(K4.full().without_vertices([0, 1])) is None


class TestDirectedGirth:
    def test_triangle(self):
        cyc = directed_girth(Digraph(3, [(0, 1), (1, 2), (2, 0)]))
        assert cyc == ((0, 1), (1, 2), (2, 0))

    def test_dag(self):
        assert directed_girth(Digraph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])) is None

    def test_two_cycle(self):
        assert len(directed_girth(Digraph(2, [(0, 1), (1, 0)]))) == 2

    def test_seven_cycle(self):
        assert brute.directed_girth(7, SEVEN.arcs) == 7
        assert len(directed_girth(SEVEN)) == 7


class TestStableSet:
    def test_c5(self):
        assert max_stable_set(C5)[0] == 2

    def test_k4(self):
        assert max_stable_set(K4)[0] == 1

    def test_theta_midpoints(self):
        pairs = [G[:2] for G in THETA.edges]
        assert brute.stable_number(range(5), pairs) == 3
        size, verts = max_stable_set(THETA)
        assert size == 3 and verts == frozenset({2, 3, 4})

    def test_limit(self):
        big = rainbow(42, [(i, i + 1) for i in range(41)])
        with pytest.raises(PreconditionError):
            max_stable_set(big)
        assert max_stable_set(big, limit=50)[0] == 21


@given(coloured_graphs(max_n=6, max_m=9, max_colours=4))
def test_rainbow_girth_matches_subset_search(G):
    expect = brute.rainbow_girth(list(G.edges))
    C = rainbow_girth_exact(G, max(2, G.n))
    assert (None if C is None else C.length) == expect
    if C is not None:
        assert validate_certificate(G, C) is None


@given(coloured_graphs(max_n=7, max_m=10))
def test_girth_matches_subset_search(G):
    C = girth_exact(G)
    assert (None if C is None else C.length) == brute.girth(list(G.edges))
    if C is not None:
        assert validate_certificate(G, C) is None


@given(coloured_graphs(max_n=7, max_m=10, max_colours=5), st.integers(2, 7), st.integers(2, 7))
def test_cap_monotone(G, a, b):
    lo, hi = sorted((a, b))
    small, large = rainbow_girth_exact(G, lo), rainbow_girth_exact(G, hi)
    if small is not None:
        assert large == small and small.length <= lo
    elif large is not None:
        assert large.length > lo


@given(coloured_graphs(max_n=7, max_m=10, max_colours=5))
def test_rainbow_girth_at_least_girth(G):
    C = rainbow_girth_exact(G, max(2, G.n))
    if C is not None:
        assert C.length >= girth_exact(G).length


@given(simple_rainbow_graphs(max_n=9))
def test_distinct_colours_rainbow_girth_is_girth(G):
    C = rainbow_girth_exact(G, max(2, G.n))
    P = girth_exact(G)
    assert (C is None) == (P is None)
    if C is not None:
        assert C.length == P.length


@given(simple_rainbow_graphs(max_n=12, max_m=30))
def test_stable_set_matches_enumeration(G):
    S = G.full()
    size, verts = max_stable_set(S)
    pairs = [G.ends(e) for e in S.edge_ids]
    assert size == brute.stable_number(S.vertices, pairs)
    assert len(verts) == size and verts <= S.vertices
    assert not any(u in verts and v in verts for u, v in pairs)


@given(digraphs(max_n=6))
def test_directed_girth_matches_enumeration(D):
    cyc = directed_girth(D)
    assert (None if cyc is None else len(cyc)) == brute.directed_girth(D.n, D.arcs)
    if cyc is not None:
        arcs = set(D.arcs)
        assert all(a in arcs for a in cyc)
        assert all(cyc[i][1] == cyc[(i + 1) % len(cyc)][0] for i in range(len(cyc)))


@given(digraphs(max_n=8))
def test_reduction_identity(D):
    cyc = directed_girth(D)
    if not D.arcs:
        return
    C = rainbow_girth_exact(from_digraph(D), max(2, D.n))
    assert (None if cyc is None else len(cyc)) == (None if C is None else C.length)
