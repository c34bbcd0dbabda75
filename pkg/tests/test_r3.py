from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from rainbowcycles import (
    EdgeColouredGraph,
    PreconditionError,
    Subgraph,
    chord_bound,
    chord_census,
    circulant_digraph,
    find_short_rainbow_cycle,
    from_digraph,
    prepare,
    rainbow_girth_exact,
    random_instance,
    solve,
    validate_certificate,
)
from rainbowcycles.instances import one_triangle_circulant
from rainbowcycles.r3 import (
    ALL_STAR,
    FEW_NONSTAR,
    MANY_NONSTAR,
    dominates,
    few_nonstar_branch,
    find_undominated_pair,
    many_nonstar_branch,
    rainbow_two_cycle,
    star_centre,
    transversal_avoiding,
)


def triangle_ring(n=9):
    """Colour i is the triangle on {i, i+1, i+2} (mod n)."""
    edges = []
    for i in range(n):
        a, b, c = i, (i + 1) % n, (i + 2) % n
        edges += [(a, b, i), (b, c, i), (a, c, i)]
    return EdgeColouredGraph(n, edges, n)


def matchings(n=12):
    edges = []
    for i in range(n):
        vs = [(i + j) % n for j in (0, 1, 3, 4, 6, 7)]
        edges += [(vs[0], vs[1], i), (vs[2], vs[3], i), (vs[4], vs[5], i)]
    return EdgeColouredGraph(n, edges, n)


class TestPrepare:
    def test_star(self):
        assert star_centre([(1, 0), (2, 0), (3, 0)]) == 0

    def test_triangle_and_matching_are_not_stars(self):
        assert star_centre([(0, 1), (1, 2), (0, 2)]) is None
        assert star_centre([(0, 1), (2, 3), (4, 5)]) is None

    def test_profile_of_circulant(self):
        prep = prepare(from_digraph(circulant_digraph(9, (1, 2, 3))))
        assert prep.profile.star_classes == {c: c for c in range(9)}
        assert prep.profile.non_star_vertices == frozenset()

    def test_profile_of_triangles(self):
        prof = prepare(triangle_ring()).profile
        assert prof.star_classes == {} and prof.non_star_classes == frozenset(range(9))
        assert prof.non_star_vertices == frozenset(range(9))

    def test_trims_to_three_least_edges(self):
        G = from_digraph(circulant_digraph(9, (1, 2, 3)))
        big = EdgeColouredGraph(9, list(G.edges) + [(0, 5, 0), (0, 7, 0)], 9)
        prep = prepare(big)
        assert prep.graph.class_sizes == (3,) * 9
        assert prep.graph.edges[:3] == ((0, 1, 0), (0, 2, 0), (0, 3, 0))
        assert prep.edge_map[:3] == (0, 1, 2)

    def test_extra_colours_dropped(self):
        G = triangle_ring()
        more = EdgeColouredGraph(9, list(G.edges) + [(0, 4, 9), (1, 4, 9), (2, 4, 9)], 10)
        assert prepare(more).graph.colours == 9

    def test_small_class_rejected(self):
        edges = list(triangle_ring().edges)[:-1]
        with pytest.raises(PreconditionError, match="< 3"):
            prepare(EdgeColouredGraph(9, edges, 9))

    def test_too_few_colours(self):
        G = triangle_ring()
        with pytest.raises(PreconditionError, match="colours"):
            prepare(EdgeColouredGraph(10, G.edges, 9))


class TestDominates:
    def test_triangle_covered(self):
        assert dominates([(0, 1), (1, 2), (0, 2)], 0, 2)

    def test_triangle_not_covered(self):
        assert not dominates([(1, 2), (2, 3), (1, 3)], 0, 3)

    def test_matching_never(self):
        M = [(0, 1), (2, 3), (4, 5)]
        assert not any(dominates(M, x, y) for x, y in combinations(range(6), 2))


class TestUndominatedPair:
    def test_triangle_ring(self):
        G = triangle_ring()
        # independent check: a pair is dominated iff some class edge set is covered by it
        def covered(x, y):
            return any(
                all(u in (x, y) or v in (x, y) for u, v, c2 in G.edges if c2 == c) for c in range(9)
            )

        expect = next(p for p in combinations(range(9), 2) if not covered(*p))
        assert expect == (0, 3)
        assert covered(0, 1) and covered(0, 2)
        prep = prepare(G)
        assert find_undominated_pair(prep.graph, prep.profile) == (0, 3)

    def test_matchings(self):
        prep = prepare(matchings())
        assert find_undominated_pair(prep.graph, prep.profile) == (0, 1)

    def test_needs_eight(self):
        prep = prepare(from_digraph(circulant_digraph(9, (1, 2, 3))))
        with pytest.raises(PreconditionError):
            find_undominated_pair(prep.graph, prep.profile)


class TestTransversal:
    def test_triangle_avoiding_vertex(self):
        G = EdgeColouredGraph(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)])
        T, overlap = transversal_avoiding(G, {0})
        assert T.edge_ids == frozenset({1}) and overlap == 0

    def test_star_with_forbidden_edge(self):
        # centre 0, leaves z=1, a=2, b=3
        G = EdgeColouredGraph(4, [(0, 1, 0), (0, 2, 0), (0, 3, 0)])
        T, overlap = transversal_avoiding(G, {1}, {1})
        assert T.edge_ids == frozenset({2}) and overlap == 0

    def test_forced_overlap(self):
        G = EdgeColouredGraph(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)])
        T, overlap = transversal_avoiding(G, {0}, {1})
        assert T.edge_ids == frozenset({1}) and overlap == 1

    def test_impossible(self):
        G = EdgeColouredGraph(4, [(0, 1, 0), (0, 2, 0), (0, 3, 0)])
        with pytest.raises(PreconditionError):
            transversal_avoiding(G, {0})


class TestBranches:
    def test_triangle_ring_two_cycle(self):
        G = triangle_ring()
        prep = prepare(G)
        out = many_nonstar_branch(prep)
        assert out.certificate.length == 2 and out.branch == MANY_NONSTAR
        assert rainbow_girth_exact(G, 9).length == 2
        assert validate_certificate(prep.graph, out.certificate) is None
        assert validate_certificate(G, out.certificate.remap(prep.edge_map)) is None
        # colours 0 and 8 both contain the pair {0, 1}
        assert sorted(c for u, v, c in G.edges if (u, v) in ((0, 1), (1, 0))) == [0, 8]

    def test_circulant_all_star(self):
        G = from_digraph(circulant_digraph(9, (1, 2, 3)))
        out = few_nonstar_branch(prepare(G))
        assert out.branch == ALL_STAR
        assert out.certificate.vertices == (0, 3, 6)
        assert brute.directed_girth(9, circulant_digraph(9, (1, 2, 3)).arcs) == 3

    def test_circulant_12(self):
        D = circulant_digraph(12, (1, 2, 3))
        sol = solve(from_digraph(D))
        assert brute.directed_girth(12, D.arcs) == 4
        assert sol.certificate.length == 4 and sol.branch == ALL_STAR

    def test_one_triangle_goes_to_z_branch(self):
        G = one_triangle_circulant(45)
        sol = solve(G)
        assert sol.branch == FEW_NONSTAR
        assert 9 * sol.certificate.length <= 4 * 45 + 63
        assert sol.trace["overlap"] <= 1

    def test_few_nonstar_rejects_many(self):
        with pytest.raises(PreconditionError):
            few_nonstar_branch(prepare(triangle_ring()))

    def test_random_sixty(self):
        G = random_instance(60, 60, 3, 11, "triangle", simple=True)
        sol = solve(G)
        C = sol.certificate
        assert validate_certificate(G, C) is None and C.rainbow
        assert 9 * C.length <= 4 * 60 + 63
        assert rainbow_girth_exact(G, C.length) is not None

    def test_large_class_accepted(self):
        G = from_digraph(circulant_digraph(9, (1, 2, 3)))
        big = EdgeColouredGraph(9, list(G.edges) + [(0, 5, 0), (0, 7, 0)], 9)
        C = find_short_rainbow_cycle(big)
        assert validate_certificate(big, C) is None

    def test_rainbow_two_cycle_prefers_least_pair(self):
        G = EdgeColouredGraph(3, [(1, 2, 0), (0, 1, 1), (2, 1, 2), (1, 0, 0)])
        C = rainbow_two_cycle(G)
        assert C.vertices == (0, 1) and C.edge_ids == (1, 3)


def _instances():
    shapes = st.sampled_from(["uniform", "star", "triangle", "matching"])
    return st.tuples(st.sampled_from([9, 12, 18, 27]), shapes, st.integers(0, 2**32), st.booleans())


def _build(params):
    n, shape, seed, simple = params
    try:
        return random_instance(n, n, 3, seed, shape, simple=simple)
    except PreconditionError:
        return random_instance(n, n, 3, seed, shape)


@settings(max_examples=40)
@given(_instances())
def test_solution_invariants(params):
    G = _build(params)
    sol = solve(G)
    C = sol.certificate
    n = G.n
    assert validate_certificate(G, C) is None and C.rainbow
    assert 9 * C.length <= 4 * n + 63
    if sol.branch == MANY_NONSTAR:
        assert 5 * C.length <= 2 * n + 35
        R, Rp = sol.trace["R"], sol.trace["R_prime"]
        assert not (R.edge_ids & Rp.edge_ids)
    elif sol.branch == ALL_STAR:
        assert C.length <= -(-n // 3)
    assert solve(G).certificate == C


@settings(max_examples=40)
@given(st.sampled_from([18, 27, 36]), st.integers(0, 2**32), st.sampled_from(["triangle", "matching"]))
def test_many_nonstar_chords_after_tightening(n, seed, shape):
    G = random_instance(n, n, 3, seed, shape, simple=True)
    prep = prepare(G)
    if len(prep.profile.non_star_vertices) < 8:
        return
    out = many_nonstar_branch(prep)
    R, Cp = out.trace["R"], out.trace["C_prime"]
    H = R.with_edges(Cp.edge_ids)
    inside = Subgraph(prep.graph, frozenset(e for e in H.edge_ids if set(prep.graph.ends(e)) <= R.vertices))
    if rainbow_two_cycle(inside) is None:
        assert chord_census(R, H).total <= chord_bound(R.excess, 2)


@settings(max_examples=30)
@given(st.sampled_from([18, 27, 36, 45]), st.integers(0, 2**32), st.integers(80, 97))
def test_few_nonstar_overlap(n, seed, purity):
    try:
        G = random_instance(n, n, 3, seed, "star", purity=purity, simple=True)
    except PreconditionError:
        return
    prep = prepare(G)
    if not 0 < len(prep.profile.non_star_vertices) <= 7:
        return
    out = few_nonstar_branch(prep)
    assert out.trace["overlap"] <= len(prep.profile.non_star_classes) <= 7
    assert 9 * out.certificate.length <= 4 * n + 63
