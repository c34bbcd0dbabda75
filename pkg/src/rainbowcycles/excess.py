"""Excess-k subgraphs: minimal supports, short-cycle guarantees, chord counts.

The *excess* of a graph is ``|E| - |V|``.
"""

from __future__ import annotations

from collections import defaultdict
from math import comb
from typing import NamedTuple, Union

from .errors import PreconditionError, TheoremViolation
from .graph import CycleCertificate, EdgeColouredGraph, Subgraph, two_core
from .oracle import girth_exact


def _core_excess(G: EdgeColouredGraph, edge_ids) -> tuple:
    """2-core of an edge set, returned as ``(edge set, excess)``."""
    inc = defaultdict(list)
    for e in edge_ids:
        u, v = G.ends(e)
        inc[u].append(e)
        inc[v].append(e)
    deg = {v: len(es) for v, es in inc.items()}
    alive = set(edge_ids)
    stack = [v for v, d in deg.items() if d <= 1]
    dead = 0
    while stack:
        v = stack.pop()
        dead += 1
        for e in inc[v]:
            if e not in alive:
                continue
            alive.remove(e)
            a, b = G.ends(e)
            w = b if a == v else a
            deg[w] -= 1
            if deg[w] == 1:
                stack.append(w)
    return alive, len(alive) - (len(inc) - dead)


def minimal_excess_subgraph(S: Subgraph, k: int) -> Subgraph:
    """Vertex-minimal subgraph of ``S`` with excess at least ``k``.

    Starting from the 2-core, vertices are tried in increasing order and
    ``v`` is dropped whenever the 2-core of ``R - v`` still has excess
    ``>= k``. One pass suffices: if dropping ``v`` fails for ``R`` it fails
    for every min-degree-2 subgraph of ``R`` too, since excess cannot grow
    when passing to a min-degree-2 subgraph.

    All edges of the final core are kept, so the excess may exceed ``k``.
    """
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    if not S.is_rainbow:
        raise PreconditionError("input subgraph is not rainbow")
    G = S.ambient
    edges, exc = _core_excess(G, S.edge_ids)
    if exc < k:
        raise PreconditionError(f"2-core has excess {exc} < {k}")
    verts = sorted({x for e in edges for x in G.ends(e)})
    for v in verts:
        if not any(v in G.ends(e) for e in edges):
            continue
        rest = [e for e in edges if v not in G.ends(e)]
        cand, cexc = _core_excess(G, rest)
        if cexc >= k:
            edges = cand
    return Subgraph(G, frozenset(edges))


def is_locally_minimal(R: Subgraph, k: int) -> bool:
    """True if removing any single vertex of ``R`` drops the core's excess below ``k``."""
    return all(two_core(R.without_vertex(v)).excess < k for v in R.vertices)


def _checked_cycle(H: Subgraph, need: int, ok, bound_text: str) -> CycleCertificate:
    if H.excess < need:
        raise PreconditionError(f"subgraph has excess {H.excess} < {need}")
    C = girth_exact(H)
    if C is None or not ok(C.length, len(H.vertices)):
        got = "no cycle" if C is None else f"length {C.length}"
        raise TheoremViolation(f"{got} on {len(H.vertices)} vertices breaks {bound_text}", H)
    return C


def short_cycle_excess1(H: Subgraph) -> CycleCertificate:
    """Shortest cycle of an excess-1 graph; guaranteed ``3l <= 2|V| + 3``."""
    return _checked_cycle(H, 1, lambda l, n: 3 * l <= 2 * n + 3, "l <= 2n/3 + 1")


def short_cycle_excess2(H: Subgraph) -> CycleCertificate:
    """Shortest cycle of an excess-2 graph; guaranteed ``2l <= |V| + 2``."""
    return _checked_cycle(H, 2, lambda l, n: 2 * l <= n + 2, "l <= n/2 + 1")


class ChordCensus(NamedTuple):
    novel: int
    plain: int
    chords: tuple

    @property
    def total(self) -> int:
        return self.novel + self.plain


def chord_census(R: Subgraph, H: Union[Subgraph, EdgeColouredGraph]) -> ChordCensus:
    """Count chords of ``R`` in ``H``, split by whether their colour occurs in ``R``.

    A chord is an edge of ``H`` outside ``R`` with both ends in ``V(R)``;
    edges parallel to an ``R`` edge count.
    """
    if isinstance(H, EdgeColouredGraph):
        H = H.full()
    if R.min_degree < 2:
        raise PreconditionError("R must have minimum degree at least 2")
    G = H.ambient
    V = R.vertices
    own = R.colours
    novel, plain, chords = 0, 0, []
    for e in sorted(H.edge_ids - R.edge_ids):
        u, v = G.ends(e)
        if u in V and v in V:
            chords.append(e)
            if G.colour(e) in own:
                plain += 1
            else:
                novel += 1
    return ChordCensus(novel, plain, tuple(chords))


def chord_bound(k: int, r: int) -> int:
    """``max(C(2k+2, 2), 6k(r-1))``: chords allowed around a minimal excess-k rainbow graph."""
    return max(comb(2 * k + 2, 2), 6 * k * (r - 1))


def tighten(R: Subgraph, H: Subgraph, k: int) -> Subgraph:
    """Shrink ``V(R)`` using chords from ``H`` until no chord exchange applies.

    ``R`` must be a rainbow subgraph of ``H``'s ambient graph with excess at
    least ``k``. Two exchanges are tried, chords in increasing edge id:

    * a chord ``e`` whose colour is absent from ``R``: add ``e`` and delete a
      degree-2 vertex not on ``e``;
    * a chord ``e`` whose colour is carried by ``f`` in ``R``, with both ends
      of ``f`` of degree 2: swap ``f`` for ``e``.

    Each accepted exchange (followed by re-minimisation) keeps ``R`` rainbow
    with excess ``>= k`` and strictly shrinks ``V(R)``. When neither applies,
    ``R`` satisfies the chord bound of :func:`chord_bound` within ``H``
    unless ``H`` has two parallel edges inside ``V(R)``.
    """
    G = R.ambient
    R = minimal_excess_subgraph(R, k)
    while True:
        moved = None
        deg = R.degrees
        by_colour = {G.colour(e): e for e in R.edge_ids}
        for e in chord_census(R, H).chords:
            u, v = G.ends(e)
            c = G.colour(e)
            if c not in by_colour:
                y = next((x for x in sorted(R.vertices) if deg[x] == 2 and x not in (u, v)), None)
                if y is None:
                    continue
                cand = R.without_vertex(y).with_edges([e])
            else:
                f = by_colour[c]
                if any(deg[x] != 2 for x in G.ends(f)):
                    continue
                cand = R.without_edges([f]).with_edges([e])
            edges, exc = _core_excess(G, cand.edge_ids)
            core = Subgraph(G, frozenset(edges))
            if exc >= k and core.vertices < R.vertices:
                moved = core
                break
        if moved is None:
            return R
        R = minimal_excess_subgraph(moved, k)
