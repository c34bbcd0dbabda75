"""Short rainbow cycles when there are n colours and every class has >= 3 edges.

Pipeline: :func:`prepare` trims the input to exactly ``n`` classes of
exactly 3 edges and sorts classes into 3-stars and the rest. With at least
8 non-star vertices :func:`many_nonstar_branch` finds a rainbow cycle of
length at most ``2n/5 + 7``; otherwise :func:`few_nonstar_branch` gets
``4n/9 + 7`` (or ``ceil(n/3)`` when every vertex centres a star).

The bounds are checked, never used to steer: each branch computes every
candidate cycle exactly and returns the shortest. Ties go to the earlier
candidate, and every other choice (pairs, transversal edges, the vertex
``z``) is the lexicographic minimum, so outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .errors import PreconditionError, TheoremViolation
from .excess import minimal_excess_subgraph, short_cycle_excess1, short_cycle_excess2, tighten
from .graph import CycleCertificate, Digraph, EdgeColouredGraph, Subgraph, validate_certificate
from .oracle import directed_girth, girth_exact

MANY_NONSTAR = "many-nonstar"
FEW_NONSTAR = "few-nonstar"
ALL_STAR = "all-star"


@dataclass(frozen=True)
class ClassProfile:
    star_classes: dict          # colour -> centre
    non_star_classes: frozenset
    star_vertices: frozenset
    non_star_vertices: frozenset


@dataclass(frozen=True)
class Prepared:
    graph: EdgeColouredGraph    # trimmed: n classes of exactly 3 edges
    profile: ClassProfile
    edge_map: tuple             # trimmed edge id -> original edge id


@dataclass
class Outcome:
    """A branch result: the certificate (on the trimmed graph) plus what produced it."""

    certificate: CycleCertificate
    branch: str
    trace: dict = field(default_factory=dict)


@dataclass
class Solution:
    certificate: CycleCertificate  # edge ids of the original graph
    branch: str
    n: int
    trace: dict = field(default_factory=dict)


def _key(G: EdgeColouredGraph, e: int) -> tuple:
    u, v = G.ends(e)
    return (min(u, v), max(u, v), e)


def star_centre(class_edges: Iterable[tuple]) -> Optional[int]:
    """Common vertex of three edges, if they form a 3-star."""
    ends = [set(e[:2]) for e in class_edges]
    if len(ends) != 3:
        return None
    common = ends[0] & ends[1] & ends[2]
    return next(iter(common)) if len(common) == 1 else None


def prepare(G: EdgeColouredGraph) -> Prepared:
    """Keep colours ``0..n-1`` and the 3 lexicographically least edges of each."""
    n = G.n
    if G.colours < n:
        raise PreconditionError(f"{G.colours} colours on {n} vertices; need at least n")
    small = [c for c, s in enumerate(G.class_sizes) if s < 3]
    if small:
        raise PreconditionError(f"colour {small[0]} has {G.class_sizes[small[0]]} < 3 edges")
    edges, edge_map = [], []
    star, non_star = {}, set()
    for c in range(n):
        keep = sorted(G.classes[c], key=lambda e: _key(G, e))[:3]
        trimmed = []
        for e in keep:
            u, v, _ = G.edges[e]
            edges.append((min(u, v), max(u, v), c))
            trimmed.append(edges[-1])
            edge_map.append(e)
        centre = star_centre(trimmed)
        if centre is None:
            non_star.add(c)
        else:
            star[c] = centre
    S = frozenset(star.values())
    profile = ClassProfile(star, frozenset(non_star), S, frozenset(range(n)) - S)
    return Prepared(EdgeColouredGraph(n, edges, n), profile, tuple(edge_map))


def dominates(class_edges: Iterable[tuple], x: int, y: int) -> bool:
    """True iff every edge of the class has an end in ``{x, y}``."""
    return all(u in (x, y) or v in (x, y) for u, v, *_ in class_edges)


def find_undominated_pair(G: EdgeColouredGraph, profile: ClassProfile) -> tuple:
    """Least pair ``x < y`` of non-star vertices dominated by no colour class."""
    N = sorted(profile.non_star_vertices)
    if len(N) < 8:
        raise PreconditionError(f"need at least 8 non-star vertices, have {len(N)}")
    Nset = set(N)
    dominated = set()
    for c in range(G.colours):
        cls = [G.edges[e] for e in G.classes[c]]
        verts = sorted({x for u, v, _ in cls for x in (u, v)} & Nset)
        for x, y in combinations(verts, 2):
            if dominates(cls, x, y):
                dominated.add((x, y))
    for pair in combinations(N, 2):
        if pair not in dominated:
            return pair
    raise TheoremViolation(f"every pair of the {len(N)} non-star vertices is dominated", G)


def transversal_avoiding(G: EdgeColouredGraph, forbidden_vertices=(), forbidden_edges=()) -> tuple:
    """One edge per colour avoiding ``forbidden_vertices``.

    Prefers the least edge outside ``forbidden_edges``; falls back to the
    least allowed edge and counts the overlap. Returns ``(subgraph, overlap)``.
    """
    bad_v = set(forbidden_vertices)
    bad_e = set(forbidden_edges)
    chosen, overlap = [], 0
    for c in range(G.colours):
        allowed = sorted(
            (e for e in G.classes[c] if not bad_v.intersection(G.ends(e))),
            key=lambda e: _key(G, e),
        )
        if not allowed:
            raise PreconditionError(f"every edge of colour {c} meets {sorted(bad_v)}")
        pick = next((e for e in allowed if e not in bad_e), None)
        if pick is None:
            pick = allowed[0]
            overlap += 1
        chosen.append(pick)
    return Subgraph(G, frozenset(chosen)), overlap


def rainbow_two_cycle(S) -> Optional[CycleCertificate]:
    """Least pair of parallel edges (necessarily of distinct colours)."""
    if isinstance(S, EdgeColouredGraph):
        S = S.full()
    G = S.ambient
    first = {}
    best = None
    for e in sorted(S.edge_ids):
        u, v = G.ends(e)
        key = (min(u, v), max(u, v))
        if key in first:
            cand = (key, first[key], e)
            if best is None or cand < best:
                best = cand
        else:
            first[key] = e
    if best is None:
        return None
    (u, v), e1, e2 = best
    return CycleCertificate((u, v), (e1, e2), True)


def _as_rainbow(C: CycleCertificate) -> CycleCertificate:
    return CycleCertificate(C.vertices, C.edge_ids, True)


def _shortest(candidates: list) -> tuple:
    """First shortest ``(name, certificate)`` among non-None candidates, plus all lengths."""
    live = [(name, c) for name, c in candidates if c is not None]
    name, best = min(live, key=lambda nc: nc[1].length)
    return name, best, {nm: c.length for nm, c in live}


def many_nonstar_branch(prep: Prepared) -> Outcome:
    """Rainbow cycle of length at most ``2n/5 + 7`` when ``|N| >= 8``.

    Candidates: a shortest cycle of a vertex-minimal excess-2 rainbow ``R``
    avoiding an undominated pair, a shortest cycle ``C'`` of a transversal
    edge-disjoint from ``R``, and any rainbow 2-cycle. ``R`` is re-tightened
    against ``C'`` until stable so that its chords in ``R + C'`` stay few.
    """
    G, profile = prep.graph, prep.profile
    n = G.n
    x, y = find_undominated_pair(G, profile)
    R0, _ = transversal_avoiding(G, (x, y))
    R = minimal_excess_subgraph(R0, 2)
    rounds = 0
    while True:
        rounds += 1
        Rp, overlap = transversal_avoiding(G, (), R.edge_ids)
        if overlap:
            raise TheoremViolation(f"transversal disjoint from R overlaps it in {overlap} edges", G)
        Cp = girth_exact(Rp)
        if Cp is None:
            raise TheoremViolation("a transversal with n edges on n vertices has no cycle", G)
        H = R.with_edges(Cp.edge_ids)
        R_next = tighten(R, H, 2)
        if R_next.edge_ids == R.edge_ids:
            break
        R = R_next
    A = short_cycle_excess2(R)
    name, C, lengths = _shortest([("R", _as_rainbow(A)), ("C'", _as_rainbow(Cp)), ("2-cycle", rainbow_two_cycle(G))])
    if 5 * C.length > 2 * n + 35:
        raise TheoremViolation(f"length {C.length} > 2n/5 + 7 for n = {n}", G)
    trace = {"pair": (x, y), "R": R, "R_prime": Rp, "C_prime": Cp, "winner": name, "lengths": lengths, "rounds": rounds}
    return Outcome(C, MANY_NONSTAR, trace)


def _all_star(prep: Prepared) -> Outcome:
    G, profile = prep.graph, prep.profile
    n = G.n
    centre_of = profile.star_classes
    if len(centre_of) != n or len(set(centre_of.values())) != n:
        raise TheoremViolation("star centres are not a bijection onto the vertices", G)
    colour_at = {v: c for c, v in centre_of.items()}
    arcs, arc_edge = [], {}
    for c, u in sorted(centre_of.items()):
        for e in G.classes[c]:
            a, b = G.ends(e)
            v = b if a == u else a
            arcs.append((u, v))
            arc_edge[(u, v)] = e
    D = Digraph(n, arcs)
    cyc = directed_girth(D)
    if cyc is None or len(cyc) > -(-n // 3):
        got = "none" if cyc is None else len(cyc)
        raise TheoremViolation(f"directed girth {got} exceeds ceil(n/3) for n = {n}", G)
    C = CycleCertificate(tuple(u for u, _ in cyc), tuple(arc_edge[a] for a in cyc), True)
    return Outcome(C, ALL_STAR, {"digraph": D, "arcs": cyc, "colour_at": colour_at})


def few_nonstar_branch(prep: Prepared) -> Outcome:
    """Rainbow cycle of length at most ``4n/9 + 7`` when ``|N| <= 7``.

    With no non-star vertex the stars, oriented away from their centres,
    form a digraph of minimum out-degree 3 whose shortest directed cycle is
    rainbow. Otherwise, for ``z = min(N)``, two vertex-minimal excess-1
    rainbow subgraphs of ``G - z`` sharing few edges are built and the
    shorter of their girths (or a rainbow 2-cycle) is returned.
    """
    G, profile = prep.graph, prep.profile
    n = G.n
    N = sorted(profile.non_star_vertices)
    if len(N) > 7:
        raise PreconditionError(f"{len(N)} non-star vertices; this branch needs at most 7")
    if not N:
        return _all_star(prep)
    z = N[0]
    T1, _ = transversal_avoiding(G, (z,))
    R1 = minimal_excess_subgraph(T1, 1)
    limit = len(profile.non_star_classes)
    rounds = 0
    while True:
        rounds += 1
        R2p, overlap = transversal_avoiding(G, (z,), R1.edge_ids)
        if overlap > limit:
            raise TheoremViolation(f"overlap {overlap} exceeds {limit} non-star classes", G)
        R2 = minimal_excess_subgraph(R2p, 1)
        H = R1.with_edges(R2.edge_ids)
        R1_next = tighten(R1, H, 1)
        if R1_next.edge_ids == R1.edge_ids:
            break
        R1 = R1_next
    C1 = short_cycle_excess1(R1)
    C2 = short_cycle_excess1(R2)
    name, C, lengths = _shortest([("R1", _as_rainbow(C1)), ("R2", _as_rainbow(C2)), ("2-cycle", rainbow_two_cycle(G))])
    if 9 * C.length > 4 * n + 63:
        raise TheoremViolation(f"length {C.length} > 4n/9 + 7 for n = {n}", G)
    trace = {"z": z, "R1": R1, "R2_prime": R2p, "R2": R2, "overlap": overlap, "winner": name, "lengths": lengths, "rounds": rounds}
    return Outcome(C, FEW_NONSTAR, trace)


def solve(G: EdgeColouredGraph) -> Solution:
    """Run the whole pipeline and return the certificate on ``G`` itself."""
    prep = prepare(G)
    if len(prep.profile.non_star_vertices) >= 8:
        out = many_nonstar_branch(prep)
    else:
        out = few_nonstar_branch(prep)
    C = out.certificate.remap(prep.edge_map)
    n = G.n
    problem = validate_certificate(G, C)
    if problem is not None:
        raise TheoremViolation(f"certificate rejected on the input graph: {problem}", G)
    if 9 * C.length > 4 * n + 63:
        raise TheoremViolation(f"length {C.length} > 4n/9 + 7 for n = {n}", G)
    return Solution(C, out.branch, n, out.trace)


def find_short_rainbow_cycle(G: EdgeColouredGraph) -> CycleCertificate:
    """Rainbow cycle of length at most ``4n/9 + 7``; see :func:`solve`."""
    return solve(G).certificate
