"""Instance constructors and the functionals psi and defect.

Random generators draw from :class:`~rainbowcycles.rng.SplitMix64`; the
exact draw order is documented in the README so seeds are portable.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Optional

from .errors import PreconditionError
from .graph import Digraph, EdgeColouredGraph
from .rng import SplitMix64

SHAPES = ("uniform", "star", "triangle", "matching")

RED, BLUE, GREEN = 0, 1, 2
SIMPLE_ATTEMPTS = 10_000


def from_digraph(D: Digraph, return_mapping: bool = False):
    """Forget orientations and colour arc ``(u, v)`` with its tail ``u``.

    Sinks would give empty colour classes, so their colours are dropped and
    the rest re-indexed in increasing vertex order. With
    ``return_mapping=True`` the list ``colour -> tail vertex`` is returned too.
    """
    tails = [v for v in range(D.n) if D.out_degrees[v] > 0]
    colour_of = {v: i for i, v in enumerate(tails)}
    edges = [(u, v, colour_of[u]) for u, v in D.arcs]
    G = EdgeColouredGraph(D.n, edges, len(tails))
    return (G, tails) if return_mapping else G


def circulant_digraph(n: int, jumps: Iterable[int]) -> Digraph:
    """Arcs ``u -> u + j (mod n)`` for every jump ``j``."""
    jumps = sorted({j % n for j in jumps})
    if not jumps or 0 in jumps:
        raise PreconditionError("jumps must be non-zero modulo n")
    return Digraph(n, [(u, (u + j) % n) for u in range(n) for j in jumps])


def star_to_triangle(G: EdgeColouredGraph, colours: Iterable[int]) -> EdgeColouredGraph:
    """Replace each listed 3-star class by the triangle on its three leaves."""
    targets = set(colours)
    edges = [e for e in G.edges if e[2] not in targets]
    for c in sorted(targets):
        ids = G.classes[c]
        if len(ids) != 3:
            raise PreconditionError(f"colour {c} has {len(ids)} edges, need 3")
        ends = [set(G.ends(e)) for e in ids]
        centre = ends[0] & ends[1] & ends[2]
        if len(centre) != 1:
            raise PreconditionError(f"colour {c} is not a star")
        leaves = sorted(set().union(*ends) - centre)
        a, b, d = leaves
        edges += [(a, b, c), (b, d, c), (a, d, c)]
    return EdgeColouredGraph(G.n, edges, G.colours)


def replace_class(G: EdgeColouredGraph, c: int, pairs: Iterable[tuple]) -> EdgeColouredGraph:
    """Swap colour ``c``'s edges for ``pairs``, keeping all other edges in order."""
    edges = [e for e in G.edges if e[2] != c]
    edges += [(min(u, v), max(u, v), c) for u, v in pairs]
    return EdgeColouredGraph(G.n, edges, G.colours)


def one_triangle_circulant(n: int, jumps=(1, 2, 3), spread: Optional[int] = None) -> EdgeColouredGraph:
    """Star classes of a circulant, except colour 0 which becomes a triangle.

    The triangle sits on ``{s, 2s, 3s}`` with ``s = spread`` (default
    ``n // 4``), far from the jump pairs, so no rainbow 2-cycle appears.
    """
    s = n // 4 if spread is None else spread
    G = from_digraph(circulant_digraph(n, jumps))
    return replace_class(G, 0, [(s, 2 * s), (2 * s, 3 * s), (s, 3 * s)])


def _balance_parts(n: int, side: int):
    m = comb(n, 2)
    q, rem = divmod(m, 3)
    # extra units go to red first, then blue
    target = [q + (rem > 0), q + (rem > 1), q]
    blue0 = side * side
    green0 = (n - 2 * side) * 2 * side
    move_blue = target[BLUE] - blue0
    move_green = target[GREEN] - green0
    inner = comb(side, 2)
    if 0 <= move_blue <= inner and 0 <= move_green <= inner:
        return move_blue, move_green
    return None


def balanced_three_colouring(n: int) -> EdgeColouredGraph:
    """3-colouring of ``K_n`` with no rainbow cycle and near-equal classes.

    Parts ``X, Y, Z`` take the lowest ids in that order with
    ``|X| = |Y| = ceil(2n/5)``. Edges inside a part are red (0), ``X-Y`` blue
    (1), ``Z-(X u Y)`` green (2). The lexicographically least ``X``-internal
    edges are then recoloured blue and ``Y``-internal ones green until the
    class sizes differ by at most one.

    For a few ``n`` just above 100 the blue class already exceeds a third
    of the edges when ``|X| = ceil(2n/5)``; ``floor(2n/5)`` is used instead
    in that case. Neither choice affects the absence of rainbow triangles.
    """
    if n < 100:
        raise PreconditionError("construction needs n >= 100")
    side = -(-2 * n // 5)
    moves = _balance_parts(n, side)
    if moves is None:
        side = 2 * n // 5
        moves = _balance_parts(n, side)
    if moves is None:
        raise PreconditionError(f"no balanced split found for n = {n}")
    move_blue, move_green = moves

    def part(v):
        return 0 if v < side else 1 if v < 2 * side else 2

    edges = []
    left = {0: move_blue, 1: move_green}
    for u in range(n):
        for v in range(u + 1, n):
            pu, pv = part(u), part(v)
            if pu == pv:
                c = RED
                if pu in left and left[pu] > 0:
                    left[pu] -= 1
                    c = BLUE if pu == 0 else GREEN
            elif {pu, pv} == {0, 1}:
                c = BLUE
            else:
                c = GREEN
            edges.append((u, v, c))
    return EdgeColouredGraph(n, edges, 3)


def psi_graph(G: EdgeColouredGraph) -> Fraction:
    """Sum of reciprocal colour-class sizes."""
    return sum((Fraction(1, s) for s in G.class_sizes), Fraction(0))


def psi_digraph(D: Digraph) -> Fraction:
    """Sum of reciprocal out-degrees; undefined when a sink exists."""
    if 0 in D.out_degrees:
        raise PreconditionError(f"vertex {D.out_degrees.index(0)} is a sink")
    return sum((Fraction(1, d) for d in D.out_degrees), Fraction(0))


def defect(D: Digraph, r: int) -> int:
    """Total shortfall ``r - outdeg(u)`` over vertices of out-degree at most ``r``."""
    return sum(r - d for d in D.out_degrees if d <= r)


def _distinct_vertices(rng: SplitMix64, n: int, k: int, taken=()) -> list:
    out, seen = [], set(taken)
    while len(out) < k:
        v = rng.below(n)
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def _class_pairs(rng: SplitMix64, n: int, size: int, shape: str) -> list:
    if shape == "star":
        centre = rng.below(n)
        return [(centre, leaf) for leaf in _distinct_vertices(rng, n, size, [centre])]
    if shape == "triangle":
        a, b, c = _distinct_vertices(rng, n, 3)
        return [(a, b), (b, c), (a, c)]
    if shape == "matching":
        vs = _distinct_vertices(rng, n, 2 * size)
        return [(vs[2 * i], vs[2 * i + 1]) for i in range(size)]
    pairs, seen = [], set()
    while len(pairs) < size:
        u, v = rng.below(n), rng.below(n)
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return pairs


def random_instance(
    n: int,
    t: int,
    r: int,
    seed: int,
    shape: str = "uniform",
    r_min: Optional[int] = None,
    purity: int = 100,
    simple: bool = False,
) -> EdgeColouredGraph:
    """Seeded random edge-coloured graph with ``t`` classes.

    Each class has ``r`` edges, or a uniform size in ``[r_min, r]`` when
    ``r_min`` is given. ``shape`` picks the class structure; with
    ``purity < 100`` each class independently uses ``shape`` with that
    percentage chance and ``uniform`` otherwise. Pairs inside a class are
    distinct; different classes may repeat a pair unless ``simple`` is set,
    in which case a class touching an already used pair is redrawn whole.
    """
    if shape not in SHAPES:
        raise PreconditionError(f"unknown shape {shape!r}")
    lo = r if r_min is None else r_min
    if n < 0 or t < 0 or lo < 1 or lo > r:
        raise PreconditionError("need n, t >= 0 and 1 <= r_min <= r")
    if t and r > comb(n, 2):
        raise PreconditionError(f"class size {r} exceeds C({n},2) = {comb(n, 2)}")
    if t and shape == "star" and r > n - 1:
        raise PreconditionError("a star with r edges needs r <= n - 1")
    if t and shape == "triangle" and (lo != 3 or r != 3):
        raise PreconditionError("triangle classes need exactly 3 edges")
    if t and shape == "matching" and 2 * r > n:
        raise PreconditionError("a matching with r edges needs 2r <= n")

    rng = SplitMix64(seed)
    edges, used = [], set()
    for c in range(t):
        size = r if lo == r else lo + rng.below(r - lo + 1)
        kind = shape
        if purity < 100 and not rng.chance(purity, 100):
            kind = "uniform"
        for _ in range(SIMPLE_ATTEMPTS):
            pairs = [(min(u, v), max(u, v)) for u, v in _class_pairs(rng, n, size, kind)]
            if not simple or used.isdisjoint(pairs):
                break
        else:
            raise PreconditionError(f"could not place colour {c} without reusing a pair")
        used.update(pairs)
        edges += [(u, v, c) for u, v in pairs]
    return EdgeColouredGraph(n, edges, t)


def random_digraph(n: int, min_outdeg: int, seed: int, max_outdeg: Optional[int] = None) -> Digraph:
    """Seeded digraph; each vertex gets a uniform random set of out-neighbours.

    Out-degrees are exactly ``min_outdeg``, or uniform in
    ``[min_outdeg, max_outdeg]`` when ``max_outdeg`` is given.
    """
    hi = min_outdeg if max_outdeg is None else max_outdeg
    if min_outdeg < 0 or hi < min_outdeg:
        raise PreconditionError("need 0 <= min_outdeg <= max_outdeg")
    if n > 0 and hi > n - 1:
        raise PreconditionError(f"out-degree {hi} impossible on {n} vertices")
    rng = SplitMix64(seed)
    arcs = []
    for u in range(n):
        d = min_outdeg if hi == min_outdeg else min_outdeg + rng.below(hi - min_outdeg + 1)
        arcs += [(u, v) for v in _distinct_vertices(rng, n, d, [u])]
    return Digraph(n, arcs)
