"""Exact (brute-force) answers used as ground truth.

* :func:`rainbow_girth_exact` -- shortest rainbow cycle up to a length cap.
  Exponential in the cap.
* :func:`girth_exact` -- shortest cycle, colours ignored. Polynomial.
* :func:`directed_girth` -- shortest directed cycle. Polynomial.
* :func:`max_stable_set` -- maximum independent set by branch and bound.

Results are ``None`` when no cycle exists (within the cap, for the rainbow
search); otherwise a certificate, whose ``length`` is the answer.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Union

from .errors import PreconditionError
from .graph import CycleCertificate, Digraph, EdgeColouredGraph, Subgraph

STABLE_SET_LIMIT = 40


def default_cap(G: EdgeColouredGraph) -> int:
    """``ceil(n / r_min) + 2`` where ``r_min`` is the smallest class size."""
    r_min = min(G.class_sizes, default=0)
    if r_min == 0:
        return max(G.n, 2)
    return -(-G.n // r_min) + 2


def rainbow_girth_exact(G: EdgeColouredGraph, cap: Optional[int] = None) -> Optional[CycleCertificate]:
    """Shortest rainbow cycle of length at most ``cap``, or ``None``.

    Iterative deepening on the cycle length. For each length every vertex is
    tried as the anchor (the smallest vertex of the cycle) in increasing
    order, and paths only visit vertices larger than the anchor. Neighbours
    are explored in ``(vertex, edge id)`` order, so the first hit is the
    lexicographically least certificate among the shortest ones. Colours
    used on the current path are held in an int bitset.
    """
    if cap is None:
        cap = default_cap(G)
    if cap < 2:
        raise PreconditionError(f"cap must be at least 2, got {cap}")
    n = G.n
    limit = min(cap, n)
    inc = G.incidence
    colour_bit = [1 << c for _, _, c in G.edges]

    # Per-anchor data, built lazily: BFS distance to the anchor inside the
    # vertices >= anchor, and the edges running back into the anchor.
    dists: dict = {}
    backs: dict = {}

    def anchor_data(a):
        if a not in dists:
            dist = {a: 0}
            queue = deque([a])
            while queue:
                v = queue.popleft()
                for w, _ in inc[v]:
                    if w > a and w not in dist:
                        dist[w] = dist[v] + 1
                        queue.append(w)
            back = {}
            for w, e in inc[a]:
                if w > a:
                    back.setdefault(w, []).append(e)
            dists[a] = dist
            backs[a] = back
        return dists[a], backs[a]

    for L in range(2, limit + 1):
        for a in range(n):
            if len(inc[a]) < 2:
                continue
            dist, back = anchor_data(a)
            if len(dist) < 2:
                continue
            path_v = [a]
            path_e = []
            on_path = {a}

            def dfs(v, depth, mask):
                if depth == L - 1:
                    for e in back.get(v, ()):
                        if not mask & colour_bit[e]:
                            path_e.append(e)
                            return True
                    return False
                remaining = L - depth - 1
                for w, e in inc[v]:
                    if w <= a or w in on_path:
                        continue
                    bit = colour_bit[e]
                    if mask & bit or dist.get(w, L) > remaining:
                        continue
                    path_v.append(w)
                    path_e.append(e)
                    on_path.add(w)
                    if dfs(w, depth + 1, mask | bit):
                        return True
                    on_path.discard(w)
                    path_e.pop()
                    path_v.pop()
                return False

            if dfs(a, 0, 0):
                return CycleCertificate(tuple(path_v), tuple(path_e), True)
    return None


def _canonical(vertices: list, edges: list) -> tuple:
    """Rotate/reflect a cycle to start at its least vertex, smaller side first."""
    k = len(vertices)
    i = vertices.index(min(vertices))
    fwd_v = [vertices[(i + j) % k] for j in range(k)]
    fwd_e = [edges[(i + j) % k] for j in range(k)]
    # reversed walk from the same start: v_i, v_{i-1}, ...
    rev_v = [vertices[(i - j) % k] for j in range(k)]
    rev_e = [edges[(i - j - 1) % k] for j in range(k)]
    if (rev_v, rev_e) < (fwd_v, fwd_e):
        return tuple(rev_v), tuple(rev_e)
    return tuple(fwd_v), tuple(fwd_e)


def _as_subgraph(S: Union[Subgraph, EdgeColouredGraph]) -> Subgraph:
    return S.full() if isinstance(S, EdgeColouredGraph) else S


def girth_exact(S: Union[Subgraph, EdgeColouredGraph]) -> Optional[CycleCertificate]:
    """Shortest cycle of ``S`` ignoring colours; ``None`` for a forest.

    BFS from every vertex. Each non-tree edge closes a cycle through the
    lowest common ancestor of its ends; the minimum over all roots is the
    girth. A second edge between the same pair gives a 2-cycle.
    """
    S = _as_subgraph(S)
    G = S.ambient
    adj: dict = {}
    for e in sorted(S.edge_ids):
        u, v = G.ends(e)
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    for lst in adj.values():
        lst.sort()

    best = None  # (length, vertices, edges)
    for root in sorted(adj):
        dist = {root: 0}
        parent = {root: (None, None)}  # vertex -> (parent vertex, parent edge)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best[0]:
                break
            pe = parent[u][1]
            for w, e in adj[u]:
                if e == pe:
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = (u, e)
                    queue.append(w)
                    continue
                if best is not None and dist[u] + dist[w] + 1 >= best[0]:
                    continue
                cyc = _close_cycle(parent, dist, u, w, e)
                if best is None or len(cyc[0]) < best[0]:
                    best = (len(cyc[0]),) + cyc
    if best is None:
        return None
    vs, es = _canonical(best[1], best[2])
    return CycleCertificate(vs, es, rainbow=False)


def _close_cycle(parent, dist, u, w, e):
    """Cycle formed by tree paths to ``u`` and ``w`` plus the edge ``e``."""
    left_v, left_e = [u], []
    right_v, right_e = [w], []
    a, b = u, w
    while dist[a] > dist[b]:
        p, pe = parent[a]
        left_e.append(pe)
        left_v.append(p)
        a = p
    while dist[b] > dist[a]:
        p, pe = parent[b]
        right_e.append(pe)
        right_v.append(p)
        b = p
    while a != b:
        p, pe = parent[a]
        left_e.append(pe)
        left_v.append(p)
        a = p
        q, qe = parent[b]
        right_e.append(qe)
        right_v.append(q)
        b = q
    # left_v: u .. lca, right_v: w .. lca
    lca_to_u_v = left_v[::-1]          # lca .. u
    lca_to_u_e = left_e[::-1]          # edges along lca .. u
    w_to_lca_v = right_v[:-1]          # w .. (child of lca)
    w_to_lca_e = right_e               # edges along w .. lca
    vertices = lca_to_u_v + w_to_lca_v
    edges = lca_to_u_e + [e] + w_to_lca_e
    return vertices, edges


def directed_girth(D: Digraph) -> Optional[tuple]:
    """Shortest directed cycle as a tuple of arcs, or ``None`` if acyclic."""
    out = D.out_neighbours
    into = [[] for _ in range(D.n)]
    for u, v in D.arcs:
        into[v].append(u)
    best = None
    for s in range(D.n):
        if not into[s] or not out[s]:
            continue
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        closing = None
        targets = set(into[s])
        while queue and closing is None:
            u = queue.popleft()
            if best is not None and dist[u] + 1 >= len(best):
                break
            if u in targets:
                closing = u
                break
            for w in out[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
        if closing is None:
            continue
        path = [closing]
        while path[-1] != s:
            path.append(parent[path[-1]])
        path.reverse()  # s .. closing
        if best is None or len(path) < len(best):
            best = path
    if best is None:
        return None
    k = len(best)
    i = best.index(min(best))
    cyc = best[i:] + best[:i]
    return tuple((cyc[j], cyc[(j + 1) % k]) for j in range(k))


def max_stable_set(S: Union[Subgraph, EdgeColouredGraph], limit: int = STABLE_SET_LIMIT) -> tuple:
    """Exact maximum stable set of ``S`` as ``(size, frozenset of vertices)``.

    Only vertices of ``S`` (endpoints of its edges) are considered. Branch
    and bound on a highest-degree vertex; vertices of degree at most 1 are
    taken greedily, and a branch is cut when ``|P| - ceil(|E(P)| / maxdeg)``
    cannot beat the incumbent.
    """
    S = _as_subgraph(S)
    verts = sorted(S.vertices)
    if len(verts) > limit:
        raise PreconditionError(f"{len(verts)} vertices exceeds the exact-search limit {limit}")
    idx = {v: i for i, v in enumerate(verts)}
    k = len(verts)
    adj = [0] * k
    for e in S.edge_ids:
        u, v = S.ambient.ends(e)
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]

    # greedy lower bound: repeatedly take a minimum-degree vertex
    P, greedy = (1 << k) - 1, 0
    while P:
        v = min(_bits(P), key=lambda i: ((adj[i] & P).bit_count(), i))
        greedy |= 1 << v
        P &= ~(adj[v] | 1 << v)
    best = [greedy.bit_count(), greedy]

    def rec(P, chosen):
        while True:
            low = next((i for i in _bits(P) if (adj[i] & P).bit_count() <= 1), None)
            if low is None:
                break
            chosen |= 1 << low
            P &= ~(adj[low] | 1 << low)
        size = chosen.bit_count()
        if not P:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        degs = [(adj[i] & P).bit_count() for i in _bits(P)]
        maxdeg = max(degs)
        nedges = sum(degs) // 2
        if size + P.bit_count() - (-(-nedges // maxdeg)) <= best[0]:
            return
        v = max(_bits(P), key=lambda i: ((adj[i] & P).bit_count(), -i))
        rec(P & ~(adj[v] | 1 << v), chosen | 1 << v)
        rec(P & ~(1 << v), chosen)

    rec((1 << k) - 1, 0)
    return best[0], frozenset(verts[i] for i in _bits(best[1]))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
