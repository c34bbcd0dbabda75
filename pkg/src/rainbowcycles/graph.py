"""Edge-coloured multigraphs, digraphs, subgraphs and cycle certificates.

Vertices and colours are dense integer ranges ``0..n-1`` and ``0..t-1``.
Edges are stored in input order and referred to by their index in that
order ("edge id"). Parallel edges are allowed as long as they carry
different colours; loops never are.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import InvalidGraphError

Edge = tuple  # (u, v, colour)


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class EdgeColouredGraph:
    """An edge-coloured multigraph on vertices ``0..n-1``.

    ``colours`` defaults to one more than the largest colour used. Every
    colour in ``0..colours-1`` must own at least one edge.
    """

    n: int
    edges: tuple
    colours: Optional[int] = None

    def __post_init__(self):
        edges = tuple((int(u), int(v), int(c)) for u, v, c in self.edges)
        object.__setattr__(self, "edges", edges)
        t = self.colours
        if t is None:
            t = 1 + max((c for _, _, c in edges), default=-1)
            object.__setattr__(self, "colours", t)
        if self.n < 0 or t < 0:
            raise InvalidGraphError("vertex and colour counts must be non-negative")

        seen = set()
        for i, (u, v, c) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"edge {i}: vertex out of range", i)
            if not 0 <= c < t:
                raise InvalidGraphError(f"edge {i}: colour {c} out of range", i)
            if u == v:
                raise InvalidGraphError(f"edge {i}: loop at vertex {u}", i)
            key = (_pair(u, v), c)
            if key in seen:
                raise InvalidGraphError(
                    f"edge {i}: colour {c} already joins {u} and {v} (per-colour parallel edge)", i
                )
            seen.add(key)

        sizes = [0] * t
        for _, _, c in edges:
            sizes[c] += 1
        for c, size in enumerate(sizes):
            if size == 0:
                raise InvalidGraphError(f"colour {c} has no edges")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def classes(self) -> tuple:
        """Edge ids of each colour class, in input order."""
        out = [[] for _ in range(self.colours)]
        for i, (_, _, c) in enumerate(self.edges):
            out[c].append(i)
        return tuple(tuple(ids) for ids in out)

    @cached_property
    def class_sizes(self) -> tuple:
        return tuple(len(ids) for ids in self.classes)

    @cached_property
    def incidence(self) -> tuple:
        """For each vertex, the sorted tuple of ``(neighbour, edge id)``."""
        inc = [[] for _ in range(self.n)]
        for i, (u, v, _) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(sorted(x)) for x in inc)

    def colour(self, e: int) -> int:
        return self.edges[e][2]

    def ends(self, e: int) -> tuple[int, int]:
        u, v, _ = self.edges[e]
        return u, v

    def full(self) -> "Subgraph":
        return Subgraph(self, frozenset(range(self.m)))


@dataclass(frozen=True)
class Digraph:
    """A simple digraph: no loops, at most one arc from u to v."""

    n: int
    arcs: tuple

    def __post_init__(self):
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        seen = set()
        for i, (u, v) in enumerate(arcs):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"arc {i}: vertex out of range", i)
            if u == v:
                raise InvalidGraphError(f"arc {i}: loop at vertex {u}", i)
            if (u, v) in seen:
                raise InvalidGraphError(f"arc {i}: duplicate arc {u}->{v}", i)
            seen.add((u, v))

    @cached_property
    def out_neighbours(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def out_degrees(self) -> tuple:
        return tuple(len(x) for x in self.out_neighbours)


@dataclass(frozen=True)
class Subgraph:
    """An edge subset of an ambient graph.

    The vertex set is always the set of endpoints of the selected edges, so
    isolated vertices never appear.
    """

    ambient: EdgeColouredGraph = field(repr=False, compare=False)
    edge_ids: frozenset

    def __post_init__(self):
        ids = frozenset(self.edge_ids)
        object.__setattr__(self, "edge_ids", ids)
        m = self.ambient.m
        for e in ids:
            if not 0 <= e < m:
                raise IndexError(f"edge id {e} out of range for a graph with {m} edges")

    def __len__(self) -> int:
        return len(self.edge_ids)

    @cached_property
    def degrees(self) -> dict:
        deg = defaultdict(int)
        for e in self.edge_ids:
            u, v = self.ambient.ends(e)
            deg[u] += 1
            deg[v] += 1
        return dict(deg)

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset(self.degrees)

    @property
    def excess(self) -> int:
        return len(self.edge_ids) - len(self.vertices)

    @cached_property
    def colours(self) -> frozenset:
        return frozenset(self.ambient.colour(e) for e in self.edge_ids)

    @property
    def is_rainbow(self) -> bool:
        return len(self.colours) == len(self.edge_ids)

    @property
    def min_degree(self) -> int:
        return min(self.degrees.values(), default=0)

    def sorted_edges(self) -> list:
        return sorted(self.edge_ids)

    def without_vertex(self, v: int) -> "Subgraph":
        G = self.ambient
        return Subgraph(G, frozenset(e for e in self.edge_ids if v not in G.ends(e)))

    def without_vertices(self, vs: Iterable[int]) -> "Subgraph":
        vs = set(vs)
        G = self.ambient
        return Subgraph(G, frozenset(e for e in self.edge_ids if not vs.intersection(G.ends(e))))

    def with_edges(self, ids: Iterable[int]) -> "Subgraph":
        return Subgraph(self.ambient, self.edge_ids | frozenset(ids))

    def without_edges(self, ids: Iterable[int]) -> "Subgraph":
        return Subgraph(self.ambient, self.edge_ids - frozenset(ids))

    def as_graph(self) -> tuple[EdgeColouredGraph, list]:
        """Standalone copy on the same vertex ids, plus the edge-id map back.

        Colours are re-indexed densely, so the copy is a valid
        ``EdgeColouredGraph`` even when some ambient colours are unused.
        """
        ids = self.sorted_edges()
        relabel = {c: i for i, c in enumerate(sorted(self.colours))}
        edges = [(u, v, relabel[c]) for u, v, c in (self.ambient.edges[e] for e in ids)]
        return EdgeColouredGraph(self.ambient.n, edges, len(relabel)), ids


@dataclass(frozen=True)
class CycleCertificate:
    """A cycle listed as ``v0 .. v_{l-1}``; ``edge_ids[i]`` joins ``v_i`` and ``v_{i+1 mod l}``."""

    vertices: tuple
    edge_ids: tuple
    rainbow: bool = True

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(self, "edge_ids", tuple(int(e) for e in self.edge_ids))

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    def colours(self, G: EdgeColouredGraph) -> tuple:
        return tuple(G.colour(e) for e in self.edge_ids)

    def remap(self, edge_map) -> "CycleCertificate":
        """Translate edge ids through ``edge_map`` (e.g. back to an untrimmed graph)."""
        return CycleCertificate(self.vertices, tuple(edge_map[e] for e in self.edge_ids), self.rainbow)


@dataclass(frozen=True)
class Violation:
    """Why a certificate was rejected: invariant name and offending position."""

    kind: str
    index: Optional[int]
    message: str

    def __str__(self):
        where = "" if self.index is None else f" at position {self.index}"
        return f"{self.kind}{where}: {self.message}"


def excess(S: Subgraph) -> int:
    """Number of edges minus number of (non-isolated) vertices."""
    return S.excess


def two_core(S: Subgraph) -> Subgraph:
    """Largest subgraph of ``S`` with minimum degree at least 2."""
    G = S.ambient
    inc = defaultdict(list)
    for e in S.edge_ids:
        u, v = G.ends(e)
        inc[u].append(e)
        inc[v].append(e)
    deg = {v: len(es) for v, es in inc.items()}
    alive = set(S.edge_ids)
    stack = [v for v, d in deg.items() if d <= 1]
    while stack:
        v = stack.pop()
        for e in inc[v]:
            if e not in alive:
                continue
            alive.remove(e)
            u, w = G.ends(e)
            w = w if u == v else u
            deg[v] -= 1
            deg[w] -= 1
            if deg[w] == 1:
                stack.append(w)
    return Subgraph(G, frozenset(alive))


def colour_class(G: EdgeColouredGraph, c: int) -> tuple:
    """Edge ids of colour ``c`` in input order."""
    if not 0 <= c < G.colours:
        raise IndexError(f"colour {c} out of range (graph has {G.colours} colours)")
    return G.classes[c]


def validate_certificate(G: EdgeColouredGraph, C: CycleCertificate) -> Optional[Violation]:
    """Check ``C`` against ``G``; return ``None`` if valid, else the first violation."""
    vs, es = C.vertices, C.edge_ids
    if len(vs) != len(es):
        return Violation("length-mismatch", None, f"{len(vs)} vertices but {len(es)} edges")
    if len(vs) < 2:
        return Violation("too-short", None, f"a cycle needs at least 2 vertices, got {len(vs)}")
    seen = {}
    for i, v in enumerate(vs):
        if not 0 <= v < G.n:
            return Violation("vertex-range", i, f"vertex {v} not in graph")
        if v in seen:
            return Violation("repeated-vertex", i, f"vertex {v} already at position {seen[v]}")
        seen[v] = i
    used = {}
    for i, e in enumerate(es):
        if not 0 <= e < G.m:
            return Violation("edge-range", i, f"edge id {e} not in graph")
        if e in used:
            return Violation("repeated-edge", i, f"edge {e} already at position {used[e]}")
        used[e] = i
        a, b = vs[i], vs[(i + 1) % len(vs)]
        if _pair(*G.ends(e)) != _pair(a, b):
            return Violation("edge-mismatch", i, f"edge {e} does not join {a} and {b}")
    if C.rainbow:
        first = {}
        for i, e in enumerate(es):
            c = G.colour(e)
            if c in first:
                return Violation("repeated-colour", i, f"colour {c} already used at position {first[c]}")
            first[c] = i
    return None


def is_rainbow_cycle(G: EdgeColouredGraph, C: CycleCertificate) -> bool:
    return C.rainbow and validate_certificate(G, C) is None
