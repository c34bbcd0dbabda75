"""Randomized bound hunting and property suites.

Trial ``i`` of a run with seed ``S`` always uses seed ``S ^ i``, and results
are aggregated in trial order, so reports do not depend on how many worker
processes ran them.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from math import ceil, comb, floor
from typing import Callable, Optional

import numpy as np

from .excess import chord_bound, chord_census, minimal_excess_subgraph
from .formats import write_dgr, write_ecg
from .graph import EdgeColouredGraph, Subgraph, two_core
from .instances import defect, from_digraph, psi_digraph, psi_graph, random_digraph, random_instance
from .oracle import directed_girth, girth_exact, max_stable_set, rainbow_girth_exact
from .r3 import rainbow_two_cycle
from .rng import SplitMix64

CHECKS = ("aharoni", "r2", "psi", "dpsi", "thm41")
JOBS_ENV = "RAINBOW_JOBS"


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def run_trials(fn: Callable, seed: int, trials: int, jobs: int = 1) -> list:
    """``[fn(seed ^ i) for i in range(trials)]``, optionally across processes."""
    seeds = [seed ^ i for i in range(trials)]
    if jobs <= 1 or trials < 2:
        return [fn(s) for s in seeds]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, seeds, chunksize=max(1, trials // (4 * jobs))))


# ---------------------------------------------------------------- hunts


@dataclass
class HuntTrial:
    seed: int
    value: Optional[int]      # rainbow/directed girth; None if none within the cap
    bound: int
    verdict: str              # "ok", "finding" or "fault"
    detail: str = ""


@dataclass
class HuntReport:
    check: str
    params: dict
    trials: list = field(default_factory=list)

    @property
    def faults(self) -> list:
        return [(i, t) for i, t in enumerate(self.trials) if t.verdict == "fault"]

    @property
    def findings(self) -> list:
        return [(i, t) for i, t in enumerate(self.trials) if t.verdict == "finding"]

    def histogram(self) -> Counter:
        return Counter("none" if t.value is None else t.value for t in self.trials)

    def witness(self) -> Optional[int]:
        """Trial index worth keeping: first fault, else first finding, else first maximum."""
        if self.faults:
            return self.faults[0][0]
        if self.findings:
            return self.findings[0][0]
        if not self.trials:
            return None
        def rank(i):
            v = self.trials[i].value
            return (1, 0) if v is None else (0, v)
        return max(range(len(self.trials)), key=lambda i: (rank(i), -i))

    def render(self) -> str:
        p = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"hunt check={self.check} {p}"]
        w = self.witness()
        if w is not None:
            t = self.trials[w]
            shown = f"none-within {self.trials[w].bound + 1}" if t.value is None else str(t.value)
            lines.append(f"max-observed {shown} (trial {w}, seed {t.seed})")
        hist = self.histogram()
        keys = sorted((k for k in hist if k != "none")) + (["none"] if "none" in hist else [])
        lines.append("histogram " + " ".join(f"{k}:{hist[k]}" for k in keys))
        lines.append(f"findings {len(self.findings)}")
        lines.append(f"faults {len(self.faults)}")
        for label, rows in (("FINDING", self.findings), ("FAULT", self.faults)):
            for i, t in rows:
                lines.append(f"{label} trial={i} seed={t.seed} value={t.value} bound={t.bound} {t.detail}".rstrip())
        return "\n".join(lines) + "\n"


def _hunt_instance(check, n, t, r, shape, simple, seed):
    if check in ("dpsi", "thm41"):
        return random_digraph(n, 1, seed, max_outdeg=min(n - 1, r + 1))
    if check == "psi":
        return random_instance(n, n, 2, seed, r_min=1, simple=simple)
    if check == "r2":
        return random_instance(n, n, 2, seed, shape, simple=simple)
    return random_instance(n, t, r, seed, shape, simple=simple)


def _hunt_trial(check, n, t, r, shape, simple, seed) -> HuntTrial:
    inst = _hunt_instance(check, n, t, r, shape, simple, seed)
    if check == "dpsi":
        g = directed_girth(inst)
        value = None if g is None else len(g)
        bound = floor(2 * psi_digraph(inst))
        ok = value is not None and value <= bound
        return HuntTrial(seed, value, bound, "ok" if ok else "fault")
    if check == "thm41":
        g = directed_girth(inst)
        value = None if g is None else len(g)
        need = r * (value - 1) + 1 - defect(inst, r) if value is not None else None
        if value is None:
            return HuntTrial(seed, None, n, "fault", "acyclic digraph without sinks")
        applies = value >= 2 * r - 1
        ok = not applies or n >= need
        return HuntTrial(seed, value, n, "ok" if ok else "fault", f"needs n>={need}" if applies else "")
    if check == "aharoni":
        bound = -(-n // r)
    elif check == "r2":
        bound = -(-n // 2)
    else:
        bound = ceil(psi_graph(inst))
    C = rainbow_girth_exact(inst, max(2, bound + 1))
    value = None if C is None else C.length
    if value is not None and value <= bound:
        return HuntTrial(seed, value, bound, "ok")
    if check == "aharoni":
        # conjecture only speaks about t >= n
        return HuntTrial(seed, value, bound, "finding" if t >= n else "ok")
    return HuntTrial(seed, value, bound, "fault")


def hunt(
    check: str,
    n: int,
    t: int,
    r: int,
    trials: int,
    seed: int,
    shape: str = "uniform",
    simple: bool = False,
    jobs: int = 1,
) -> HuntReport:
    """Run ``trials`` seeded instances against one bound.

    ``aharoni`` samples ``t`` classes of ``r`` edges; ``r2`` uses ``n``
    classes of 2 edges; ``psi`` uses ``n`` classes of 1 or 2 edges; ``dpsi``
    and ``thm41`` sample digraphs with out-degrees in ``[1, r + 1]`` and
    check the bound for that ``r``.
    """
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r}")
    _hunt_instance(check, n, t, r, shape, simple, seed)  # fail fast on bad parameters
    fn = partial(_hunt_trial, check, n, t, r, shape, simple)
    params = {"n": n, "t": t, "r": r, "shape": shape, "simple": int(simple), "trials": trials, "seed": seed}
    return HuntReport(check, params, run_trials(fn, seed, trials, jobs))


def witness_text(report: HuntReport) -> Optional[str]:
    i = report.witness()
    if i is None:
        return None
    p = report.params
    inst = _hunt_instance(report.check, p["n"], p["t"], p["r"], p["shape"], bool(p["simple"]), report.trials[i].seed)
    return write_dgr(inst) if report.check in ("dpsi", "thm41") else write_ecg(inst)


# ------------------------------------------------------- random families


def random_excess_graph(rng: SplitMix64, k: int, n_max: int, pendants: bool = True) -> EdgeColouredGraph:
    """Connected simple graph of excess exactly ``k`` with at most ``n_max`` vertices.

    A random connected kernel multigraph on at most ``2k`` vertices with
    ``k`` more edges than vertices is subdivided at random; optional pendant
    trees are hung off it. Every edge gets its own colour.
    """
    v0 = 1 + rng.below(2 * k)
    kernel = [(i, rng.below(i)) for i in range(1, v0)]
    kernel += [(rng.below(v0), rng.below(v0)) for _ in range(k + 1)]
    need = []
    seen = set()
    for u, v in kernel:
        key = (min(u, v), max(u, v))
        if u == v:
            need.append(2)
        elif key in seen:
            need.append(1)
        else:
            need.append(0)
        seen.add(key)
    spare = n_max - v0 - sum(need)
    if spare < 0:
        raise ValueError("n_max too small for the kernel")
    extra = rng.below(spare + 1)
    subdiv = list(need)
    hang = 0
    for _ in range(extra):
        if pendants and rng.chance(1, 4):
            hang += 1
        else:
            subdiv[rng.below(len(kernel))] += 1
    edges = []
    nxt = v0
    for (u, v), s in zip(kernel, subdiv):
        path = [u] + list(range(nxt, nxt + s)) + [v]
        nxt += s
        edges += list(zip(path, path[1:]))
    for _ in range(hang):
        edges.append((rng.below(nxt), nxt))
        nxt += 1
    return EdgeColouredGraph(nxt, [(u, v, i) for i, (u, v) in enumerate(edges)])


def random_tree_plus(rng: SplitMix64, n: int, extra: int) -> EdgeColouredGraph:
    """Random recursive tree on ``n`` vertices plus ``extra`` new simple edges."""
    if n - 1 + extra > n * (n - 1) // 2:
        raise ValueError(f"{extra} extra edges do not fit on {n} vertices")
    pairs = [(rng.below(i), i) for i in range(1, n)]
    seen = set(pairs)
    while len(pairs) < n - 1 + extra:
        u, v = rng.below(n), rng.below(n)
        key = (min(u, v), max(u, v))
        if u != v and key not in seen:
            seen.add(key)
            pairs.append(key)
    return EdgeColouredGraph(n, [(u, v, i) for i, (u, v) in enumerate(pairs)])


def random_rainbow_graph(rng: SplitMix64, n: int, m: int, simple: bool = True) -> EdgeColouredGraph:
    """``m`` random edges on ``n`` vertices, each with its own colour."""
    pairs, seen = [], set()
    while len(pairs) < m:
        u, v = rng.below(n), rng.below(n)
        key = (min(u, v), max(u, v))
        if u == v or (simple and key in seen):
            continue
        seen.add(key)
        pairs.append(key)
    return EdgeColouredGraph(n, [(u, v, i) for i, (u, v) in enumerate(pairs)])


# ---------------------------------------------------------- suites


@dataclass
class TrialResult:
    ok: bool
    margin: Optional[int]
    note: str = ""


def _excess_girth_trial(k, seed):
    rng = SplitMix64(seed)
    if rng.chance(1, 2):
        G = random_excess_graph(rng, k, 60)
    else:
        G = random_tree_plus(rng, 4 + rng.below(57), k + 1)
    H = G.full()
    C = girth_exact(H)
    nv = len(H.vertices)
    if C is None:
        return TrialResult(False, None, "no cycle")
    margin = 2 * nv + 3 - 3 * C.length if k == 1 else nv + 2 - 2 * C.length
    return TrialResult(margin >= 0, margin)


def trial_excess1_girth(seed):
    return _excess_girth_trial(1, seed)


def trial_excess2_girth(seed):
    return _excess_girth_trial(2, seed)


def trial_stable_set(seed):
    rng = SplitMix64(seed)
    k = 1 + rng.below(4)
    G = random_excess_graph(rng, k, 24, pendants=False)
    H = two_core(G.full())
    if not H.edge_ids:
        return TrialResult(True, None, "empty core")
    exc = H.excess
    alpha, _ = max_stable_set(H)
    margin = len(H.vertices) + exc - 2 * alpha
    return TrialResult(margin >= 0, margin)


def _subset_tables(G: EdgeColouredGraph):
    """For every vertex subset W (as a bitmask): number of colours inside W, |W|."""
    n = G.n
    W = np.arange(1 << n, dtype=np.int64)
    size = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        size += (W >> b) & 1
    present = np.zeros((G.colours, 1 << n), dtype=bool)
    for e, (u, v, c) in enumerate(G.edges):
        mask = (1 << u) | (1 << v)
        present[c] |= (W & mask) == mask
    return present.sum(axis=0), size


def minimum_rainbow_support(G: EdgeColouredGraph, k: int) -> Optional[int]:
    """Smallest vertex set (bitmask) carrying a rainbow subgraph of excess >= k."""
    cols, size = _subset_tables(G)
    ok = np.nonzero(cols - size >= k)[0]
    if ok.size == 0:
        return None
    best = ok[np.argmin(size[ok] * (1 << G.n) + ok)]
    return int(best)


def _lemma_chords_instance(rng: SplitMix64):
    n = 5 + rng.below(6)
    k = 1 + rng.below(3)
    r = 1 + rng.below(4)
    t = n + k + rng.below(4)
    sizes = [1 + rng.below(r) for _ in range(t)]
    cap = comb(n, 2)
    while sum(sizes) > cap:
        i = max(range(t), key=lambda j: (sizes[j], -j))
        if sizes[i] == 1:
            break
        sizes[i] -= 1
    allow_parallel = rng.chance(1, 4) or sum(sizes) > cap
    edges = []
    if allow_parallel:
        for c, s in enumerate(sizes):
            seen = set()
            while len(seen) < s:
                u, v = rng.below(n), rng.below(n)
                if u != v and (min(u, v), max(u, v)) not in seen:
                    seen.add((min(u, v), max(u, v)))
                    edges.append((min(u, v), max(u, v), c))
    else:
        pairs = list(combinations(range(n), 2))
        rng.shuffle(pairs)
        it = iter(pairs)
        for c, s in enumerate(sizes):
            edges += [(*next(it), c) for _ in range(s)]
    return EdgeColouredGraph(n, edges, t), k, max(sizes)


def trial_chord_count(seed):
    rng = SplitMix64(seed)
    G, k, r = _lemma_chords_instance(rng)
    W = minimum_rainbow_support(G, k)
    if W is None:
        return TrialResult(True, None, "no excess-k rainbow subgraph")
    inside = [e for e in range(G.m) if (W >> G.edges[e][0]) & 1 and (W >> G.edges[e][1]) & 1]
    first = {}
    for e in sorted(inside, key=lambda e: (G.colour(e), e)):
        first.setdefault(G.colour(e), e)
    R = minimal_excess_subgraph(Subgraph(G, frozenset(first.values())), k)
    wanted = frozenset(v for v in range(G.n) if (W >> v) & 1)
    if R.vertices != wanted:
        return TrialResult(False, None, "support not minimal")
    census = chord_census(R, G)
    if rainbow_two_cycle(Subgraph(G, frozenset(inside))) is not None:
        return TrialResult(True, None, "rainbow 2-cycle")
    margin = chord_bound(R.excess, r) - census.total
    return TrialResult(margin >= 0, margin)


def trial_digraph_psi(seed):
    rng = SplitMix64(seed)
    n = 3 + rng.below(18)
    D = random_digraph(n, 1, rng.next_u64(), max_outdeg=min(n - 1, 1 + rng.below(5)))
    g = directed_girth(D)
    if g is None:
        return TrialResult(False, None, "acyclic")
    margin = floor(2 * psi_digraph(D)) - len(g)
    return TrialResult(margin >= 0, margin)


def trial_digraph_defect(seed):
    rng = SplitMix64(seed)
    n = 3 + rng.below(18)
    D = random_digraph(n, 1, rng.next_u64(), max_outdeg=min(n - 1, 1 + rng.below(5)))
    g = directed_girth(D)
    if g is None:
        return TrialResult(False, None, "acyclic")
    g = len(g)
    margins = [n - (r * (g - 1) + 1 - defect(D, r)) for r in range(1, 6) if g >= 2 * r - 1]
    margin = min(margins)
    return TrialResult(margin >= 0, margin)


def trial_psi_rainbow(seed):
    rng = SplitMix64(seed)
    n = 3 + rng.below(10)
    G = random_instance(n, n, 2, rng.next_u64(), r_min=1)
    bound = ceil(psi_graph(G))
    C = rainbow_girth_exact(G, bound + 1)
    if C is None:
        return TrialResult(False, None, f"none within {bound + 1}")
    margin = bound - C.length
    return TrialResult(margin >= 0, margin)


def trial_reduction(seed):
    rng = SplitMix64(seed)
    n = 2 + rng.below(23)
    D = random_digraph(n, 1 + rng.below(min(3, n - 1)), rng.next_u64())
    g = directed_girth(D)
    C = rainbow_girth_exact(from_digraph(D), max(2, n))
    a = None if g is None else len(g)
    b = None if C is None else C.length
    return TrialResult(a == b, 0 if a == b else None, "" if a == b else f"directed {a} vs rainbow {b}")


def trial_psi_identity(seed):
    rng = SplitMix64(seed)
    n = 2 + rng.below(20)
    D = random_digraph(n, 1, rng.next_u64(), max_outdeg=min(n - 1, 1 + rng.below(4)))
    same = psi_graph(from_digraph(D)) == psi_digraph(D)
    return TrialResult(same, 0 if same else None)


SUITES = {
    "lemmas": [
        ("excess1-girth", "3l <= 2n + 3 on excess-1 graphs", trial_excess1_girth),
        ("excess2-girth", "2l <= n + 2 on excess-2 graphs", trial_excess2_girth),
        ("stable-set", "2 alpha <= n + k, min degree 2", trial_stable_set),
        ("chord-count", "chords <= max(C(2k+2,2), 6k(r-1))", trial_chord_count),
        ("digraph-psi", "directed girth <= 2 psi(D)", trial_digraph_psi),
        ("digraph-defect", "n >= r(g-1) + 1 - def_r(D) when g >= 2r-1", trial_digraph_defect),
        ("psi-rainbow", "rainbow girth <= ceil(psi(G)), classes <= 2", trial_psi_rainbow),
        ("reduction", "rainbow girth of reduction = directed girth", trial_reduction),
        ("psi-identity", "psi(reduction) = psi(D)", trial_psi_identity),
    ],
}


@dataclass
class SuiteRow:
    name: str
    claim: str
    trials: int
    failures: int
    worst_margin: Optional[int]
    first_failure: Optional[int]

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def render(self) -> str:
        worst = "-" if self.worst_margin is None else str(self.worst_margin)
        status = "PASS" if self.passed else f"FAIL (first seed {self.first_failure})"
        return f"{self.name:<15} trials={self.trials:<6} failures={self.failures:<4} worst-margin={worst:<4} {status}  # {self.claim}"


def run_suite(name: str, seed: int, trials: int, jobs: int = 1) -> list:
    rows = []
    for row_name, claim, fn in SUITES[name]:
        results = run_trials(fn, seed, trials, jobs)
        margins = [r.margin for r in results if r.margin is not None]
        bad = [i for i, r in enumerate(results) if not r.ok]
        rows.append(SuiteRow(
            row_name, claim, trials, len(bad),
            min(margins) if margins else None,
            (seed ^ bad[0]) if bad else None,
        ))
    return rows
