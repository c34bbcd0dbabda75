"""Find a short rainbow cycle in a random instance and compare it with the exact girth."""

import numpy as np

from rainbowcycles import random_instance, rainbow_girth_exact, solve, validate_certificate

n = 18
G = random_instance(n, n, 3, seed=4, shape="triangle", simple=True)
print(G.n, "vertices,", G.m, "edges,", G.colours, "colours")

sol = solve(G)
C = sol.certificate
print("branch:", sol.branch)
print("cycle:", C.vertices, "length", C.length, "limit", (4 * n + 63) // 9)
assert validate_certificate(G, C) is None

# exact rainbow girth for comparison (fine at this size)
best = rainbow_girth_exact(G, C.length)
print("exact rainbow girth:", best.length)

# lengths found over a batch of seeds
lengths = np.array([solve(random_instance(n, n, 3, s, simple=True)).certificate.length for s in range(40)])
print("lengths over 40 seeds: min", lengths.min(), "mean", lengths.mean().round(2), "max", lengths.max())
print(np.bincount(lengths))
