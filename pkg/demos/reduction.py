"""Digraphs as edge-coloured graphs: each vertex's out-arcs become one colour class."""

from rainbowcycles import circulant_digraph, directed_girth, from_digraph, psi_digraph, rainbow_girth_exact, random_digraph

D = circulant_digraph(12, (1, 3, 4))
G, tails = from_digraph(D, return_mapping=True)
print("arcs", len(D.arcs), "-> edges", G.m, "in", G.colours, "colour classes")

g = directed_girth(D)
C = rainbow_girth_exact(G, D.n)
print("directed girth", len(g), "rainbow girth", C.length)
print("psi(D) =", psi_digraph(D), " girth <= 2 psi:", len(g) <= 2 * psi_digraph(D))

# the two girths agree on random digraphs too
for seed in range(10):
    D = random_digraph(10, 1, seed, max_outdeg=3)
    print(seed, len(directed_girth(D)), rainbow_girth_exact(from_digraph(D), D.n).length)
