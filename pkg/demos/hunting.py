"""Sample instances and look at the spread of rainbow girths against the bounds they should meet."""

from rainbowcycles.harness import hunt, run_suite

rep = hunt("aharoni", 12, 12, 3, trials=150, seed=1, simple=True)
print(rep.render())

# r = 2: the girth should never exceed ceil(n/2)
print(hunt("r2", 12, 12, 2, trials=150, seed=1).render().splitlines()[:4])

for row in run_suite("lemmas", seed=3, trials=100):
    print(row.render())
