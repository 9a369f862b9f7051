"""
Three ways to find a rainbow path
=================================

The verifier has a layered search over (vertex, colour set) states, a
brute-force search over simple paths, and a matrix DP that answers every
pair at once.  Here we throw random colourings at small graphs and watch
the three agree.
"""

import itertools

import numpy as np

from rainbow2 import EdgeColoring, RainbowReach, build_graph
from rainbow2.verify import rainbow_path, rainbow_path_bruteforce

rng = np.random.Generator(np.random.PCG64(3))

# A 6-cycle with two chords
g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3), (1, 4)])

agree = 0
for trial in range(50):
    c = EdgeColoring({e: int(rng.integers(1, 4)) for e in g.edges}, 3)
    reach = RainbowReach(g, c)
    for s, t in itertools.combinations(range(g.n), 2):
        fast = rainbow_path(g, c, s, t)
        slow = rainbow_path_bruteforce(g, c, s, t)
        dp = reach.dist[s, t] >= 0
        agree += (fast is not None) == (slow is not None) == dp
print(f"{agree} of {50 * 15} pair checks agree")

# %%
# The exact rainbow connection number is available for tiny graphs.
from rainbow2 import rc_exact
print("rc(C6 with chords) =", rc_exact(g))
