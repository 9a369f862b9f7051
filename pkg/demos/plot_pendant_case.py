"""
Graphs with a single pendant edge
=================================

A graph with rainbow connection number 2 may contain one bridge, but only
when a hub vertex sees everything and the bridge leads to a leaf.  Such
graphs need at most four colours.
"""

from rainbow2 import GeneratorSpec, color_rc2, generate, is_rainbow_connected

g = generate(GeneratorSpec("radius1_pendant", n=12, p=0.3, seed=5))
result = color_rc2(g)
print("pendant edge:", result.trace.pendant_edge)
print("colours used:", result.colors_used)
print("verified:", bool(is_rainbow_connected(g, result.coloring)))

# %%
# Two bridges are too many: some pair would need a path through both, and
# no structure with rc = 2 allows that.
from rainbow2 import NotRc2Structure, build_graph

two_leaves = build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)])
try:
    color_rc2(two_leaves)
except NotRc2Structure as exc:
    print("rejected:", exc)
