"""
Colouring a diameter-2 graph with five colours
==============================================

The Petersen graph has diameter 2 and no bridges, so it can be rainbow
coloured with at most five colours.  We colour it, look at the trace the
algorithm leaves behind, and check the result independently.
"""

from rainbow2 import color_rc2, is_rainbow_connected, petersen

g = petersen()
result = color_rc2(g)
print(f"{g.n} vertices, {g.m} edges, {result.colors_used} colours")

# The trace records the centre vertex, the blocks of its neighbourhood and
# which completion case finished the job.
trace = result.trace
print("centre:", trace.center)
print("blocks:", trace.blocks)
print("finished in:", trace.completion_case)

# Every pair of vertices is joined by a path whose edges all differ in colour.
verdict = is_rainbow_connected(g, result.coloring)
print("rainbow connected:", bool(verdict))
print("longest witness path:", verdict.certificate.longest())

for (a, b), col in sorted(result.coloring.colors.items()):
    print(f"  {a}-{b}: {col}")
