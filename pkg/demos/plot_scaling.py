"""
How running time grows with n
=============================

We colour dense random diameter-2 graphs of increasing size and fit the
slope of time against n on a log-log scale.
"""

import time

import numpy as np

from rainbow2 import GeneratorSpec, color_bridgeless_diam2, generate

sizes = [25, 50, 100, 150]
times = []
for n in sizes:
    g = generate(GeneratorSpec("random_diam2_bridgeless", n=n, p=0.5, seed=n))
    start = time.perf_counter()
    result = color_bridgeless_diam2(g)
    times.append(time.perf_counter() - start)
    print(f"n={n:4d} m={g.m:6d} colours={result.colors_used} "
          f"case={result.trace.completion_case:7s} {times[-1]:.3f}s")

slope = np.polyfit(np.log(sizes), np.log(times), 1)[0]
print(f"log-log slope: {slope:.2f}")
