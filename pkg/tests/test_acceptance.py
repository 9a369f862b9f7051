"""Acceptance suite: one test per exit criterion, each printing PASS/FAIL.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import itertools
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from rainbow2.algorithm import (appropriate_coloring, color_bridgeless_diam2,
                                color_radius1_pendant, color_rc2)
from rainbow2.errors import NotRc2Structure
from rainbow2.generators import (GeneratorSpec, complete, cycle, diam2_p_range, generate,
                                 path)
from rainbow2.graph import bridges, build_graph, is_connected, metrics
from rainbow2.io import format_edge_list
from rainbow2.verify import (EdgeColoring, check_certificate, is_rainbow_connected,
                             rainbow_path, rainbow_path_bruteforce, rc_exact)

from conftest import random_connected, random_graph


@pytest.fixture
def report(request, capsys):
    def emit(ok, detail):
        with capsys.disabled():
            tag = "PASS" if ok else "FAIL"
            print(f"\n[{tag}] {request.node.name}: {detail}")
        assert ok, detail
    return emit


def test_criterion_1_appropriate_coloring_fidelity(report):
    got = [
        appropriate_coloring([0, 1, 2], [0, 1, 1]),
        appropriate_coloring([0, 1, 2, 3], [0, 1, 2, 1]),
        appropriate_coloring([0, 1, 2, 3, 4], [0, 1, 2, 2, 1]),
    ]
    want = [
        {(0, 1): 1, (0, 2): 2, (1, 2): 3},
        {(0, 1): 1, (1, 2): 3, (2, 3): 4, (0, 3): 2},
        {(0, 1): 1, (1, 2): 3, (2, 3): 5, (3, 4): 4, (0, 4): 2},
    ]
    report(got == want, "C3/C4/C5 patterns match exactly")


def diam2_corpus(count=500, seed=20240611):
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(count):
        n = int(rng.integers(5, 61))
        lo, hi = diam2_p_range(n)
        p = float(rng.uniform(lo, hi))
        yield generate(GeneratorSpec("random_diam2_bridgeless", n, p, int(rng.integers(2**32))))


def test_criterion_2_diam2_corpus(report):
    start = time.perf_counter()
    total = ok = repaired = 0
    worst = 0
    for g in diam2_corpus():
        total += 1
        r = color_bridgeless_diam2(g)  # CompletionFailed would fail the test
        worst = max(worst, r.colors_used)
        repaired += r.trace.repair_iterations > 0
        ok += r.colors_used <= 5 and check_certificate(g, r.coloring, r.certificate)
    elapsed = time.perf_counter() - start
    rate = repaired / total
    report(total >= 500 and ok == total and rate <= 0.05 and elapsed < 120,
           f"{ok}/{total} certified, max colours {worst}, repair rate {rate:.3f}, "
           f"0 CompletionFailed, {elapsed:.1f}s")


def test_criterion_3_pendant_corpus(report):
    rng = np.random.Generator(np.random.PCG64(7))
    total = ok = 0
    worst = 0
    for _ in range(200):
        n = int(rng.integers(4, 41))
        g = generate(GeneratorSpec("radius1_pendant", n, float(rng.uniform(0.15, 0.9)),
                                   int(rng.integers(2**32))))
        r = color_radius1_pendant(g)
        total += 1
        worst = max(worst, r.colors_used)
        ok += r.colors_used <= 4 and bool(is_rainbow_connected(g, r.coloring))
    report(total >= 200 and ok == total, f"{ok}/{total} verified, max colours {worst}")


def test_criterion_4_rc2_dispatcher(report):
    rng = np.random.Generator(np.random.PCG64(4))
    rc2 = accepted = multi_bridge = rejected = 0
    for _ in range(10_000):
        n = int(rng.integers(2, 8))
        g = random_graph(rng, n, float(rng.uniform(0.2, 1.0)))
        if not is_connected(g):
            continue
        if rc_exact(g, 2) == 2:
            rc2 += 1
            r = color_rc2(g)
            accepted += r.colors_used <= 5 and bool(is_rainbow_connected(g, r.coloring))
        if g.n >= 4 and len(bridges(g)) >= 2:
            multi_bridge += 1
            try:
                color_rc2(g)
            except NotRc2Structure:
                rejected += 1
    report(rc2 > 0 and accepted == rc2 and rejected == multi_bridge,
           f"rc=2 graphs accepted {accepted}/{rc2}; "
           f"multi-bridge graphs rejected {rejected}/{multi_bridge}")


def test_criterion_5_oracle_equivalence(report):
    rng = np.random.Generator(np.random.PCG64(5))
    pairs = mismatches = 0
    for _ in range(500):
        g = random_connected(rng, 2, 8)
        for _ in range(20):
            k = int(rng.integers(1, 6))
            c = EdgeColoring({e: int(rng.integers(1, k + 1)) for e in g.edges}, k)
            for s, t in itertools.combinations(range(g.n), 2):
                pairs += 1
                fast = rainbow_path(g, c, s, t)
                slow = rainbow_path_bruteforce(g, c, s, t)
                mismatches += (fast is None) != (slow is None)
    report(mismatches == 0, f"{pairs} pairs, {mismatches} disagreements")


def test_criterion_6_exact_rc_sanity(report):
    fixed = {f"K{n}": rc_exact(complete(n), 2) for n in range(3, 7)}
    fixed.update(C4=rc_exact(cycle(4)), C5=rc_exact(cycle(5)), P3=rc_exact(path(3)))
    fixed_ok = fixed == {"K3": 1, "K4": 1, "K5": 1, "K6": 1, "C4": 2, "C5": 3, "P3": 2}

    rng = np.random.Generator(np.random.PCG64(6))
    below = 0
    for _ in range(200):
        g = random_connected(rng, 2, 8, max_m=12)
        rc = rc_exact(g)
        # None means rc > 5, which cannot violate the bound
        below += rc is not None and rc < metrics(g).diameter

    broken = 0
    for _ in range(100):
        g = random_connected(rng, 2, 6, p_lo=0.4)
        # spanning subgraph: BFS tree from a random root plus a random half of the rest
        root = int(rng.integers(g.n))
        keep, seen, frontier = set(), {root}, [root]
        while frontier:
            v = frontier.pop(0)
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
                    keep.add((min(v, w), max(v, w)))
        keep |= {e for e in g.edges if rng.random() < 0.5}
        h = build_graph(g.n, keep)
        big = float("inf")
        broken += rc_exact(g, 5, budget=big) > rc_exact(h, 5, budget=big)
    report(fixed_ok and below == 0 and broken == 0,
           f"fixed values {fixed}; rc < diam on {below}/200; monotonicity broken on {broken}/100")


def test_criterion_7_scaling(report):
    sizes = [50, 100, 150, 200]
    times = []
    for n in sizes:
        g = generate(GeneratorSpec("random_diam2_bridgeless", n, 0.5, n))
        best = float("inf")
        for _ in range(2):
            start = time.perf_counter()
            color_bridgeless_diam2(g)
            best = min(best, time.perf_counter() - start)
        times.append(best)
    slope = float(np.polyfit(np.log(sizes), np.log(times), 1)[0])
    report(slope <= 4.5 and times[-1] < 10.0,
           f"log-log slope {slope:.2f}, times " + ", ".join(f"{t:.2f}s" for t in times))


def test_criterion_8_determinism(report, tmp_path):
    g = generate(GeneratorSpec("random_diam2_bridgeless", 30, 0.3, 11))
    graph = tmp_path / "g.txt"
    graph.write_text(format_edge_list(g))
    outputs = []
    for run, hashseed in enumerate(["0", "1", "12345"]):
        col, trace = tmp_path / f"c{run}.txt", tmp_path / f"t{run}.json"
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        subprocess.run([sys.executable, "-m", "rainbow2", "color", str(graph), "-o", str(col),
                        "--trace", str(trace)], check=True, env=env)
        outputs.append((col.read_bytes(), trace.read_bytes()))
    report(len(set(outputs)) == 1, f"{len(outputs)} runs, byte-identical colouring and trace")
