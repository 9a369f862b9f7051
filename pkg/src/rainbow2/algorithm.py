"""Constructive rainbow colouring of graphs with rc(G) = 2.

:func:`color_bridgeless_diam2` handles bridgeless graphs of diameter at most
two with five colours, :func:`color_radius1_pendant` the one-bridge case
(a radius-one bridgeless graph with a pendant edge at its centre) with four,
and :func:`color_rc2` dispatches between them. Every result is checked by the
all-pairs verifier before it is returned.

Colour roles, fixed throughout:

* 1 and 2 go on spokes, the edges at the centre ``u``; spokes coloured 1
  form ``X`` and spokes coloured 2 form ``Y``;
* 3 and 4 go on edges between the first and second layer around ``u``
  (3 on the ``X`` side, 4 on the ``Y`` side) and 3 inside the first layer;
* 5 goes inside the second layer.
"""

from __future__ import annotations

import json
import logging
from collections import Counter, deque
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .errors import (BadCyclePattern, CompletionFailed, Disconnected, HasBridge,
                     NoCycle, NotDiameter2, NotPendantStructure, NotRc2Structure)
from .graph import Edge, Graph, bfs_distances, bridges, edge_key, is_connected, metrics
from .verify import EdgeColoring, RainbowCertificate, RainbowReach

log = logging.getLogger(__name__)

REPAIR_FACTOR = 50

# edge colours along u-v1-...-vk-u, for the layer profile of the cycle
_PATTERNS = {
    (0, 1, 1): ("C3", (1, 3, 2)),
    (0, 1, 2, 1): ("C4", (1, 3, 4, 2)),
    (0, 1, 2, 2, 1): ("C5", (1, 3, 5, 4, 2)),
}
# reversal of the cycle first, then the single swaps
_RELABELINGS = (
    {},
    {1: 2, 2: 1, 3: 4, 4: 3},
    {1: 2, 2: 1},
    {3: 4, 4: 3},
)


@dataclass
class CycleRecord:
    vertices: list[int]
    variant: str


@dataclass
class ColoringTrace:
    """Every choice the algorithm made, in the order it made them."""

    center: int | None = None
    blocks: list[list[int]] = field(default_factory=list)
    block_centers: list[int] = field(default_factory=list)
    extension_block: list[int] = field(default_factory=list)
    residual_block: list[int] = field(default_factory=list)
    covered: list[int] = field(default_factory=list)
    cycles: list[CycleRecord] = field(default_factory=list)
    X: list[int] = field(default_factory=list)
    Y: list[int] = field(default_factory=list)
    S: list[int] = field(default_factory=list)
    T: list[int] = field(default_factory=list)
    Q: list[int] = field(default_factory=list)
    P_0: list[int] = field(default_factory=list)
    P_1: list[int] = field(default_factory=list)
    P_2: list[int] = field(default_factory=list)
    D_blocks: list[list[int]] = field(default_factory=list)
    D_centers: list[int] = field(default_factory=list)
    D_residual: list[int] = field(default_factory=list)
    X_1: list[int] = field(default_factory=list)
    X_2: list[int] = field(default_factory=list)
    P_1_prime: list[int] = field(default_factory=list)
    P_2_prime: list[int] = field(default_factory=list)
    pendant_edge: list[int] | None = None
    completion_case: str = ""
    repair_iterations: int = 0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass
class ColorResult:
    coloring: EdgeColoring
    colors_used: int
    trace: ColoringTrace
    certificate: RainbowCertificate


def appropriate_coloring(cycle, layer_profile, triangle_color: int = 3) -> dict[Edge, int]:
    """Fixed colour pattern for a shortest cycle through the centre.

    ``cycle`` starts at the centre ``u``; ``layer_profile`` gives each cycle
    vertex's distance from ``u``. Triangles u-v1-v2 get (1, 3, 2) along the
    cycle (``triangle_color`` may be 4 instead of 3), 4-cycles u-v1-v2-v3
    get (1, 3, 4, 2) and 5-cycles get (1, 3, 5, 4, 2).
    """
    cycle = list(cycle)
    profile = tuple(layer_profile)
    if len(cycle) != len(profile) or profile not in _PATTERNS:
        raise BadCyclePattern(f"no appropriate colouring for layer profile {profile}")
    if len(set(cycle)) != len(cycle):
        raise BadCyclePattern("cycle repeats a vertex")
    _, pattern = _PATTERNS[profile]
    if len(cycle) == 3:
        if triangle_color not in (3, 4):
            raise BadCyclePattern("triangle chord colour must be 3 or 4")
        pattern = (1, triangle_color, 2)
    ring = cycle + cycle[:1]
    return {edge_key(a, b): col for (a, b), col in zip(zip(ring, ring[1:]), pattern)}


def shortest_cycle_through(g: Graph, u: int, v: int, covered=()) -> list[int]:
    """Shortest cycle containing edge uv, as ``[u, v, ..., w]``.

    Among shortest cycles the one with most vertices outside ``covered``
    wins, then the lexicographically smallest vertex sequence.
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    covered = frozenset(covered)
    # distances to u in g - uv
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in g.adj[a]:
            if dist[b] < 0 and edge_key(a, b) != edge_key(u, v):
                dist[b] = dist[a] + 1
                queue.append(b)
    if dist[v] < 0:
        raise NoCycle(f"edge ({u}, {v}) lies on no cycle")

    @lru_cache(maxsize=None)
    def best(a):
        # (uncovered count, path a..u) maximising the count, then lex-min
        if a == u:
            return 0, (u,)
        top = None
        for b in g.adj[a]:
            if dist[b] != dist[a] - 1 or edge_key(a, b) == edge_key(u, v):
                continue
            score, tail = best(b)
            if top is None or score > top[0]:
                top = (score, tail)
        gain = 0 if a in covered else 1
        return top[0] + gain, (a,) + top[1]

    path = best(v)[1]
    return [u] + list(path[:-1])


class _Run:
    """Mutable state of one execution of the colouring procedure."""

    def __init__(self, g: Graph, u: int, spokes):
        self.g = g
        self.u = u
        self.colors: dict[Edge, int] = {}
        self.trace = ColoringTrace(center=u)
        self.N1 = sorted(spokes)
        self.N1set = frozenset(self.N1)

    def put(self, a: int, b: int, col: int) -> bool:
        # each edge is coloured once; later requests are ignored
        e = edge_key(a, b)
        if e in self.colors:
            return False
        self.colors[e] = col
        return True

    def spoke_color(self, v: int):
        return self.colors.get(edge_key(self.u, v))

    # Steps 2-3: dominating blocks in the first layer
    def cover_first_layer(self) -> bool:
        g, u, N1set, tr = self.g, self.u, self.N1set, self.trace
        taken = set()
        for b in self.N1:
            if b in taken:
                continue
            block = sorted({b} | {w for w in g.adj[b] if w in N1set and w not in taken})
            if len(block) >= 2:
                tr.blocks.append(block)
                tr.block_centers.append(b)
                taken.update(block)
        non_centers = set(taken) - set(tr.block_centers)
        rest = [w for w in self.N1 if w not in taken]
        tr.extension_block = [w for w in rest if any(x in non_centers for x in g.adj[w])]
        ext = set(tr.extension_block)
        tr.residual_block = [w for w in rest if w not in ext]

        for b, block in zip(tr.block_centers, tr.blocks):
            self.put(u, b, 1)
            for w in block:
                self.put(u, w, 2)
        for w in tr.extension_block:
            self.put(u, w, 1)
        for a in self.N1:
            for b in g.adj[a]:
                if b in N1set:
                    self.put(a, b, 3)
        return not tr.residual_block

    def color_cycle(self, cycle, layer_of):
        profile = [layer_of[x] for x in cycle]
        base = appropriate_coloring(cycle, profile)
        best = None
        for relabel in _RELABELINGS:
            cand = {e: relabel.get(col, col) for e, col in base.items()}
            agree = sum(self.colors.get(e) == col for e, col in cand.items())
            if best is None or agree > best[0]:
                best = (agree, cand)
        for (a, b), col in best[1].items():
            self.put(a, b, col)
        return _PATTERNS[tuple(profile)][0]


def _check_diam2_input(g: Graph):
    if g.n < 3:
        raise NotDiameter2("need at least 3 vertices")
    if not is_connected(g):
        raise Disconnected("input graph is disconnected")
    met = metrics(g)
    if met.diameter > 2:
        raise NotDiameter2(f"diameter is {met.diameter}")
    found = bridges(g)
    if found:
        raise HasBridge(f"bridge {min(found)}")
    return met


def color_bridgeless_diam2(g: Graph, repair_factor: int = REPAIR_FACTOR) -> ColorResult:
    """Rainbow-colour a bridgeless graph of diameter <= 2 with at most 5 colours."""
    met = _check_diam2_input(g)
    u = met.centers[0]
    layer = bfs_distances(g, u)
    run = _Run(g, u, g.adj[u])
    tr = run.trace
    N2 = [v for v in range(g.n) if layer[v] == 2]

    if run.cover_first_layer() and not N2:
        tr.completion_case = "step3" if tr.extension_block else "step2"
        return _finish(run, repair_factor)

    # Step 4: shortest cycles through the spokes of the residual block
    covered = {u} | set(run.N1) - set(tr.residual_block)
    for v in tr.residual_block:
        if run.spoke_color(v) is not None:
            continue
        cycle = shortest_cycle_through(g, u, v, covered)
        variant = run.color_cycle(cycle, layer)
        tr.cycles.append(CycleRecord(cycle, variant))
        covered.update(cycle)
    tr.covered = sorted(covered)

    if set(N2) <= covered:
        tr.completion_case = "step5"
        _fill_rest(run, 3)
        return _finish(run, repair_factor)

    # Step 6: spoke classes
    tr.X = [v for v in run.N1 if run.spoke_color(v) == 1]
    tr.Y = [v for v in run.N1 if run.spoke_color(v) == 2]
    X, Y = set(tr.X), set(tr.Y)
    xs = {w: [a for a in g.adj[w] if a in X] for w in N2}
    ys = {w: [a for a in g.adj[w] if a in Y] for w in N2}

    # Step 7: largest S, T, Q
    Q = {w for w in N2 if xs[w] and ys[w]}
    S = {w for w in N2 if xs[w] and not ys[w]}
    T = {w for w in N2 if ys[w] and not xs[w]}
    while True:
        S2 = {s for s in S if any(b in T or b in Q for b in g.adj[s])}
        T2 = {t for t in T if any(b in S2 or b in Q for b in g.adj[t])}
        if S2 == S and T2 == T:
            break
        S, T = S2, T2
    tr.S, tr.T, tr.Q = sorted(S), sorted(T), sorted(Q)
    for s in tr.S:
        for x in xs[s]:
            run.put(s, x, 3)
    for t in tr.T:
        for y in ys[t]:
            run.put(t, y, 4)
    for q in tr.Q:
        _claim(run, q, xs[q], 3)
        _claim(run, q, ys[q], 4)
        for a in xs[q] + ys[q]:
            run.put(q, a, 3)

    # Step 8: cross edges between the classes
    for a, b in g.edges:
        if (a in S and (b in T or b in Q)) or (b in S and (a in T or a in Q)) \
                or (a in T and b in Q) or (b in T and a in Q):
            run.put(a, b, 5)
    if len(S) + len(T) + len(Q) == len(N2):
        tr.completion_case = "step8"
        _fill_rest(run, 3)
        return _finish(run, repair_factor)

    # Step 9: residue of the second layer
    P = [w for w in N2 if w not in S and w not in T and w not in Q]
    tr.P_0 = [p for p in P if not xs[p]]
    tr.P_1 = [p for p in P if len(xs[p]) == 1]
    tr.P_2 = [p for p in P if len(xs[p]) >= 2]
    PX = tr.P_1 + tr.P_2

    # Steps 10-13: case split, then the common completion
    if not tr.P_1:
        tr.completion_case = "step10"
    elif len(X) == 1:
        tr.completion_case = "step11"
        _step11(run, sorted(PX), tr.X[0])
    else:
        resid = set(tr.residual_block)
        P1 = set(tr.P_1)
        if any(not any(b in P1 for b in g.adj[x]) for x in tr.X if x not in resid):
            tr.completion_case = "step12"
            tr.X_1 = [x for x in tr.X if any(b in P1 for b in g.adj[x])]
            x1 = set(tr.X_1)
            tr.X_2 = [x for x in tr.X if x not in x1 and x not in resid]
            tr.P_1_prime = [p for p in sorted(PX) if any(b in x1 for b in g.adj[p])]
            tr.P_2_prime = sorted(set(PX) - set(tr.P_1_prime))
        else:
            tr.completion_case = "step13"
    _complete(run, xs, ys, N2, layer)
    return _finish(run, repair_factor)


def _claim(run: _Run, w: int, ends, col: int, load=None):
    """Make sure one edge from w to ``ends`` carries ``col`` if still possible."""
    if any(run.colors.get(edge_key(w, a)) == col for a in ends):
        return
    for a in ends:
        if run.put(w, a, col):
            if load is not None:
                load[a] += 1
            return


def _step11(run: _Run, P, x0):
    """Single spoke of colour 1: blocks inside P around x0, colours 3/4/5."""
    g, tr = run.g, run.trace
    Pset = set(P)
    taken = set()
    for d in P:
        if d in taken:
            continue
        block = sorted({d} | {w for w in g.adj[d] if w in Pset and w not in taken})
        if len(block) >= 2:
            tr.D_blocks.append(block)
            tr.D_centers.append(d)
            taken.update(block)
    tr.D_residual = [p for p in P if p not in taken]
    for d, block in zip(tr.D_centers, tr.D_blocks):
        run.put(x0, d, 3)
        for w in block:
            run.put(x0, w, 4)
    for p in tr.D_residual:
        run.put(x0, p, 3)


def _complete(run: _Run, xs, ys, N2, layer):
    g, tr = run.g, run.trace
    X = set(tr.X)
    Y = set(tr.Y)

    load = Counter()

    def ranked(ends, side):
        # first-layer neighbours that also see the other spoke class come
        # first; spread the odd colour over them so residue pairs sharing a
        # neighbour see two different colours there
        return sorted(ends, key=lambda a: (not any(b in side for b in g.adj[a]), load[a], a))

    for p in tr.P_2:
        _claim(run, p, ranked(xs[p], Y), 4, load)
    for p in tr.P_0:
        if len(ys[p]) >= 2:
            _claim(run, p, ranked(ys[p], X), 3, load)
    for a, b in g.edges:
        la, lb = layer[a], layer[b]
        if la == 2 and lb == 2:
            run.put(a, b, 5)
        elif la == 1 and lb == 1:
            run.put(a, b, 3)
        elif {la, lb} == {1, 2}:
            first = a if la == 1 else b
            run.put(a, b, 3 if first in X else 4)
    _fill_rest(run, 3)


def _fill_rest(run: _Run, col: int):
    for a, b in run.g.edges:
        run.put(a, b, col)


def _graph_path(g: Graph, s: int, t: int) -> list[int]:
    """Lexicographically smallest shortest path in g."""
    dist = bfs_distances(g, t)
    path = [s]
    while path[-1] != t:
        v = path[-1]
        path.append(min(w for w in g.adj[v] if dist[w] == dist[v] - 1))
    return path


def _repair(run: _Run, reach: RainbowReach, repair_factor: int, palette: int):
    """Local search: recolour one edge on a shortest path of a failing pair.

    A move is kept only if it lowers the number of failing pairs. Raises
    CompletionFailed when the attempt budget is spent or no move helps.
    """
    g, tr = run.g, run.trace
    cap = repair_factor * g.m
    fails = reach.failing_pairs()
    while fails:
        improved = False
        for s, t in fails:
            path = _graph_path(g, s, t)
            for a, b in zip(path, path[1:]):
                e = edge_key(a, b)
                old = run.colors[e]
                for step in range(1, palette):
                    if tr.repair_iterations >= cap:
                        raise CompletionFailed(
                            f"repair budget of {cap} attempts exhausted", tr, fails[0])
                    tr.repair_iterations += 1
                    run.colors[e] = (old - 1 + step) % palette + 1
                    trial = RainbowReach(g, EdgeColoring(run.colors))
                    if trial.n_failing() < len(fails):
                        reach, improved = trial, True
                        break
                    run.colors[e] = old
                if improved:
                    break
            if improved:
                break
        if not improved:
            raise CompletionFailed("no single recolouring reduces the failing pairs",
                                   tr, fails[0])
        fails = reach.failing_pairs()
    return reach


def _finish(run: _Run, repair_factor: int, palette: int = 5) -> ColorResult:
    g = run.g
    missing = [e for e in g.edges if e not in run.colors]
    if missing:
        raise CompletionFailed(f"edges left uncoloured: {missing[:3]}", run.trace)
    reach = RainbowReach(g, EdgeColoring(run.colors))
    if reach.n_failing():
        log.debug("verification failed on %d pairs, repairing", reach.n_failing())
        reach = _repair(run, reach, repair_factor, palette)
    coloring = EdgeColoring(run.colors)
    return ColorResult(coloring, len(coloring.used), run.trace, reach.certificate())


def pendant_structure(g: Graph):
    """Return (hub, pendant) if g is a bridgeless radius-one graph plus a
    pendant edge at its centre, else None."""
    if g.n < 4 or not is_connected(g):
        return None
    found = bridges(g)
    if len(found) != 1:
        return None
    (a, b), = found
    if g.degree(a) == 1:
        a, b = b, a
    if g.degree(b) != 1:
        return None
    hub, pendant = a, b
    # hub must see every other vertex; the rest then has no bridge
    if g.degree(hub) != g.n - 1:
        return None
    return hub, pendant


def color_radius1_pendant(g: Graph, repair_factor: int = REPAIR_FACTOR) -> ColorResult:
    """Colour a radius-one bridgeless graph with a pendant edge at its centre
    using at most 4 colours: the first-layer blocks take 1-3 and the pendant
    edge gets 4."""
    found = pendant_structure(g)
    if found is None:
        raise NotPendantStructure("graph is not a radius-one bridgeless graph plus a pendant edge")
    hub, pendant = found
    run = _Run(g, hub, [w for w in g.adj[hub] if w != pendant])
    run.trace.pendant_edge = list(edge_key(hub, pendant))
    if not run.cover_first_layer():
        # a residual vertex would hang off the hub by a bridge
        raise NotPendantStructure("first layer of the hub is not covered by blocks")
    tr = run.trace
    tr.completion_case = "step3" if tr.extension_block else "step2"
    run.put(hub, pendant, 4)
    return _finish(run, repair_factor, palette=4)


def _degenerate(g: Graph, colors: dict[Edge, int], case: str) -> ColorResult:
    run = _Run(g, 0, g.adj[0])
    run.colors.update(colors)
    run.trace.completion_case = case
    return _finish(run, 0)


def color_rc2(g: Graph, repair_factor: int = REPAIR_FACTOR) -> ColorResult:
    """Rainbow-colour a graph promised to have rc(G) = 2 with at most 5 colours."""
    if g.n < 2:
        raise NotRc2Structure("need at least two vertices")
    if not is_connected(g):
        raise Disconnected("input graph is disconnected")
    if g.n == 2:
        return _degenerate(g, {g.edges[0]: 1}, "degenerate_k2")
    if g.n == 3 and g.m == 2:
        return _degenerate(g, {g.edges[0]: 1, g.edges[1]: 2}, "degenerate_p3")
    found = bridges(g)
    if not found:
        if metrics(g).diameter > 2:
            raise NotRc2Structure("bridgeless but diameter exceeds 2")
        return color_bridgeless_diam2(g, repair_factor)
    if len(found) == 1 and pendant_structure(g) is not None:
        return color_radius1_pendant(g, repair_factor)
    raise NotRc2Structure(f"{len(found)} bridge(s) without the pendant structure")
