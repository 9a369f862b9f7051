"""Simple undirected graphs on dense integer ids and their metric primitives.

Vertices are ``0..n-1``. Edges are stored as sorted pairs ``(a, b)`` with
``a < b``; adjacency lists are sorted so every traversal is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import Disconnected, InvalidGraph

Edge = tuple[int, int]


def edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class Graph:
    """Immutable simple undirected graph.

    >>> g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    >>> g.n, g.m
    (4, 4)
    """

    __slots__ = ("n", "edges", "adj", "_adjset", "_matrix")

    def __init__(self, n: int, edges: Iterable[Edge]):
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(set(edges)))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(x)) for x in nbrs)
        self._adjset = tuple(frozenset(x) for x in self.adj)
        self._matrix = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adjset[a]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjset[v]

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (cached, read-only)."""
        if self._matrix is None:
            mat = np.zeros((self.n, self.n), dtype=np.int8)
            if self.edges:
                ends = np.asarray(self.edges)
                mat[ends[:, 0], ends[:, 1]] = 1
                mat[ends[:, 1], ends[:, 0]] = 1
            mat.flags.writeable = False
            self._matrix = mat
        return self._matrix

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, collapsing duplicate and reversed pairs.

    Raises :class:`InvalidGraph` on self-loops or out-of-range endpoints.
    """
    if n < 0:
        raise InvalidGraph(f"negative vertex count {n}")
    keys = []
    for a, b in edge_list:
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n):
            raise InvalidGraph(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        if a == b:
            raise InvalidGraph(f"self-loop at vertex {a}")
        keys.append(edge_key(a, b))
    return Graph(n, keys)


@dataclass(frozen=True)
class CenterMetrics:
    dist: np.ndarray  # n x n hop distances, -1 where unreachable
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    centers: tuple[int, ...]


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex; -1 if unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return min(bfs_distances(g, 0)) >= 0


def metrics(g: Graph) -> CenterMetrics:
    """All-pairs distances, eccentricities, radius, diameter and centers.

    One BFS per vertex, O(n*m) in total.
    """
    if g.n == 0:
        raise Disconnected("empty graph has no center")
    dist = np.empty((g.n, g.n), dtype=np.int64)
    for v in range(g.n):
        row = bfs_distances(g, v)
        if min(row) < 0:
            raise Disconnected(f"vertex {v} cannot reach vertex {row.index(-1)}")
        dist[v] = row
    dist.flags.writeable = False
    ecc = tuple(int(x) for x in dist.max(axis=1))
    radius = min(ecc)
    return CenterMetrics(
        dist=dist,
        ecc=ecc,
        radius=radius,
        diameter=max(ecc),
        centers=tuple(v for v in range(g.n) if ecc[v] == radius),
    )


def diameter(g: Graph) -> int:
    return metrics(g).diameter


def center(g: Graph) -> int:
    """Minimum-eccentricity vertex; ties go to the smallest id."""
    return metrics(g).centers[0]


def set_distances(g: Graph, X: Iterable[int]) -> list[int]:
    """d(v, X) = min over x in X of d(v, x), by multi-source BFS."""
    dist = [-1] * g.n
    queue = deque()
    for x in X:
        if not 0 <= x < g.n:
            raise InvalidGraph(f"vertex {x} out of range")
        if dist[x] < 0:
            dist[x] = 0
            queue.append(x)
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def k_neighborhood(g: Graph, X: Iterable[int], k: int) -> frozenset[int]:
    """Vertices at distance exactly ``k`` from the set ``X``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    dist = set_distances(g, X)
    return frozenset(v for v, d in enumerate(dist) if d == k)


def edge_cut(g: Graph, X: Iterable[int], Y: Iterable[int]) -> frozenset[Edge]:
    """E[X, Y]: edges with one end in X and the other in Y."""
    X, Y = frozenset(X), frozenset(Y)
    small, other = (X, Y) if len(X) <= len(Y) else (Y, X)
    return frozenset(edge_key(a, b) for a in small for b in g.adj[a] if b in other)


def bridges(g: Graph) -> frozenset[Edge]:
    """Bridges of a connected graph via one DFS with low-link values.

    Iterative, so deep graphs do not hit the recursion limit.
    """
    if not is_connected(g):
        raise Disconnected("bridges() needs a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, next neighbor index)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(g.adj[v]):
                stack[-1] = (v, parent, i + 1)
                w = g.adj[v][i]
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.add(edge_key(parent, v))
    return frozenset(found)


def induced_subgraph(g: Graph, X: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``X`` with vertices relabelled in increasing order.

    Returns the new graph and the old -> new id map; invert it for new -> old.
    """
    keep = sorted(set(X))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    return Graph(len(keep), edges), index
