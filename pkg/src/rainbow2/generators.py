"""Seeded generators for the graph families used by tests and benchmarks.

Randomness comes from numpy's PCG64 bit generator, whose ``random()``
stream is identical on every platform, so a ``GeneratorSpec`` pins down a
graph bit for bit.
"""

from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass

import numpy as np

from .errors import GenerationExhausted, UnknownName
from .graph import Graph, bridges, build_graph, is_connected, metrics

RETRY_CAP = 10_000

FAMILIES = ("random_diam2_bridgeless", "radius1_pendant", "named")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int = 0
    p: float = 0.5
    seed: int = 0
    name: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p={self.p} outside [0, 1]")
        if self.family == "named":
            if not self.name:
                raise ValueError("named family needs a name")
        elif self.n < 1:
            raise ValueError("n must be at least 1")

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "GeneratorSpec":
        return cls(**json.loads(text))


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _gnp_edges(rng: np.random.Generator, n: int, p: float, offset: int = 0):
    draws = rng.random((n, n))
    a, b = np.nonzero(np.triu(draws < p, k=1))
    return [(int(x) + offset, int(y) + offset) for x, y in zip(a, b)]


def _random_diam2(spec: GeneratorSpec) -> Graph:
    rng = _rng(spec.seed)
    for _ in range(RETRY_CAP):
        g = build_graph(spec.n, _gnp_edges(rng, spec.n, spec.p))
        if validate_family(g, "random_diam2_bridgeless"):
            return g
    raise GenerationExhausted(
        f"no connected bridgeless diameter-2 graph for n={spec.n}, p={spec.p} "
        f"in {RETRY_CAP} attempts"
    )


def _radius1_pendant(spec: GeneratorSpec) -> Graph:
    # hub 0, base vertices 1..n-2, pendant n-1
    n = spec.n
    if n < 4:
        raise GenerationExhausted("radius1_pendant needs n >= 4")
    rng = _rng(spec.seed)
    spokes = [(0, v) for v in range(1, n - 1)]
    for _ in range(RETRY_CAP):
        base = _gnp_edges(rng, n - 2, spec.p, offset=1)
        g = build_graph(n, spokes + base + [(0, n - 1)])
        if validate_family(g, "radius1_pendant"):
            return g
    raise GenerationExhausted(
        f"no radius-1 pendant graph for n={n}, p={spec.p} in {RETRY_CAP} attempts"
    )


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + inner + [(i, i + 5) for i in range(5)])


def cycle(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> Graph:
    return build_graph(k, [(a, b) for a in range(k) for b in range(a + 1, k)])


def complete_bipartite(s: int, t: int) -> Graph:
    return build_graph(s + t, [(a, s + b) for a in range(s) for b in range(t)])


def wheel(k: int) -> Graph:
    """Hub 0 joined to the k-cycle 1..k."""
    rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
    return build_graph(k + 1, rim + [(0, v) for v in range(1, k + 1)])


_NAMED = {
    r"petersen": lambda: petersen(),
    r"wheel_(\d+)": lambda k: wheel(int(k)),
    r"cycle_(\d+)": lambda k: cycle(int(k)),
    r"complete_(\d+)": lambda k: complete(int(k)),
    r"complete_bipartite_(\d+)_(\d+)": lambda s, t: complete_bipartite(int(s), int(t)),
    r"path_(\d+)": lambda k: path(int(k)),
}


def named(name: str) -> Graph:
    for pattern, make in _NAMED.items():
        hit = re.fullmatch(pattern, name)
        if hit:
            return make(*hit.groups())
    raise UnknownName(name)


def generate(spec: GeneratorSpec) -> Graph:
    if spec.family == "named":
        return named(spec.name)
    if spec.family == "random_diam2_bridgeless":
        return _random_diam2(spec)
    return _radius1_pendant(spec)


def validate_family(g: Graph, family) -> bool:
    """Re-check the defining predicate of ``family`` (a name or a spec)."""
    if isinstance(family, GeneratorSpec):
        family = family.family
    if not is_connected(g) or g.n == 0:
        return False
    if family == "random_diam2_bridgeless":
        return g.n >= 3 and not bridges(g) and metrics(g).diameter == 2
    if family == "radius1_pendant":
        from .algorithm import pendant_structure
        return pendant_structure(g) is not None
    if family == "named":
        return True
    raise ValueError(f"unknown family {family!r}")


def diam2_p_range(n: int) -> tuple[float, float]:
    """Edge probabilities for which diameter-2 graphs on n vertices are common."""
    lo = min(0.9, 1.1 * float(np.sqrt(2 * np.log(n) / n)))
    return lo, 0.95
