"""Graph families for spin-network state transfer.

Vertices are labeled 1..n and thought of as sitting on a circle. A graph
stores its couplings sparsely as a symmetric weight map; the dense
adjacency matrix is only materialized by :mod:`spinnet.dynamics`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Graph",
    "opposite",
    "ring",
    "circulant",
    "connectivity_graph",
    "cross_polytope",
    "pair_matching",
    "complete",
    "single_edge",
    "complement",
    "perturb_couplings",
    "break_bonds",
    "to_edge_list",
    "parse_edge_list",
]


def _normalize_key(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Undirected weighted graph on vertices 1..n.

    ``weights`` maps normalized vertex pairs (i, j) with i < j to real
    coupling strengths; absent pairs mean no interaction. Instances are
    treated as immutable after construction.
    """

    n: int
    weights: dict[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        normalized: dict[tuple[int, int], float] = {}
        for (i, j), w in self.weights.items():
            if i == j:
                raise ValueError(f"self-loop ({i},{i}) not allowed")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of range 1..{self.n}")
            key = _normalize_key(i, j)
            w = float(w)
            if not math.isfinite(w):
                raise ValueError(f"non-finite weight on edge {key}")
            if key in normalized and normalized[key] != w:
                raise ValueError(f"conflicting weights for edge {key}")
            normalized[key] = w
        object.__setattr__(self, "weights", normalized)

    def weight(self, i: int, j: int) -> float:
        """Coupling between i and j (0 when the edge is absent)."""
        return self.weights.get(_normalize_key(i, j), 0.0)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges as (i, j) pairs with i < j."""
        return sorted(self.weights)

    @property
    def edge_count(self) -> int:
        return len(self.weights)

    def degree(self, i: int) -> int:
        return sum(1 for (a, b) in self.weights if i in (a, b))

    def is_unit_weight(self) -> bool:
        return all(w == 1.0 for w in self.weights.values())


def opposite(j: int, n: int) -> int:
    """Vertex diametrically opposite j on the circle of n (even) sites."""
    if n % 2 != 0:
        raise ValueError(f"opposite vertex undefined for odd n={n}")
    if not 1 <= j <= n:
        raise ValueError(f"vertex {j} out of range 1..{n}")
    return ((j - 1 + n // 2) % n) + 1


def _unit_graph(n: int, pairs: set[tuple[int, int]]) -> Graph:
    return Graph(n, {p: 1.0 for p in pairs})


def ring(n: int) -> Graph:
    """Cycle graph: each vertex coupled to its two circle neighbours."""
    if n < 3:
        raise ValueError(f"ring needs n >= 3, got {n}")
    pairs = {_normalize_key(i, i % n + 1) for i in range(1, n + 1)}
    return _unit_graph(n, pairs)


def circulant(n: int, jumps: set[int]) -> Graph:
    """Circulant graph: vertex i coupled to i±d (mod n) for each jump d.

    The jump n/2 contributes a single diameter edge per vertex pair.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    pairs: set[tuple[int, int]] = set()
    for d in set(jumps):
        if not 1 <= d <= n // 2:
            raise ValueError(f"jump {d} out of range 1..{n // 2}")
        for i in range(1, n + 1):
            pairs.add(_normalize_key(i, (i + d - 1) % n + 1))
            pairs.add(_normalize_key(i, (i - d - 1) % n + 1))
    return _unit_graph(n, pairs)


def connectivity_graph(n: int, c: int) -> Graph:
    """Circulant with all jumps 1..c; c counts edges per half-disc.

    c = 1 is the ring, c = n/2 - 1 the cross polytope, c = n/2 the
    complete graph.
    """
    if n % 2 != 0:
        raise ValueError(f"connectivity graphs need even n, got {n}")
    if not 1 <= c <= n // 2:
        raise ValueError(f"connectivity {c} out of range 1..{n // 2}")
    return circulant(n, set(range(1, c + 1)))


def cross_polytope(n: int) -> Graph:
    """Complete graph minus the perfect matching of opposite vertices.

    Every vertex interacts with every other one except the vertex
    diametrically opposite; n(n-2)/2 edges in total.
    """
    if n % 2 != 0 or n < 4:
        raise ValueError(f"cross polytope needs even n >= 4, got {n}")
    half = n // 2
    pairs = {
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if j - i != half
    }
    return _unit_graph(n, pairs)


def pair_matching(n: int) -> Graph:
    """Perfect matching coupling each vertex only to its opposite."""
    if n % 2 != 0:
        raise ValueError(f"pair matching needs even n, got {n}")
    half = n // 2
    return _unit_graph(n, {(i, i + half) for i in range(1, half + 1)})


def complete(n: int) -> Graph:
    """Fully connected network on n vertices."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    pairs = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    return _unit_graph(n, pairs)


def single_edge(n: int, i: int = 1, j: int = 2) -> Graph:
    """Graph on n vertices with exactly one edge (used in norm studies)."""
    if n < 2:
        raise ValueError(f"single edge needs n >= 2, got {n}")
    return _unit_graph(n, {_normalize_key(i, j)})


def complement(g: Graph) -> Graph:
    """Edge complement within the complete graph; unit weights only."""
    if not g.is_unit_weight():
        raise ValueError("complement is defined for unit-weight graphs only")
    pairs = {
        (i, j)
        for i in range(1, g.n + 1)
        for j in range(i + 1, g.n + 1)
        if (i, j) not in g.weights
    }
    return _unit_graph(g.n, pairs)


def perturb_couplings(g: Graph, delta: float, seed: int) -> Graph:
    """Redraw every coupling uniformly from [1-delta, 1+delta].

    Deterministic for a given seed; the edge set is unchanged.
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"disorder amplitude must be in [0,1], got {delta}")
    if not g.is_unit_weight():
        raise ValueError("perturb_couplings expects an unperturbed unit-weight graph")
    rng = np.random.default_rng(seed)
    edges = g.edges()
    draws = rng.uniform(1.0 - delta, 1.0 + delta, size=len(edges))
    return Graph(g.n, {e: float(w) for e, w in zip(edges, draws)})


def break_bonds(g: Graph, b: float, seed: int) -> Graph:
    """Remove round(b * edge_count) edges chosen uniformly at random.

    The count rounds half up; selection is without replacement and
    deterministic for a given seed.
    """
    if not 0.0 <= b < 1.0:
        raise ValueError(f"broken-bond ratio must be in [0,1), got {b}")
    if g.edge_count < 1:
        raise ValueError("break_bonds needs a graph with at least one edge")
    edges = g.edges()
    n_break = int(math.floor(b * len(edges) + 0.5))
    if n_break == 0:
        return Graph(g.n, dict(g.weights))
    rng = np.random.default_rng(seed)
    doomed = {edges[k] for k in rng.choice(len(edges), size=n_break, replace=False)}
    kept = {e: w for e, w in g.weights.items() if e not in doomed}
    return Graph(g.n, kept)


def to_edge_list(g: Graph) -> str:
    """Serialize as edge-list text: header ``n=<N>``, then ``i j w`` lines."""
    lines = [f"n={g.n}"]
    for (i, j) in g.edges():
        lines.append(f"{i} {j} {g.weights[(i, j)]!r}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format produced by :func:`to_edge_list`."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("edge list must start with a 'n=<N>' header line")
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise ValueError(f"bad vertex count in header {lines[0]!r}") from exc
    weights: dict[tuple[int, int], float] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"bad edge line {ln!r}, expected 'i j w'")
        i, j, w = int(parts[0]), int(parts[1]), float(parts[2])
        key = _normalize_key(i, j)
        if key in weights:
            raise ValueError(f"duplicate edge {key}")
        weights[key] = w
    return Graph(n, weights)
