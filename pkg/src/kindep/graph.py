"""Undirected simple graphs with dense 0-based vertex ids.

Graphs are immutable after construction and safe to share between threads.
Adjacency is kept both as frozensets (membership) and sorted tuples
(iteration), so every algorithm downstream sees a deterministic vertex
order and repeated runs produce identical results.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

UNREACHABLE = -1

# Resampling attempts before random_connected_graph falls back to
# wiring a random spanning tree into the sample.
_CONNECT_RETRIES = 64


class GraphError(ValueError):
    """Invalid graph data or an operation precondition violation."""


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_nbrs")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop edge ({u}, {v}) not allowed")
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._nbrs = tuple(tuple(sorted(s)) for s in adj)

    @classmethod
    def from_edge_list(cls, n: int, edges) -> "Graph":
        """Build a graph from (u, v) pairs; duplicates collapse, order ignored."""
        return cls(n, edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in ascending order."""
        return self._nbrs[v]

    def adjacent_set(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def from_edge_list(n: int, edges) -> Graph:
    """Module-level alias for Graph.from_edge_list."""
    return Graph.from_edge_list(n, edges)


@dataclass(frozen=True)
class DistanceVector:
    """BFS distances from one source; UNREACHABLE marks other components."""

    source: int
    dist: tuple[int, ...]


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    is_regular: bool


def bfs_distances(g: Graph, source: int) -> DistanceVector:
    """Shortest-path distance from source to every vertex."""
    if not (0 <= source < g.n):
        raise GraphError(f"source {source} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.neighbors(u):
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return DistanceVector(source=source, dist=tuple(dist))


def diameter(g: Graph) -> int | None:
    """Largest pairwise distance; None when disconnected, 0 for <= 1 vertex."""
    if g.n <= 1:
        return 0
    best = 0
    for v in range(g.n):
        dv = bfs_distances(g, v).dist
        for d in dv:
            if d == UNREACHABLE:
                return None
            if d > best:
                best = d
    return best


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise GraphError("degree stats undefined for the empty graph")
    degs = [g.degree(v) for v in range(g.n)]
    lo, hi = min(degs), max(degs)
    return DegreeStats(min_degree=lo, max_degree=hi, is_regular=lo == hi)


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by minimum element."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def disjoint_union(g: Graph, t: int) -> Graph:
    """t disjoint copies of g; copy c occupies ids [c*n, (c+1)*n)."""
    if t < 1:
        raise GraphError(f"number of copies must be positive, got {t}")
    n = g.n
    edges = g.edges()
    out = []
    for c in range(t):
        off = c * n
        out.extend((u + off, v + off) for u, v in edges)
    return Graph(t * n, out)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph; vertex i of the result is sorted(vertices)[i]."""
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for u in vs
        for v in g.neighbors(u)
        if u < v and v in index
    ]
    return Graph(len(vs), edges)


def random_connected_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """Erdos-Renyi sample conditioned on connectivity.

    Resamples up to a fixed retry budget; if every sample is disconnected
    the last sample is patched with a random spanning tree, so the call
    always terminates. Identical (n, edge_prob, seed) gives an identical
    edge set.
    """
    if n < 1:
        raise GraphError(f"need at least one vertex, got {n}")
    if not (0 <= edge_prob <= 1):
        raise GraphError(f"edge probability must be in [0, 1], got {edge_prob}")
    rng = random.Random(seed)

    def sample() -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < edge_prob
        ]

    for _ in range(_CONNECT_RETRIES):
        g = Graph(n, sample())
        if is_connected(g):
            return g

    # Fallback: keep one more sample and add a random spanning tree on top.
    edges = set(sample())
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[rng.randrange(i)], order[i]
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))
