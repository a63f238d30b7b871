"""Layered neighborhoods of a seed set and distance-independence checks.

Layer j of a seed set S holds the vertices at distance exactly j from S.
Layers are computed by the recursive rule
    layer[j] = N(layer[j-1]) minus (layer[j-2] union layer[j-1])
which agrees with BFS level sets; the test suite checks that equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, UNREACHABLE, bfs_distances, diameter, \
    degree_stats, is_connected


@dataclass(frozen=True)
class LayerDecomposition:
    """Seed set and its distance layers, up to the last nonempty one."""

    seed: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]

    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def size_at(self, j: int) -> int:
        """Size of layer j; 0 beyond the last nonempty layer."""
        return len(self.layers[j]) if 0 <= j < len(self.layers) else 0


def _check_seed(g: Graph, s) -> tuple[int, ...]:
    seed = tuple(sorted(set(s)))
    if not seed:
        raise GraphError("seed set must be nonempty")
    for v in seed:
        if not (0 <= v < g.n):
            raise GraphError(f"seed vertex {v} out of range for n={g.n}")
    return seed


def layer_decomposition(g: Graph, s) -> LayerDecomposition:
    seed = _check_seed(g, s)
    prev_prev: set[int] = set()
    prev = set(seed)
    layers = [seed]
    while True:
        nxt = set()
        for u in prev:
            nxt.update(g.neighbors(u))
        nxt -= prev_prev
        nxt -= prev
        if not nxt:
            break
        layers.append(tuple(sorted(nxt)))
        prev_prev, prev = prev, nxt
    return LayerDecomposition(seed=seed, layers=tuple(layers))


def is_k_independent(g: Graph, s, k: int) -> bool:
    """True when every pair in s is at distance > k (unreachable counts)."""
    if k < 0:
        raise GraphError(f"k must be nonnegative, got {k}")
    seed = tuple(sorted(set(s)))
    for v in seed:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    for i, u in enumerate(seed):
        dist = bfs_distances(g, u).dist
        for v in seed[i + 1:]:
            if dist[v] != UNREACHABLE and dist[v] <= k:
                return False
    return True


@dataclass(frozen=True)
class LayerSumRow:
    """Sizes of three consecutive layers around index i, with verdicts.

    ge_triple_seed:  prev+mid+next >= 3 * |seed|
    ge_degree_seed:  prev+mid+next >= (min_degree + 1) * |seed|
    None means not applicable (layer missing, or min degree below 2 for
    the degree-based inequality).
    """

    i: int
    prev_size: int
    mid_size: int
    next_size: int
    ge_triple_seed: bool | None
    ge_degree_seed: bool | None


@dataclass(frozen=True)
class LayerSumAudit:
    """Consecutive-layer growth audit over i in {3, ..., floor(k/2) - 1}."""

    k: int
    min_degree: int
    seed_size: int
    rows: tuple[LayerSumRow, ...]


def audit_layer_sums(g: Graph, s, k: int) -> LayerSumAudit:
    """Check that windows of three consecutive layers carry enough vertices.

    Requires a connected graph of diameter at least k+1 and a k-independent
    seed. For every window index i in {3, ..., floor(k/2) - 1} the sum
    |layer[i-1]| + |layer[i]| + |layer[i+1]| is compared against 3*|seed|
    and, when the minimum degree is at least 2, against (delta+1)*|seed|.
    Windows that run past the last nonempty layer are recorded as not
    applicable rather than failed.
    """
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    seed = _check_seed(g, s)
    if not is_connected(g):
        raise GraphError("audit requires a connected graph")
    diam = diameter(g)
    if diam is None or diam < k + 1:
        raise GraphError(f"audit requires diameter >= {k + 1}, got {diam}")
    if not is_k_independent(g, seed, k):
        raise GraphError(f"seed set is not {k}-independent")

    delta = degree_stats(g).min_degree
    decomp = layer_decomposition(g, seed)
    rows = []
    for i in range(3, k // 2):
        sizes = (decomp.size_at(i - 1), decomp.size_at(i), decomp.size_at(i + 1))
        if sizes[2] == 0:
            verdict1 = verdict2 = None
        else:
            total = sum(sizes)
            verdict1 = total >= 3 * len(seed)
            verdict2 = total >= (delta + 1) * len(seed) if delta >= 2 else None
        rows.append(
            LayerSumRow(
                i=i,
                prev_size=sizes[0],
                mid_size=sizes[1],
                next_size=sizes[2],
                ge_triple_seed=verdict1,
                ge_degree_seed=verdict2,
            )
        )
    return LayerSumAudit(
        k=k, min_degree=delta, seed_size=len(seed), rows=tuple(rows)
    )
