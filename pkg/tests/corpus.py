"""Test corpora: exhaustive non-isomorphic graph enumeration and seeded
random graph collections.

Enumeration extends every (n-1)-vertex graph by one vertex with every
possible neighborhood and deduplicates by a canonical form (color
refinement, then a pruned search over color-respecting orderings for the
lexicographically least adjacency bit string). Counts are cross-checked
against the known tallies of graphs on n vertices in the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from kindep.graph import Graph, is_connected, random_connected_graph


def _refine(n: int, adj: list[int]) -> list[int]:
    """Iterated neighbor-color refinement; returns stable vertex colors."""
    colors = [adj[v].bit_count() for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            m = adj[v]
            near = []
            while m:
                low = m & -m
                near.append(colors[low.bit_length() - 1])
                m ^= low
            near.sort()
            sigs.append((colors[v], tuple(near)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_form(n: int, adj: list[int]) -> tuple:
    """Canonical key: minimum row-wise adjacency bits over all orderings
    consistent with the refined coloring, found by pruned DFS."""
    if n <= 1:
        return (n,)
    colors = _refine(n, adj)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    cell_list = [cells[c] for c in sorted(cells)]

    if all(len(c) == 1 for c in cell_list):
        order = [c[0] for c in cell_list]
        rows = []
        for j in range(1, n):
            row = 0
            aj = adj[order[j]]
            for i in range(j):
                row = (row << 1) | ((aj >> order[i]) & 1)
            rows.append(row)
        return (n, *rows)

    best: list[int] | None = None

    def dfs(order: list[int], rows: list[int], cell_idx: int,
            remaining: tuple[int, ...]) -> None:
        nonlocal best
        depth = len(order)
        if depth == n:
            if best is None or rows < best:
                best = rows.copy()
            return
        if not remaining:
            cell = cell_list[cell_idx + 1]
            dfs(order, rows, cell_idx + 1, tuple(cell))
            return
        for idx, v in enumerate(remaining):
            row = 0
            av = adj[v]
            for u in order:
                row = (row << 1) | ((av >> u) & 1)
            if best is not None and depth >= 1:
                brow = best[depth - 1]
                if row > brow:
                    continue
                strictly_less = row < brow
            else:
                strictly_less = best is None
            order.append(v)
            rows.append(row)
            if strictly_less:
                # Everything below beats the incumbent prefix; take the
                # first completion greedily then keep searching it.
                pass
            dfs(order, rows, cell_idx,
                remaining[:idx] + remaining[idx + 1:])
            order.pop()
            rows.pop()

    first_cell = tuple(cell_list[0])
    dfs([], [], 0, first_cell)
    assert best is not None
    return (n, *best)


def _from_bitmask_rows(n: int, adj: list[int]) -> Graph:
    edges = []
    for v in range(n):
        m = adj[v]
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if u < v:
                edges.append((u, v))
            m ^= low
    return Graph(n, edges)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism."""
    if n == 0:
        return (Graph(0),)
    out: dict[tuple, list[int]] = {}
    for parent in all_graphs(n - 1):
        base = [0] * (n - 1)
        for u, v in parent.edges():
            base[u] |= 1 << v
            base[v] |= 1 << u
        for nbhd in range(1 << (n - 1)):
            adj = base + [nbhd]
            m = nbhd
            while m:
                low = m & -m
                adj[low.bit_length() - 1] |= 1 << (n - 1)
                m ^= low
            key = canonical_form(n, adj)
            if key not in out:
                out[key] = adj
    return tuple(_from_bitmask_rows(n, adj) for adj in out.values())


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if is_connected(g)]


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Brute-force isomorphism check for small graphs (test oracle only)."""
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    eb = {frozenset(e) for e in b.edges()}
    for perm in permutations(range(a.n)):
        if all(frozenset((perm[u], perm[v])) in eb for u, v in a.edges()):
            return True
    return False


def random_corpus(count: int, max_n: int = 14, base_seed: int = 20260810):
    """Deterministic list of (seed, graph) pairs of connected graphs."""
    import random as _random

    out = []
    for i in range(count):
        seed = base_seed + i
        rng = _random.Random(seed)
        n = rng.randint(5, max_n)
        p = rng.uniform(0.12, 0.85)
        out.append((seed, random_connected_graph(n, p, seed)))
    return out
