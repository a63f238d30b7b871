"""Exact and heuristic solvers for distance-k independence and coloring.

Every solver reduces to the k-th power of the input graph (same vertices,
edges between pairs at distance <= k): a k-independent set of G is exactly
an independent set of G^k, and the distance-k chromatic number of G is the
chromatic number of G^k. Vertex subsets are manipulated as Python int
bitmasks throughout.

All search orders are deterministic, so repeated runs return identical
witnesses, colorings, and node counts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError

BRUTE_FORCE_CAP = 30
COLORING_CAP = 30


class SolverCapError(GraphError):
    """Instance exceeds a hard size cap of an exact-by-enumeration routine."""


@dataclass(frozen=True)
class SolveResult:
    alpha: int
    witness: tuple[int, ...]
    method: str  # "exact" | "brute_force" | "greedy"
    nodes_explored: int


@dataclass(frozen=True)
class ColoringResult:
    num_colors: int
    assignment: tuple[int, ...]  # color of vertex v at index v
    exact: bool


def graph_power(g: Graph, k: int) -> Graph:
    """Graph on the same vertices with edges between pairs at distance <= k."""
    if k < 1:
        raise GraphError(f"power exponent must be positive, got {k}")
    edges = []
    for src in range(g.n):
        # BFS truncated at depth k
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if dist[u] == k:
                continue
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        edges.extend((src, v) for v in dist if src < v)
    return Graph(g.n, edges)


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for v in range(g.n):
        m = 0
        for u in g.neighbors(v):
            m |= 1 << u
        masks[v] = m
    return masks


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _clique_cover_bound(cand: int, adj: list[int]) -> int:
    """Greedy clique cover of the candidate set; its size bounds the MIS.

    Candidates are scanned in ascending id and placed into the first clique
    they complete; an independent set takes at most one vertex per clique.
    """
    clique_masks: list[int] = []
    count = 0
    for v in _bits(cand):
        placed = False
        av = adj[v]
        for i, cm in enumerate(clique_masks):
            if cm & ~av == 0:
                clique_masks[i] = cm | (1 << v)
                placed = True
                break
        if not placed:
            clique_masks.append(1 << v)
            count += 1
    return count


def _greedy_mis(adj: list[int], n: int) -> list[int]:
    """Greedy independent set: ascending degree, ties by id."""
    order = sorted(range(n), key=lambda v: (adj[v].bit_count(), v))
    chosen: list[int] = []
    blocked = 0
    for v in order:
        if not (blocked >> v) & 1:
            chosen.append(v)
            blocked |= adj[v] | (1 << v)
    return sorted(chosen)


def _max_independent_set(adj: list[int], n: int) -> tuple[int, list[int], int]:
    """Exact MIS by branch and bound on bitmask adjacency.

    Branches on the maximum-degree vertex of the residual graph (ties by
    lowest id), include-branch first, pruning with the greedy clique-cover
    bound. Returns (size, sorted witness, nodes explored).
    """
    best_set = _greedy_mis(adj, n)
    best = len(best_set)
    nodes = 0
    full = (1 << n) - 1

    def dfs(cand: int, chosen: list[int]) -> None:
        nonlocal best, best_set, nodes
        nodes += 1
        if cand == 0:
            size = len(chosen)
            if size > best or (size == best and sorted(chosen) < best_set):
                best = size
                best_set = sorted(chosen)
            return
        if len(chosen) + _clique_cover_bound(cand, adj) <= best:
            return
        # residual max-degree vertex, ties by lowest id
        pick = -1
        pick_deg = -1
        for v in _bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        chosen.append(pick)
        dfs(cand & ~(adj[pick] | (1 << pick)), chosen)
        chosen.pop()
        dfs(cand & ~(1 << pick), chosen)

    dfs(full, [])
    return best, best_set, nodes


def alpha_k_exact(g: Graph, k: int) -> SolveResult:
    """Exact k-independence number with a witness set.

    k = 0 returns the whole vertex set. Disconnected inputs are fine:
    cross-component pairs are never adjacent in the power graph.
    """
    if k < 0:
        raise GraphError(f"k must be nonnegative, got {k}")
    if k == 0:
        return SolveResult(
            alpha=g.n, witness=tuple(range(g.n)), method="exact",
            nodes_explored=0,
        )
    adj = _adjacency_masks(graph_power(g, k))
    alpha, witness, nodes = _max_independent_set(adj, g.n)
    return SolveResult(
        alpha=alpha, witness=tuple(witness), method="exact",
        nodes_explored=nodes,
    )


def alpha_k_bruteforce(g: Graph, k: int) -> SolveResult:
    """Independent oracle: exhaustive scan of all vertex subsets."""
    if g.n > BRUTE_FORCE_CAP:
        raise SolverCapError(
            f"brute force capped at {BRUTE_FORCE_CAP} vertices, got {g.n}"
        )
    if k < 0:
        raise GraphError(f"k must be nonnegative, got {k}")
    if k == 0:
        return SolveResult(
            alpha=g.n, witness=tuple(range(g.n)), method="brute_force",
            nodes_explored=0,
        )
    adj = _adjacency_masks(graph_power(g, k))
    best = 0
    best_mask = 0
    examined = 0
    for mask in range(1 << g.n):
        examined += 1
        if mask.bit_count() <= best:
            continue
        m = mask
        ok = True
        while m:
            low = m & -m
            if adj[low.bit_length() - 1] & mask:
                ok = False
                break
            m ^= low
        if ok:
            best = mask.bit_count()
            best_mask = mask
    witness = tuple(sorted(_bits(best_mask)))
    return SolveResult(
        alpha=best, witness=witness, method="brute_force",
        nodes_explored=examined,
    )


def alpha_k_greedy(g: Graph, k: int) -> SolveResult:
    """Fast valid witness: greedy on the power graph, ascending degree."""
    if k < 0:
        raise GraphError(f"k must be nonnegative, got {k}")
    if k == 0:
        return SolveResult(
            alpha=g.n, witness=tuple(range(g.n)), method="greedy",
            nodes_explored=0,
        )
    adj = _adjacency_masks(graph_power(g, k))
    chosen = _greedy_mis(adj, g.n)
    return SolveResult(
        alpha=len(chosen), witness=tuple(chosen), method="greedy",
        nodes_explored=g.n,
    )


def _greedy_clique(adj: list[int], n: int) -> list[int]:
    """Deterministic greedy clique, highest degree first (ties by id)."""
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    clique = [order[0]]
    common = adj[order[0]]
    for v in order[1:]:
        if (common >> v) & 1:
            clique.append(v)
            common &= adj[v]
    return sorted(clique)


def _dsatur_order_coloring(adj: list[int], n: int) -> list[int]:
    """Greedy coloring, highest saturation first, ties by degree then id."""
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degrees = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        pick = -1
        key = None
        for v in range(n):
            if colors[v] != -1:
                continue
            cand = (-len(neighbor_colors[v]), -degrees[v], v)
            if key is None or cand < key:
                key = cand
                pick = v
        c = 0
        while c in neighbor_colors[pick]:
            c += 1
        colors[pick] = c
        for u in _bits(adj[pick]):
            neighbor_colors[u].add(c)
    return colors


def _normalize_colors(colors: list[int]) -> tuple[int, ...]:
    """Relabel colors by first appearance so output is canonical."""
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return tuple(out)


def _feasible_coloring(adj: list[int], n: int, t: int,
                       clique: list[int]) -> list[int] | None:
    """Backtracking search for a proper coloring with at most t colors.

    The seed clique is pre-colored (one color each) to break symmetry, and
    every branch may open at most one brand-new color.
    """
    colors = [-1] * n
    for i, v in enumerate(clique):
        colors[v] = i
    used = len(clique)

    def next_vertex() -> int:
        pick = -1
        key = None
        for v in range(n):
            if colors[v] != -1:
                continue
            sat = len({colors[u] for u in _bits(adj[v]) if colors[u] != -1})
            cand = (-sat, -adj[v].bit_count(), v)
            if key is None or cand < key:
                key = cand
                pick = v
        return pick

    def solve(remaining: int) -> bool:
        nonlocal used
        if remaining == 0:
            return True
        v = next_vertex()
        banned = {colors[u] for u in _bits(adj[v]) if colors[u] != -1}
        limit = min(used + 1, t)
        for c in range(limit):
            if c in banned:
                continue
            colors[v] = c
            bumped = c == used
            if bumped:
                used += 1
            if solve(remaining - 1):
                return True
            if bumped:
                used -= 1
            colors[v] = -1
        return False

    return colors if solve(n - len(clique)) else None


def chi_k_exact(g: Graph, k: int) -> ColoringResult:
    """Exact distance-k chromatic number (minimum coloring of G^k)."""
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    if g.n > COLORING_CAP:
        raise SolverCapError(
            f"exact coloring capped at {COLORING_CAP} vertices, got {g.n}; "
            "use chi_k_greedy for larger graphs"
        )
    if g.n == 0:
        return ColoringResult(num_colors=0, assignment=(), exact=True)
    adj = _adjacency_masks(graph_power(g, k))
    clique = _greedy_clique(adj, g.n)
    greedy = _dsatur_order_coloring(adj, g.n)
    upper = max(greedy) + 1
    for t in range(len(clique), upper + 1):
        attempt = _feasible_coloring(adj, g.n, t, clique)
        if attempt is not None:
            return ColoringResult(
                num_colors=max(attempt) + 1,
                assignment=_normalize_colors(attempt),
                exact=True,
            )
    # The greedy coloring itself is always feasible, so this is unreachable.
    raise AssertionError("coloring search failed below its upper bound")


def chi_k_greedy(g: Graph, k: int) -> ColoringResult:
    """Saturation-guided greedy coloring of G^k; at most Delta(G^k) + 1 colors."""
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    if g.n == 0:
        return ColoringResult(num_colors=0, assignment=(), exact=False)
    adj = _adjacency_masks(graph_power(g, k))
    colors = _dsatur_order_coloring(adj, g.n)
    return ColoringResult(
        num_colors=max(colors) + 1,
        assignment=_normalize_colors(colors),
        exact=False,
    )
