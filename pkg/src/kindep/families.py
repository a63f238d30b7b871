"""Deterministic generators for extremal graph families, their closed-form
profiles, and a certificate verifier.

Every generator documents its id layout so certificate witnesses are
stable. The three regular families (g1, g4, g5) share a layered trunk:

  anchors      a_0 .. a_{m-1}                    (the extremal set)
  groups       per anchor, r vertices inducing K_r minus one edge; the
               endpoints of the missing edge are the group's "special"
               pair and carry the only free degree slots
  repeat units for deep variants: connector -> K_{r-2} clique -> new
               special pair, per group
  completion   family-specific wiring that closes the last special pairs:
               g1 a cyclic cross-group matching, g4 two apex vertices,
               g5 a clique with one vertex per group

g1 targets k = 6l-4 with m = r groups, g4 targets k = 6l-3 with m = r,
g5 targets k = 6l-2 with m = r-1. All three come out r-regular and the
anchor set attains the matching degree-constrained upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import degree_constrained_bound, firby_haviland_bound
from .graph import (
    Graph,
    GraphError,
    connected_components,
    diameter,
    disjoint_union,
    induced_subgraph,
)
from .solver import alpha_k_exact

FAMILY_NAMES = (
    "join_chain",
    "comb",
    "subdivided_comb",
    "star",
    "subdivided_star",
    "g1",
    "g4",
    "g5",
)

# Largest graph verify_construction will solve exactly before reporting
# an indeterminate certificate.
VERIFY_EXACT_CAP = 512


class FamilyParamError(GraphError):
    """Construction parameters outside the range a family supports."""


@dataclass(frozen=True)
class FamilyParams:
    family: str
    r: int | None = None
    l: int | None = None
    t: int | None = None
    k: int | None = None
    part_sizes: tuple[int, ...] | None = None
    n_target: int | None = None
    spine: int | None = None
    legs: int | None = None


@dataclass(frozen=True)
class Profile:
    """Closed-form expectations for a family instance."""

    n: int
    alpha: int
    k: int
    regular_degree: int | None


def join_chain(sizes) -> Graph:
    """Chain of cliques [1, i_1, ..., i_k, 1] with complete bipartite
    connections between consecutive blocks only.

    Ids are assigned block by block, so vertex 0 and vertex n-1 are the
    two singleton ends at distance k+1.
    """
    sizes = tuple(sizes)
    if not sizes:
        raise FamilyParamError("join chain needs at least one interior block")
    if any(s < 1 for s in sizes):
        raise FamilyParamError(f"block sizes must be positive, got {sizes}")
    blocks = []
    nid = 0
    for size in (1, *sizes, 1):
        blocks.append(list(range(nid, nid + size)))
        nid += size
    edges = []
    for block in blocks:
        edges.extend(
            (block[p], block[q])
            for p in range(len(block))
            for q in range(p + 1, len(block))
        )
    for left, right in zip(blocks, blocks[1:]):
        edges.extend((u, v) for u in left for v in right)
    return Graph(nid, edges)


def comb(n: int) -> Graph:
    """Path on n/2 vertices (ids 0..n/2-1) with pendant n/2+i on spine i."""
    if n % 2 != 0 or n < 4:
        raise FamilyParamError(f"comb needs an even vertex count >= 4, got {n}")
    half = n // 2
    edges = [(i, i + 1) for i in range(half - 1)]
    edges.extend((i, half + i) for i in range(half))
    return Graph(n, edges)


def subdivided_comb(k: int, spine: int) -> Graph:
    """Comb with each pendant edge stretched into a path of length k/2.

    Ids: spine 0..spine-1, then the pendant path of spine vertex i occupies
    spine + i*(k/2) ... consecutively, tip last. The tips form a
    k-independent set of size spine.
    """
    if k % 2 != 0 or k < 2:
        raise FamilyParamError(f"needs an even k >= 2, got {k}")
    if spine < 2:
        raise FamilyParamError(f"spine must have >= 2 vertices, got {spine}")
    half = k // 2
    edges = [(i, i + 1) for i in range(spine - 1)]
    nid = spine
    for i in range(spine):
        prev = i
        for _ in range(half):
            edges.append((prev, nid))
            prev = nid
            nid += 1
    return Graph(nid, edges)


def star(n: int) -> Graph:
    """Star with center 0 and leaves 1..n-1."""
    if n < 2:
        raise FamilyParamError(f"star needs >= 2 vertices, got {n}")
    return Graph(n, [(0, v) for v in range(1, n)])


def subdivided_star(k: int, legs: int) -> Graph:
    """Star with each edge stretched into a path of length (k+1)/2.

    Ids: center 0, then leg i occupies 1 + i*(k+1)/2 ... consecutively,
    tip last. The tips are pairwise at distance exactly k+1.
    """
    if k % 2 != 1 or k < 3:
        raise FamilyParamError(f"needs an odd k >= 3, got {k}")
    if legs < 2:
        raise FamilyParamError(f"needs >= 2 legs, got {legs}")
    length = (k + 1) // 2
    edges = []
    nid = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nid))
            prev = nid
            nid += 1
    return Graph(nid, edges)


def _check_regular_params(r: int, l: int, t: int) -> None:
    if r < 3:
        raise FamilyParamError(
            f"regular families need degree r >= 3, got r={r}"
        )
    if l < 1:
        raise FamilyParamError(f"repeat count must be positive, got l={l}")
    if t < 1:
        raise FamilyParamError(f"copy count must be positive, got t={t}")


def _trunk(r: int, l: int, groups: int):
    """Shared layered body: anchors, groups, and l-1 repeat units.

    Returns (edges, next_free_id, last_special_pairs) where the special
    pairs still need exactly one edge each.
    """
    edges = []
    nid = groups  # anchors are 0..groups-1
    specials = []
    for i in range(groups):
        block = list(range(nid, nid + r))
        nid += r
        s1, s2 = block[-2], block[-1]
        edges.extend(
            (block[p], block[q])
            for p in range(r)
            for q in range(p + 1, r)
            if (block[p], block[q]) != (s1, s2)
        )
        edges.extend((i, u) for u in block)
        specials.append((s1, s2))
    for _ in range(1, l):
        connectors = list(range(nid, nid + groups))
        nid += groups
        for i, (s1, s2) in enumerate(specials):
            edges.append((connectors[i], s1))
            edges.append((connectors[i], s2))
        cliques = []
        for i in range(groups):
            cl = list(range(nid, nid + r - 2))
            nid += r - 2
            edges.extend(
                (cl[p], cl[q])
                for p in range(len(cl))
                for q in range(p + 1, len(cl))
            )
            edges.extend((connectors[i], u) for u in cl)
            cliques.append(cl)
        new_specials = []
        for i in range(groups):
            s1, s2 = nid, nid + 1
            nid += 2
            edges.append((s1, s2))
            edges.extend((s1, u) for u in cliques[i])
            edges.extend((s2, u) for u in cliques[i])
            new_specials.append((s1, s2))
        specials = new_specials
    return edges, nid, specials


def build_g1(r: int, l: int, t: int) -> Graph:
    """r-regular family for k = 6l-4: the anchors are a maximum
    k-independent set of size r per copy, closed by a cyclic cross-group
    matching on the last special pairs."""
    _check_regular_params(r, l, t)
    edges, nid, specials = _trunk(r, l, groups=r)
    for i in range(r):
        edges.append((specials[i][0], specials[(i + 1) % r][1]))
    return disjoint_union(Graph(nid, edges), t)


def build_g4(r: int, l: int, t: int) -> Graph:
    """r-regular family for k = 6l-3: closed by two apex vertices, one per
    side of the special pairs."""
    _check_regular_params(r, l, t)
    edges, nid, specials = _trunk(r, l, groups=r)
    apex1, apex2 = nid, nid + 1
    for s1, s2 in specials:
        edges.append((apex1, s1))
        edges.append((apex2, s2))
    return disjoint_union(Graph(nid + 2, edges), t)


def build_g5(r: int, l: int, t: int) -> Graph:
    """r-regular family for k = 6l-2: r-1 groups, closed by a K_{r-1}
    whose vertex i is adjacent to both specials of group i."""
    _check_regular_params(r, l, t)
    edges, nid, specials = _trunk(r, l, groups=r - 1)
    closers = list(range(nid, nid + r - 1))
    edges.extend(
        (closers[p], closers[q])
        for p in range(r - 1)
        for q in range(p + 1, r - 1)
    )
    for i, (s1, s2) in enumerate(specials):
        edges.append((closers[i], s1))
        edges.append((closers[i], s2))
    return disjoint_union(Graph(nid + r - 1, edges), t)


def expected_profile(params: FamilyParams) -> Profile:
    """Closed-form vertex count, claimed alpha, target k, and regular degree."""
    fam = params.family
    if fam == "join_chain":
        if not params.part_sizes:
            raise FamilyParamError("join_chain needs part_sizes")
        if any(s < 1 for s in params.part_sizes):
            raise FamilyParamError(
                f"block sizes must be positive, got {params.part_sizes}"
            )
        k = len(params.part_sizes)
        return Profile(n=2 + sum(params.part_sizes), alpha=2, k=k,
                       regular_degree=None)
    if fam == "comb":
        n = params.n_target
        if n is None or n % 2 != 0 or n < 4:
            raise FamilyParamError(f"comb needs an even n >= 4, got {n}")
        return Profile(n=n, alpha=n // 2, k=2, regular_degree=None)
    if fam == "subdivided_comb":
        k, spine = params.k, params.spine
        if k is None or k % 2 != 0 or k < 2:
            raise FamilyParamError(f"needs an even k >= 2, got {k}")
        if spine is None or spine < 2:
            raise FamilyParamError(f"needs spine >= 2, got {spine}")
        return Profile(n=spine * (1 + k // 2), alpha=spine, k=k,
                       regular_degree=None)
    if fam == "star":
        n = params.n_target
        if n is None or n < 2:
            raise FamilyParamError(f"star needs n >= 2, got {n}")
        return Profile(n=n, alpha=n - 1, k=1, regular_degree=None)
    if fam == "subdivided_star":
        k, legs = params.k, params.legs
        if k is None or k % 2 != 1 or k < 3:
            raise FamilyParamError(f"needs an odd k >= 3, got {k}")
        if legs is None or legs < 2:
            raise FamilyParamError(f"needs legs >= 2, got {legs}")
        return Profile(n=1 + legs * (k + 1) // 2, alpha=legs, k=k,
                       regular_degree=None)
    if fam in ("g1", "g4", "g5"):
        r, l, t = params.r, params.l, params.t
        if r is None or l is None or t is None:
            raise FamilyParamError(f"{fam} needs r, l, and t")
        _check_regular_params(r, l, t)
        if fam == "g1":
            return Profile(n=t * l * r * (r + 1), alpha=t * r, k=6 * l - 4,
                           regular_degree=r)
        if fam == "g4":
            return Profile(n=t * (l * r * (r + 1) + 2), alpha=t * r,
                           k=6 * l - 3, regular_degree=r)
        return Profile(n=t * (l * (r - 1) * (r + 1) + (r - 1)),
                       alpha=t * (r - 1), k=6 * l - 2, regular_degree=r)
    raise FamilyParamError(f"unknown family {fam!r}")


def build_family(params: FamilyParams) -> Graph:
    """Dispatch a FamilyParams to its generator (validates via expected_profile)."""
    expected_profile(params)
    fam = params.family
    if fam == "join_chain":
        return join_chain(params.part_sizes)
    if fam == "comb":
        return comb(params.n_target)
    if fam == "subdivided_comb":
        return subdivided_comb(params.k, params.spine)
    if fam == "star":
        return star(params.n_target)
    if fam == "subdivided_star":
        return subdivided_star(params.k, params.legs)
    builder = {"g1": build_g1, "g4": build_g4, "g5": build_g5}[fam]
    return builder(params.r, params.l, params.t)


def _matching_bound(params: FamilyParams, profile: Profile, n_actual: int):
    """The bound a family claims to attain, evaluated at the actual size.

    Returns (case_id, exact value). join_chain attains the guaranteed
    minimum of 2 for connected non-complete graphs of diameter >= k+1.
    """
    fam = params.family
    if fam == "join_chain":
        return "FH_LOWER", Fraction(2)
    if fam in ("comb", "subdivided_comb", "star", "subdivided_star"):
        bv = firby_haviland_bound(n_actual, profile.k)
        return bv.case_id, bv.value
    bv = degree_constrained_bound(n_actual, profile.k, params.r, params.r)
    return bv.case_id, bv.value


@dataclass(frozen=True)
class Certificate:
    """Machine-checked record that a graph matches its family's claims."""

    params: FamilyParams
    n_actual: int
    regular_degree: int | None
    components: int
    per_copy_diameter: int | None
    claimed_alpha: int
    achieved_alpha: int | None
    bound_case: str
    bound_value: Fraction
    passed: bool | None  # None = indeterminate (exact solve skipped)
    witness: tuple[int, ...]
    failures: tuple[str, ...]


def verify_construction(g: Graph, params: FamilyParams,
                        max_exact_n: int = VERIFY_EXACT_CAP) -> Certificate:
    """Certify that g has the order, regularity, diameter, and exact
    k-independence number its family parameters claim, and that the claim
    meets the matching closed-form bound with equality.

    Graphs larger than max_exact_n skip the exact solve and come back
    indeterminate (passed=None) unless a structural check already failed.
    """
    profile = expected_profile(params)
    k = profile.k
    failures: list[str] = []

    if g.n != profile.n:
        failures.append(f"vertex count {g.n} != expected {profile.n}")

    if profile.regular_degree is not None:
        bad = [v for v in range(g.n) if g.degree(v) != profile.regular_degree]
        if bad:
            failures.append(
                f"{len(bad)} vertices off degree {profile.regular_degree} "
                f"(first: {bad[0]} with degree {g.degree(bad[0])})"
            )

    comps = connected_components(g)
    expected_comps = params.t if params.family in ("g1", "g4", "g5") else 1
    if len(comps) != expected_comps:
        failures.append(
            f"{len(comps)} components, expected {expected_comps}"
        )

    per_copy_diameter = None
    for comp in comps:
        d = diameter(induced_subgraph(g, comp))
        if per_copy_diameter is None:
            per_copy_diameter = d
        if d is None or d < k + 1:
            failures.append(
                f"component diameter {d} below required {k + 1}"
            )
            break

    achieved = None
    witness: tuple[int, ...] = ()
    if g.n <= max_exact_n:
        result = alpha_k_exact(g, k)
        achieved = result.alpha
        witness = result.witness
        if achieved != profile.alpha:
            failures.append(
                f"alpha_{k} = {achieved} != claimed {profile.alpha}"
            )

    bound_case, bound_value = _matching_bound(params, profile, g.n)
    if bound_value.numerator // bound_value.denominator != profile.alpha:
        failures.append(
            f"bound {bound_case} floor "
            f"{bound_value.numerator // bound_value.denominator} != "
            f"claimed {profile.alpha}"
        )

    if failures:
        passed = False
    elif achieved is None:
        passed = None
    else:
        passed = True

    return Certificate(
        params=params,
        n_actual=g.n,
        regular_degree=profile.regular_degree,
        components=len(comps),
        per_copy_diameter=per_copy_diameter,
        claimed_alpha=profile.alpha,
        achieved_alpha=achieved,
        bound_case=bound_case,
        bound_value=bound_value,
        passed=passed,
        witness=witness,
        failures=tuple(failures),
    )
