"""Closed-form bounds on the k-independence number.

All arithmetic is exact (fractions.Fraction / int); no floating point.
Each calculator returns a BoundValue tagged with a stable case id used in
the JSON report schema. The calculators are pure functions of numeric
parameters; bound_report applies them to a concrete graph and marks which
of their side conditions the graph actually meets.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .graph import Graph, GraphError, degree_stats, diameter, is_connected
from .solver import COLORING_CAP, alpha_k_exact, chi_k_exact, chi_k_greedy

UPPER = "upper"
LOWER = "lower"

# Fixed ordering of case ids in reports.
CASE_ORDER = (
    "FH_EVEN",
    "FH_ODD",
    "T2_CASE1",
    "T2_CASE2",
    "T2_CASE3",
    "T2_CASE4",
    "T2_CASE5",
    "T2_CASE6",
    "T2_CASE7",
    "T2_CASE8",
    "BROOKS_M",
    "CHROMATIC_LOWER",
    "REGULAR_ALPHA2",
)


@dataclass(frozen=True)
class BoundValue:
    case_id: str
    value: Fraction
    floor_value: int  # floor for upper bounds, ceiling for lower bounds
    direction: str  # UPPER or LOWER
    applicable: bool
    conditions: tuple[str, ...]
    subcase: str | None = None


def _upper(case_id: str, value: Fraction, conditions, subcase=None) -> BoundValue:
    v = Fraction(value)
    return BoundValue(
        case_id=case_id, value=v, floor_value=v.numerator // v.denominator,
        direction=UPPER, applicable=True, conditions=tuple(conditions),
        subcase=subcase,
    )


def _lower(case_id: str, value: Fraction, conditions, subcase=None) -> BoundValue:
    v = Fraction(value)
    return BoundValue(
        case_id=case_id, value=v, floor_value=-((-v.numerator) // v.denominator),
        direction=LOWER, applicable=True, conditions=tuple(conditions),
        subcase=subcase,
    )


def firby_haviland_bound(n: int, k: int) -> BoundValue:
    """Diameter-based upper bound: 2n/(k+2) for even k, (2n-2)/(k+1) for odd."""
    if n < 2:
        raise GraphError(f"bound needs n >= 2, got {n}")
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    conditions = ("connected", "non-complete", f"diameter >= {k + 1}")
    if k % 2 == 0:
        return _upper("FH_EVEN", Fraction(2 * n, k + 2), conditions)
    return _upper("FH_ODD", Fraction(2 * n - 2, k + 1), conditions)


def _cycle_length_index(k: int) -> tuple[int, int]:
    """Map k >= 2 to (case number, l) for the minimum-degree >= 3 cases.

    The case split follows the residue of k modulo 6, with l the unique
    positive integer putting k in that residue class:
      case 3: k = 6l-4   case 4: k = 6l-3   case 5: k = 6l-2
      case 6: k = 6l-1   case 7: k = 6l     case 8: k = 6l+1
    """
    r = k % 6
    table = {2: (3, (k + 4) // 6), 3: (4, (k + 3) // 6), 4: (5, (k + 2) // 6),
             5: (6, (k + 1) // 6), 0: (7, k // 6), 1: (8, (k - 1) // 6)}
    case, ell = table[r]
    if ell < 1:
        raise GraphError(f"no case applies for k={k}")
    return case, ell


def degree_constrained_bound(n: int, k: int, delta: int, Delta: int) -> BoundValue:
    """Sharp upper bound on the k-independence number of a connected graph
    with minimum degree delta and maximum degree Delta, by case analysis
    on k and on the residue of k modulo 6."""
    if delta < 1:
        raise GraphError(f"minimum degree must be at least 1, got {delta}")
    if delta > Delta:
        raise GraphError(f"minimum degree {delta} exceeds maximum degree {Delta}")
    if Delta >= n:
        raise GraphError(f"maximum degree {Delta} impossible on {n} vertices")
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    conditions = ("connected", f"diameter >= {k + 1}")

    if k == 1:
        return _upper("T2_CASE1", Fraction(Delta * n, Delta + delta), conditions)

    if delta <= 2:
        if k % 2 == 1:
            value = Fraction(2 * Delta * n, Delta * (2 * delta + k - 1) + 2)
            return _upper("T2_CASE2", value, conditions, subcase="odd k")
        value = Fraction(2 * n, 2 * delta + k)
        return _upper("T2_CASE2", value, conditions, subcase="even k")

    case, ell = _cycle_length_index(k)
    base = ell * (delta + 1)
    if case == 3:
        return _upper("T2_CASE3", Fraction(n, base), conditions)
    if case == 4:
        if Delta > delta:
            return _upper(
                "T2_CASE4", Fraction(Delta * n, ell * Delta * (delta + 1) + 1),
                conditions, subcase="Delta > delta",
            )
        return _upper(
            "T2_CASE4", Fraction(Delta * n, ell * Delta * (delta + 1) + 2),
            conditions, subcase="Delta = delta",
        )
    if case == 5:
        return _upper("T2_CASE5", Fraction(n, base + 1), conditions)
    if case == 6:
        if Delta == delta and delta % 2 == 0:
            return _upper(
                "T2_CASE6",
                Fraction(Delta * n, ell * Delta * (delta + 1) + Delta + 2),
                conditions, subcase="Delta = delta even",
            )
        return _upper(
            "T2_CASE6",
            Fraction(Delta * n, ell * Delta * (delta + 1) + Delta + 1),
            conditions, subcase="otherwise",
        )
    if case == 7:
        if Delta == delta and delta % 2 == 0:
            return _upper("T2_CASE7", Fraction(n, base + 3), conditions,
                          subcase="Delta = delta even")
        return _upper("T2_CASE7", Fraction(n, base + 2), conditions,
                      subcase="otherwise")
    if delta % 2 == 1:
        return _upper(
            "T2_CASE8",
            Fraction(Delta * n, ell * Delta * (delta + 1) + 2 * Delta + delta - 1),
            conditions, subcase="delta odd",
        )
    return _upper(
        "T2_CASE8",
        Fraction(Delta * n, ell * Delta * (delta + 1) + 3 * Delta + delta - 2),
        conditions, subcase="delta even",
    )


def brooks_distance_bound(Delta: int, k: int) -> int:
    """Upper bound on the distance-k chromatic number from max degree:
    M = 1 + Delta*((Delta-1)^k - 1)/(Delta-2), exact integer."""
    if Delta < 3:
        raise GraphError(f"bound requires maximum degree >= 3, got {Delta}")
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    num = Delta * ((Delta - 1) ** k - 1)
    assert num % (Delta - 2) == 0
    return 1 + num // (Delta - 2)


def chromatic_lower_bound(n: int, chi: int) -> BoundValue:
    """alpha_k >= n / chi_k: color classes are k-independent sets."""
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if chi < 1:
        raise GraphError(f"chromatic number must be positive, got {chi}")
    return _lower("CHROMATIC_LOWER", Fraction(n, chi), ())


def regular_alpha2_bound(n: int, r: int) -> BoundValue:
    """alpha_2 <= n/(r+1) in an r-regular graph."""
    if r < 1:
        raise GraphError(f"degree must be positive, got {r}")
    return _upper("REGULAR_ALPHA2", Fraction(n, r + 1), ("r-regular", "k = 2"))


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    delta: int
    Delta: int
    diameter: int | None
    connected: bool
    bounds: tuple[BoundValue, ...]
    exact_alpha: int | None
    tight: tuple[str, ...] | None


def _mark(bv: BoundValue, violations: list[str]) -> BoundValue:
    if not violations:
        return bv
    return replace(
        bv, applicable=False,
        conditions=bv.conditions + tuple(f"violated: {v}" for v in violations),
    )


def bound_report(g: Graph, k: int, compute_exact: bool = False) -> BoundReport:
    """Evaluate every calculator on one graph and flag applicability.

    The chromatic lower bound uses the exact distance-k chromatic number
    when the graph is within the exact-coloring cap, otherwise the greedy
    upper estimate (which only weakens, never invalidates, the bound).
    """
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    if g.n == 0:
        raise GraphError("bound report needs a nonempty graph")
    stats = degree_stats(g)
    delta, Delta = stats.min_degree, stats.max_degree
    diam = diameter(g)
    connected = diam is not None
    complete = connected and g.edge_count == g.n * (g.n - 1) // 2
    diam_ok = connected and diam >= k + 1

    bounds: list[BoundValue] = []

    structural: list[str] = []
    if not connected:
        structural.append("connected")
    if not diam_ok:
        structural.append(f"diameter >= {k + 1}")

    if g.n >= 2:
        fh = firby_haviland_bound(g.n, k)
        fh_violations = list(structural)
        if complete:
            fh_violations.append("non-complete")
        bounds.append(_mark(fh, fh_violations))

    if 1 <= delta <= Delta < g.n:
        bounds.append(_mark(degree_constrained_bound(g.n, k, delta, Delta),
                            structural))

    if Delta >= 3:
        m = brooks_distance_bound(Delta, k)
        bv = _lower("BROOKS_M", Fraction(g.n, m),
                    (f"M = {m} bounds the distance-{k} chromatic number",))
        bounds.append(bv)

    if g.n <= COLORING_CAP:
        chi = chi_k_exact(g, k).num_colors
        chi_note = f"chi_{k} = {chi} (exact)"
    else:
        chi = chi_k_greedy(g, k).num_colors
        chi_note = f"chi_{k} <= {chi} (greedy estimate, heuristic)"
    cl = chromatic_lower_bound(g.n, chi)
    bounds.append(replace(cl, conditions=(chi_note,)))

    if stats.is_regular:
        reg = regular_alpha2_bound(g.n, delta)
        bounds.append(_mark(reg, [] if k == 2 else [f"k = 2 (got k={k})"]))

    bounds.sort(key=lambda b: CASE_ORDER.index(b.case_id))

    exact_alpha = None
    tight = None
    if compute_exact:
        exact_alpha = alpha_k_exact(g, k).alpha
        tight = tuple(
            b.case_id for b in bounds
            if b.applicable and b.floor_value == exact_alpha
        )
    return BoundReport(
        n=g.n, k=k, delta=delta, Delta=Delta, diameter=diam,
        connected=connected, bounds=tuple(bounds), exact_alpha=exact_alpha,
        tight=tight,
    )
