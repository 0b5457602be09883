"""Evaluate the gap bounds a - alpha and their corollaries on one report.

All verdicts use integer arithmetic.  Bounds of the form
``x <= c - 2*sqrt(r)`` are decided by squaring: ``c - x >= 0`` and
``(c - x)**2 >= 4*r``, with equality exactly when the squares match.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompleteReport, NotConnected
from .graph import Graph
from .invariants import InvariantReport


class Status(str, enum.Enum):
    HOLDS = "HOLDS"
    EQUALITY = "EQUALITY"
    VIOLATED = "VIOLATED"
    NOT_APPLICABLE = "NOT_APPLICABLE"

    def __str__(self) -> str:
        return self.value


class BoundId(str, enum.Enum):
    TREE_HALF_MU = "TREE_HALF_MU"
    BIPARTITE_SQRT = "BIPARTITE_SQRT"
    KE_MU_MINUS_1 = "KE_MU_MINUS_1"
    KE_MU_MINUS_2_TIGHTNESS = "KE_MU_MINUS_2_TIGHTNESS"
    GENERIC_MU = "GENERIC_MU"
    GENERIC_N_MINUS_1 = "GENERIC_N_MINUS_1"
    COR_TREE = "COR_TREE"
    COR_BIPARTITE = "COR_BIPARTITE"
    COR_KE = "COR_KE"
    STAR_A_N_MINUS_1 = "STAR_A_N_MINUS_1"
    NONSTAR_A_N_MINUS_2 = "NONSTAR_A_N_MINUS_2"

    def __str__(self) -> str:
        return self.value


BOUND_IDS = tuple(BoundId)

DESCRIPTIONS = {
    BoundId.TREE_HALF_MU: "a - alpha <= (mu - 1)/2  [trees, m > 0]",
    BoundId.BIPARTITE_SQRT: "a - alpha <= 2 + mu - 2 sqrt(1 + mu)  [bipartite]",
    BoundId.KE_MU_MINUS_1: "a - alpha <= mu - 1  [KE, m > 0]",
    BoundId.KE_MU_MINUS_2_TIGHTNESS: "a - alpha <= mu - 2  [non-bipartite KE, tightness only]",
    BoundId.GENERIC_MU: "a - alpha <= mu  [proven for KE]",
    BoundId.GENERIC_N_MINUS_1: "a - alpha <= n - 1",
    BoundId.COR_TREE: "a <= (3 alpha - 1)/2  [trees]",
    BoundId.COR_BIPARTITE: "a <= 2 + 2 alpha - 2 sqrt(1 + alpha)  [bipartite]",
    BoundId.COR_KE: "a <= 2 alpha - 2  [non-bipartite KE]",
    BoundId.STAR_A_N_MINUS_1: "a = n - 1  [stars]",
    BoundId.NONSTAR_A_N_MINUS_2: "a <= n - 2  [connected non-stars]",
}


@dataclass(frozen=True)
class BoundRow:
    bound_id: BoundId
    applicable: bool
    lhs: int
    rhs: Fraction | float
    status: Status
    proven: bool
    # verdict of the comparison regardless of applicability
    diagnostic: Status


@dataclass(frozen=True)
class BoundReport:
    gap: int
    rows: tuple[BoundRow, ...]

    def row(self, bound_id: BoundId | str) -> BoundRow:
        bound_id = BoundId(bound_id)
        for r in self.rows:
            if r.bound_id is bound_id:
                return r
        raise KeyError(bound_id)

    def status(self, bound_id: BoundId | str) -> Status:
        return self.row(bound_id).status

    def proven_violations(self) -> list[BoundRow]:
        return [r for r in self.rows if r.proven and r.status is Status.VIOLATED]

    def findings(self) -> list[BoundRow]:
        """Violations of rows that are not theorems (research observations)."""
        return [r for r in self.rows if not r.proven and r.status is Status.VIOLATED]


def compare(lhs: int, rhs: int) -> Status:
    if lhs < rhs:
        return Status.HOLDS
    if lhs == rhs:
        return Status.EQUALITY
    return Status.VIOLATED


def compare_twice_sqrt(slack: int, radicand: int) -> Status:
    """Compare ``0`` against ``slack - 2*sqrt(radicand)``, i.e. decide
    ``2*sqrt(radicand) <= slack`` exactly."""
    if slack < 0:
        return Status.VIOLATED
    lhs, rhs = 4 * radicand, slack * slack
    if lhs < rhs:
        return Status.HOLDS
    if lhs == rhs:
        return Status.EQUALITY
    return Status.VIOLATED


def sqrt_bound_compare(gap: int, mu: int) -> Status:
    """Decide ``gap <= 2 + mu - 2*sqrt(1 + mu)`` without floating point."""
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    return compare_twice_sqrt(2 + mu - gap, 1 + mu)


def sqrt_upper_root_reached(gap: int, mu: int) -> bool:
    """True iff ``gap >= 2 + mu + 2*sqrt(1 + mu)`` (the discarded quadratic root)."""
    s = gap - 2 - mu
    return s >= 0 and s * s >= 4 * (1 + mu)


def _sqrt_rhs(c: int, radicand: int) -> float:
    return c - 2 * math.sqrt(radicand)


def _row(bound_id, applicable, lhs, rhs, verdict, proven) -> BoundRow:
    return BoundRow(
        bound_id=bound_id,
        applicable=applicable,
        lhs=lhs,
        rhs=rhs,
        status=verdict if applicable else Status.NOT_APPLICABLE,
        proven=proven,
        diagnostic=verdict,
    )


def _require_complete(report: InvariantReport) -> None:
    if report.alpha is None or not report.complete:
        raise IncompleteReport("bounds need a complete invariant report")


def gap_rows(report: InvariantReport) -> list[BoundRow]:
    _require_complete(report)
    n, m, mu = report.n, report.m, report.mu
    gap = report.annihilation - report.alpha
    cls = report.graph_class
    ke = bool(cls.is_konig_egervary)
    return [
        # K1 is a tree with mu = 0, where the right side is -1/2
        _row(BoundId.TREE_HALF_MU, cls.is_tree and m > 0, gap, Fraction(mu - 1, 2),
             compare(2 * gap, mu - 1), True),
        _row(BoundId.BIPARTITE_SQRT, cls.is_bipartite, gap, _sqrt_rhs(2 + mu, 1 + mu),
             sqrt_bound_compare(gap, mu), True),
        _row(BoundId.KE_MU_MINUS_1, ke and m > 0, gap, Fraction(mu - 1),
             compare(gap, mu - 1), True),
        _row(BoundId.KE_MU_MINUS_2_TIGHTNESS, ke and not cls.is_bipartite, gap, Fraction(mu - 2),
             compare(gap, mu - 2), False),
        _row(BoundId.GENERIC_MU, True, gap, Fraction(mu), compare(gap, mu), ke),
        _row(BoundId.GENERIC_N_MINUS_1, n >= 1, gap, Fraction(n - 1), compare(gap, n - 1), True),
    ]


def check_corollaries(report: InvariantReport) -> list[BoundRow]:
    """Rows for the gap bounds rewritten in terms of a and alpha only."""
    _require_complete(report)
    a, alpha = report.annihilation, report.alpha
    cls = report.graph_class
    ke = bool(cls.is_konig_egervary)
    return [
        _row(BoundId.COR_TREE, cls.is_tree, a, Fraction(3 * alpha - 1, 2),
             compare(2 * a, 3 * alpha - 1), True),
        _row(BoundId.COR_BIPARTITE, cls.is_bipartite, a, _sqrt_rhs(2 + 2 * alpha, 1 + alpha),
             compare_twice_sqrt(2 + 2 * alpha - a, 1 + alpha), True),
        _row(BoundId.COR_KE, ke and not cls.is_bipartite, a, Fraction(2 * alpha - 2),
             compare(a, 2 * alpha - 2), False),
    ]


def star_rows(report: InvariantReport) -> list[BoundRow]:
    n, m, a = report.n, report.m, report.annihilation
    cls = report.graph_class
    has_edges = cls.is_connected and m > 0
    star_verdict = Status.EQUALITY if a == n - 1 else Status.VIOLATED
    return [
        _row(BoundId.STAR_A_N_MINUS_1, has_edges and cls.is_star, a, Fraction(n - 1),
             star_verdict, True),
        _row(BoundId.NONSTAR_A_N_MINUS_2, has_edges and not cls.is_star, a, Fraction(n - 2),
             compare(a, n - 2), True),
    ]


def check_star_annihilation(g: Graph, report: InvariantReport) -> Status:
    """Connected graphs: a = n - 1 for stars, a <= n - 2 otherwise."""
    if not report.graph_class.is_connected:
        raise NotConnected("star characterisation is stated for connected graphs")
    star, nonstar = star_rows(report)
    if star.applicable:
        return star.status
    return nonstar.status


def evaluate_bounds(report: InvariantReport) -> BoundReport:
    rows = gap_rows(report) + check_corollaries(report) + star_rows(report)
    return BoundReport(gap=report.annihilation - report.alpha, rows=tuple(rows))
