"""Independence, matching and annihilation numbers with certified witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from .errors import BadInput, BadVertex, BudgetExceeded, InvariantViolation, NotAnnihilating
from .graph import DegreeSequence, Graph, GraphClass, classify, degree_sequence
from .independence import DEFAULT_BUDGET, alpha_bipartite, alpha_bipartite_witness, max_independent_set
from .matching import is_matching, max_matching

__all__ = [
    "InvariantReport",
    "alpha_bipartite",
    "annihilation_number",
    "full_report",
    "is_annihilating",
    "is_independent",
    "is_maximal_annihilating",
    "max_independent_set",
    "max_matching",
]


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    alpha: int | None
    mu: int
    annihilation: int
    alpha_witness: tuple[int, ...] | None
    mu_witness: tuple[tuple[int, int], ...]
    annihilating_witness: tuple[int, ...]
    graph_class: GraphClass
    complete: bool = True
    notes: tuple[str, ...] = field(default=())

    @property
    def gap(self) -> int | None:
        if self.alpha is None:
            return None
        return self.annihilation - self.alpha


def annihilation_number(ds: DegreeSequence, m: int) -> tuple[int, list[int]]:
    """Largest k whose k smallest degrees sum to at most m, and those vertices."""
    if sum(ds.degrees) != 2 * m:
        raise BadInput(f"degree sum {sum(ds.degrees)} is not 2*m = {2 * m}")
    if any(b < a for a, b in zip(ds.degrees, ds.degrees[1:])):
        raise BadInput("degree sequence is not ascending")
    total = 0
    k = 0
    for d in ds.degrees:
        if total + d > m:
            break
        total += d
        k += 1
    return k, sorted(ds.origin[:k])


def _degree_sum(g: Graph, s: Iterable[int]) -> int:
    total = 0
    for v in s:
        if not 0 <= v < g.n:
            raise BadVertex(f"vertex {v} not in graph with n={g.n}")
        total += len(g.adj[v])
    return total


def is_annihilating(g: Graph, s: Iterable[int]) -> bool:
    return _degree_sum(g, set(s)) <= g.m


def is_maximal_annihilating(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    total = _degree_sum(g, s)
    if total > g.m:
        raise NotAnnihilating(f"degree sum {total} exceeds m = {g.m}")
    return all(total + len(g.adj[v]) > g.m for v in range(g.n) if v not in s)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    mask = 0
    for v in s:
        mask |= 1 << v
    masks = g.masks
    return all(not (masks[v] & mask) for v in s)


def _check(report: InvariantReport, g: Graph) -> None:
    """Raise InvariantViolation if the report breaks a structural identity."""
    n, alpha, mu, a = report.n, report.alpha, report.mu, report.annihilation
    problems = []
    if len(report.mu_witness) != mu or not is_matching(g, list(report.mu_witness)):
        problems.append("matching witness")
    if _degree_sum(g, report.annihilating_witness) > g.m or len(report.annihilating_witness) != a:
        problems.append("annihilating witness")
    if a < n // 2:
        problems.append("a >= floor(n/2)")
    if alpha is not None:
        if len(report.alpha_witness) != alpha or not is_independent(g, report.alpha_witness):
            problems.append("independent-set witness")
        if not alpha + mu <= n <= alpha + 2 * mu:
            problems.append("alpha + mu <= n <= alpha + 2mu")
        if a < alpha:
            problems.append("a >= alpha")
    if problems:
        raise InvariantViolation("report invariants failed: " + ", ".join(problems))


def full_report(g: Graph, budget: int = DEFAULT_BUDGET) -> InvariantReport:
    """Compute every invariant of ``g`` and check the report before returning.

    When the independence search exceeds ``budget``, BudgetExceeded is raised
    with ``partial`` set to a report whose alpha fields are None.
    """
    ds = degree_sequence(g)
    a, a_wit = annihilation_number(ds, g.m)
    mu, m_wit = max_matching(g)
    base_class = classify(g)
    try:
        if base_class.is_bipartite:
            alpha, alpha_wit = alpha_bipartite_witness(g)
        else:
            alpha, alpha_wit = max_independent_set(g, budget)
    except BudgetExceeded as exc:
        partial = InvariantReport(
            n=g.n, m=g.m, alpha=None, mu=mu, annihilation=a, alpha_witness=None,
            mu_witness=tuple(m_wit), annihilating_witness=tuple(a_wit),
            graph_class=base_class, complete=False,
            notes=(f"independence search exceeded {budget} nodes",),
        )
        _check(partial, g)
        exc.partial = partial
        raise
    report = InvariantReport(
        n=g.n, m=g.m, alpha=alpha, mu=mu, annihilation=a,
        alpha_witness=tuple(alpha_wit), mu_witness=tuple(m_wit),
        annihilating_witness=tuple(a_wit),
        graph_class=replace(base_class, is_konig_egervary=alpha + mu == g.n),
    )
    _check(report, g)
    return report
