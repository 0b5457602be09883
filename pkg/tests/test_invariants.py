import itertools
import random

import pytest
from hypothesis import given

from annihilator.errors import BadInput, BadVertex, BudgetExceeded, NotAnnihilating
from annihilator.families import make_star
from annihilator.graph import DegreeSequence, build_graph, degree_sequence
from annihilator.invariants import (
    annihilation_number, full_report, is_annihilating, is_independent, is_maximal_annihilating,
)

from conftest import graphs, random_graph


def brute_annihilation(g):
    # largest vertex set whose degree sum stays within m
    deg = g.degrees
    for k in range(g.n, -1, -1):
        if any(sum(deg[v] for v in s) <= g.m for s in itertools.combinations(range(g.n), k)):
            return k
    return 0


def test_star6():
    r = full_report(make_star(6))
    assert (r.n, r.m, r.alpha, r.mu, r.annihilation) == (6, 5, 5, 1, 5)
    assert r.annihilating_witness == (0, 1, 2, 3, 4)
    assert r.graph_class.is_konig_egervary and r.gap == 0


def test_triangle_sits_below_half_n():
    r = full_report(build_graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert r.annihilation == 1 and r.alpha == 1
    assert 2 * r.annihilation < r.n


@given(graphs(9))
def test_annihilation_matches_subset_search(g):
    assert annihilation_number(degree_sequence(g), g.m)[0] == brute_annihilation(g)


def test_annihilation_input_checks():
    with pytest.raises(BadInput):
        annihilation_number(DegreeSequence((1, 1), (0, 1)), 2)
    with pytest.raises(BadInput):
        annihilation_number(DegreeSequence((2, 1, 1), (0, 1, 2)), 2)
    assert annihilation_number(DegreeSequence((), ()), 0) == (0, [])
    assert annihilation_number(DegreeSequence((0, 0, 0), (0, 1, 2)), 0)[0] == 3


def test_annihilating_predicates():
    g = make_star(6)
    assert is_annihilating(g, [0, 1, 2, 3, 4])
    assert not is_annihilating(g, [5, 0])
    assert is_maximal_annihilating(g, [0, 1, 2, 3, 4])
    assert not is_maximal_annihilating(g, [0, 1])
    with pytest.raises(NotAnnihilating):
        is_maximal_annihilating(g, [5, 0])
    with pytest.raises(BadVertex):
        is_annihilating(g, [9])
    assert is_independent(g, [0, 1, 2]) and not is_independent(g, [0, 5])


@given(graphs(12))
def test_report_invariants(g):
    r = full_report(g)
    n, alpha, mu, a = r.n, r.alpha, r.mu, r.annihilation
    assert a >= alpha and a >= n // 2
    assert 0 <= r.gap <= max(n - 1, 0)
    assert alpha + mu <= n <= alpha + 2 * mu
    assert is_independent(g, r.alpha_witness) and len(r.alpha_witness) == alpha
    assert is_maximal_annihilating(g, r.annihilating_witness)
    if r.graph_class.is_konig_egervary:
        assert mu <= alpha and 2 * mu <= n
        assert r.gap <= mu
        if g.m > 0:
            assert r.gap <= mu - 1


def test_exhaustive_small(small_graphs):
    for g in small_graphs:
        r = full_report(g)
        assert r.annihilation >= r.alpha and r.annihilation >= g.n // 2
        if r.graph_class.is_konig_egervary and g.m:
            assert r.gap <= r.mu - 1


def test_budget_overrun_keeps_partial_report():
    g = random_graph(random.Random(0), 90, 0.08)
    with pytest.raises(BudgetExceeded) as info:
        full_report(g, budget=5)
    partial = info.value.partial
    assert partial is not None and not partial.complete
    assert partial.alpha is None and partial.gap is None
    assert partial.mu > 0 and partial.annihilation >= g.n // 2
