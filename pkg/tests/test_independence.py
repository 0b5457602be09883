import random

import networkx as nx
import pytest
from hypothesis import given

from annihilator.errors import BudgetExceeded, NotBipartite
from annihilator.graph import build_graph
from annihilator.independence import (
    alpha_bipartite, alpha_bipartite_witness, clique_cover_bound, max_independent_set,
)
from annihilator.invariants import is_independent
from annihilator.oracles import oracle_alpha

from conftest import graphs, random_graph


def complement_clique_number(g):
    h = nx.empty_graph(g.n)
    h.add_edges_from(g.edges())
    h = nx.complement(h)
    return max((len(c) for c in nx.find_cliques(h)), default=0)


@given(graphs(14))
def test_witness_and_value(g):
    alpha, s = max_independent_set(g)
    assert len(s) == alpha and is_independent(g, s)
    assert alpha == oracle_alpha(g)


def test_against_networkx_cliques():
    rng = random.Random(31)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 30), rng.random())
        assert max_independent_set(g)[0] == complement_clique_number(g)


def test_clique_cover_bound_is_an_upper_bound():
    rng = random.Random(4)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 14), rng.random())
        full = (1 << g.n) - 1
        assert clique_cover_bound(g.masks, full) >= oracle_alpha(g)


def test_budget():
    g = random_graph(random.Random(0), 90, 0.08)
    with pytest.raises(BudgetExceeded) as info:
        max_independent_set(g, budget=5)
    assert info.value.budget == 5


@given(graphs(12))
def test_bipartite_alpha_matches_branch_and_bound(g):
    try:
        alpha, s = alpha_bipartite_witness(g)
    except NotBipartite:
        return
    assert is_independent(g, s) and len(s) == alpha
    assert alpha == max_independent_set(g)[0]


def test_bipartite_rejects_odd_cycle():
    with pytest.raises(NotBipartite):
        alpha_bipartite(build_graph(5, [(i, (i + 1) % 5) for i in range(5)]))


def test_bipartite_exhaustive(small_bipartite):
    for g in small_bipartite:
        assert alpha_bipartite(g) == max_independent_set(g)[0]
