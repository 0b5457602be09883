import networkx as nx
import pytest
from hypothesis import given

from annihilator.errors import NotBipartite
from annihilator.graph import build_graph, two_coloring
from annihilator.matching import (
    edmonds, has_augmenting_path, hopcroft_karp, is_matching, max_matching,
)
from annihilator.oracles import oracle_mu

from conftest import graphs, random_graphs


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def size(mate):
    return sum(1 for v, w in enumerate(mate) if w > v)


def test_small_cases():
    assert max_matching(build_graph(0, []))[0] == 0
    assert max_matching(build_graph(5, [(i, (i + 1) % 5) for i in range(5)]))[0] == 2
    assert max_matching(petersen())[0] == 5
    assert oracle_mu(petersen()) == 5
    k44 = build_graph(8, [(i, 4 + j) for i in range(4) for j in range(4)])
    assert max_matching(k44)[0] == 4


def test_blossom_needs_contraction():
    # triangle with tails; greedy start can hide the augmenting path inside the odd cycle
    g = build_graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (3, 5)])
    mu, pairs = max_matching(g)
    assert mu == 3 and is_matching(g, pairs)
    assert size(edmonds(g)) == 3


@given(graphs(12))
def test_witness_is_maximum(g):
    mu, pairs = max_matching(g)
    assert len(pairs) == mu
    assert is_matching(g, pairs)
    assert not has_augmenting_path(g, pairs)


@given(graphs(10))
def test_edmonds_agrees_with_hopcroft_karp_on_bipartite(g):
    col = two_coloring(g)
    if col is not None:
        assert size(edmonds(g)) == size(hopcroft_karp(g, col))


def test_against_networkx():
    for g in random_graphs(300, 30, 9):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        assert max_matching(g)[0] == len(nx.max_weight_matching(h, maxcardinality=True))


def test_is_matching_rejects_bad_edges():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert not is_matching(g, [(0, 1), (1, 2)])
    assert not is_matching(g, [(0, 2)])
    assert is_matching(g, [])


def test_hopcroft_karp_refuses_odd_cycle():
    with pytest.raises(NotBipartite):
        hopcroft_karp(build_graph(3, [(0, 1), (1, 2), (0, 2)]))
