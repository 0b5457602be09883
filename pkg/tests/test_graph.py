import pytest
from hypothesis import given

from annihilator.errors import BadVertex, DuplicateEdge, GraphError, LoopEdge
from annihilator.graph import (
    build_graph, classify, components, count_edges_within, degree_sequence,
    induced_subgraph, is_triangle_free, two_coloring,
)

from conftest import graphs


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_rejects_loops_duplicates_and_bad_vertices():
    with pytest.raises(LoopEdge):
        build_graph(3, [(1, 1)])
    with pytest.raises(DuplicateEdge):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(BadVertex):
        build_graph(3, [(0, 3)])
    with pytest.raises(BadVertex):
        build_graph(3, [(-1, 2)])
    with pytest.raises(GraphError):
        build_graph(-1, [])


def test_degree_sequence_breaks_ties_by_vertex_id():
    g = build_graph(5, [(4, 0), (4, 1), (4, 2), (3, 2)])
    ds = degree_sequence(g)
    assert ds.degrees == (1, 1, 1, 2, 3)
    assert ds.origin == (0, 1, 3, 2, 4)


def test_edges_are_sorted_pairs():
    g = build_graph(4, [(3, 0), (2, 1), (1, 0)])
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2)]
    assert g.m == 3 and g.has_edge(3, 0) and not g.has_edge(2, 3)


@given(graphs())
def test_handshake(g):
    assert sum(g.degrees) == 2 * g.m
    assert len(list(g.edges())) == g.m


def test_classify_basic_shapes():
    k1 = classify(build_graph(1, []))
    assert k1.is_tree and k1.is_connected and not k1.is_star

    c5 = classify(cycle(5))
    assert not c5.is_bipartite and c5.is_triangle_free and not c5.is_forest

    k3 = classify(cycle(3))
    assert not k3.is_triangle_free

    two_edges = classify(build_graph(4, [(0, 1), (2, 3)]))
    assert two_edges.is_forest and not two_edges.is_tree and not two_edges.is_connected

    star = classify(build_graph(4, [(i, 3) for i in range(3)]))
    assert star.is_star and star.is_tree

    p4 = classify(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert p4.is_tree and not p4.is_star

    empty = classify(build_graph(0, []))
    assert not empty.is_connected and not empty.is_tree


def test_ke_flag_needs_alpha():
    c4 = cycle(4)
    assert classify(c4).is_konig_egervary is None
    assert classify(c4, alpha=2).is_konig_egervary
    assert not classify(cycle(5), alpha=2).is_konig_egervary


def test_two_coloring():
    col = two_coloring(cycle(6))
    assert col is not None
    assert all(col[u] != col[v] for u, v in cycle(6).edges())
    assert two_coloring(cycle(7)) is None


def test_components_and_triangles():
    g = build_graph(6, [(0, 1), (1, 2), (4, 5)])
    assert sorted(map(sorted, components(g))) == [[0, 1, 2], [3], [4, 5]]
    assert is_triangle_free(g)
    assert not is_triangle_free(build_graph(3, [(0, 1), (1, 2), (0, 2)]))


def test_induced_subgraph_relabels():
    c4 = cycle(4)
    sub, relabel = induced_subgraph(c4, [0, 2])
    assert sub.n == 2 and sub.m == 0 and relabel == {0: 0, 2: 1}
    sub, relabel = induced_subgraph(c4, [3, 0, 1])
    assert sub.m == 2 and set(relabel) == {0, 1, 3}
    assert count_edges_within(c4, [0, 1, 3]) == 2
    with pytest.raises(BadVertex):
        induced_subgraph(c4, [4])


@given(graphs(10))
def test_count_edges_within_matches_induced_subgraph(g):
    s = list(range(0, g.n, 2))
    sub, _ = induced_subgraph(g, s)
    assert sub.m == count_edges_within(g, s)
