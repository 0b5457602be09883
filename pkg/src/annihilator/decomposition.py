"""Annihilation decompositions <A, B> and the edge-count lemmas built on them."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBipartite
from .graph import Graph, degree_sequence, two_coloring
from .invariants import InvariantReport, annihilation_number


@dataclass(frozen=True)
class AnnihilationDecomposition:
    a_side: tuple[int, ...]
    b_side: tuple[int, ...]
    crossing: int
    m_a: int
    m_b: int
    deg_a: int
    deg_b: int


def decompose(g: Graph) -> AnnihilationDecomposition:
    """Split V into the canonical maximum annihilating set A and B = V - A."""
    a, a_side = annihilation_number(degree_sequence(g), g.m)
    in_a = [False] * g.n
    for v in a_side:
        in_a[v] = True
    m_a = m_b = crossing = 0
    for u, v in g.edges():
        if in_a[u] and in_a[v]:
            m_a += 1
        elif in_a[u] or in_a[v]:
            crossing += 1
        else:
            m_b += 1
    b_side = tuple(v for v in range(g.n) if not in_a[v])
    deg = g.degrees
    return AnnihilationDecomposition(
        a_side=tuple(a_side),
        b_side=b_side,
        crossing=crossing,
        m_a=m_a,
        m_b=m_b,
        deg_a=sum(deg[v] for v in a_side),
        deg_b=sum(deg[v] for v in b_side),
    )


def check_lemma_ma_le_mb(d: AnnihilationDecomposition) -> bool:
    """Edges inside A never outnumber edges inside B."""
    return d.m_a <= d.m_b


def check_lemma_gap_le_ma(g: Graph, d: AnnihilationDecomposition, report: InvariantReport) -> bool:
    """For bipartite graphs, a - alpha is at most the number of edges inside A."""
    if two_coloring(g) is None:
        raise NotBipartite("gap <= m(G[A]) is only claimed for bipartite graphs")
    return report.annihilation - report.alpha <= d.m_a
