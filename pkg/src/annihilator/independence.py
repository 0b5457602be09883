"""Exact maximum independent set by branch and bound on vertex bitmasks."""

from __future__ import annotations

from .errors import BudgetExceeded, NotBipartite
from .graph import Graph, two_coloring
from .matching import hopcroft_karp

DEFAULT_BUDGET = 10**7


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def clique_cover_bound(masks: tuple[int, ...], cand: int) -> int:
    """Number of cliques in a greedy clique cover of ``cand``; bounds alpha."""
    count = 0
    while cand:
        low = cand & -cand
        cand ^= low
        inside = masks[low.bit_length() - 1] & cand
        while inside:
            u = inside & -inside
            cand ^= u
            inside &= masks[u.bit_length() - 1]
        count += 1
    return count


class _Search:
    def __init__(self, g: Graph, budget: int):
        self.masks = g.masks
        self.budget = budget
        self.nodes = 0
        self.best = 0
        self.best_set = 0

    def greedy(self, cand: int) -> None:
        # min-degree greedy for an initial incumbent
        masks = self.masks
        chosen = 0
        while cand:
            v = min(_bits(cand), key=lambda x: _popcount(masks[x] & cand))
            chosen |= 1 << v
            cand &= ~(masks[v] | 1 << v)
        self.best = _popcount(chosen)
        self.best_set = chosen

    def run(self, cand: int, chosen: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes, self.budget)
        masks = self.masks
        # degree-0 and degree-1 vertices are always safe to take
        changed = True
        while changed and cand:
            changed = False
            for v in _bits(cand):
                if not cand >> v & 1:
                    continue
                nb = masks[v] & cand
                if nb & (nb - 1) == 0:
                    chosen |= 1 << v
                    cand &= ~(nb | 1 << v)
                    changed = True
        size = _popcount(chosen)
        if not cand:
            if size > self.best:
                self.best = size
                self.best_set = chosen
            return
        if size + clique_cover_bound(masks, cand) <= self.best:
            return
        pivot = max(_bits(cand), key=lambda x: (_popcount(masks[x] & cand), -x))
        bit = 1 << pivot
        self.run(cand & ~(masks[pivot] | bit), chosen | bit)
        self.run(cand & ~bit, chosen)


def max_independent_set(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, list[int]]:
    """Independence number and a maximum independent set (sorted).

    Branches on a maximum-degree vertex (take it and drop its neighbours, or
    drop it) and prunes with a greedy clique cover.  Raises BudgetExceeded
    once more than ``budget`` search nodes have been expanded.
    """
    if g.n == 0:
        return 0, []
    search = _Search(g, budget)
    full = (1 << g.n) - 1
    search.greedy(full)
    search.run(full, 0)
    return search.best, list(_bits(search.best_set))


def alpha_bipartite_witness(g: Graph) -> tuple[int, list[int]]:
    """alpha = n - mu for bipartite graphs, with a witness from Konig's theorem.

    The minimum vertex cover is (L - Z) + (R & Z) where Z is everything
    reachable from exposed left vertices by alternating paths; its
    complement is a maximum independent set.
    """
    coloring = two_coloring(g)
    if coloring is None:
        raise NotBipartite("graph has an odd cycle")
    mate = hopcroft_karp(g, coloring)
    mu = sum(1 for v in range(g.n) if mate[v] > v)
    reach = [False] * g.n
    stack = [v for v in range(g.n) if coloring[v] == 0 and mate[v] == -1]
    for v in stack:
        reach[v] = True
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if reach[v] or mate[u] == v:
                continue
            reach[v] = True
            w = mate[v]
            if w != -1 and not reach[w]:
                reach[w] = True
                stack.append(w)
    indep = [
        v for v in range(g.n)
        if (coloring[v] == 0 and reach[v]) or (coloring[v] == 1 and not reach[v])
    ]
    if len(indep) != g.n - mu:
        raise AssertionError("Konig construction produced a set of the wrong size")
    return g.n - mu, indep


def alpha_bipartite(g: Graph) -> int:
    return alpha_bipartite_witness(g)[0]
