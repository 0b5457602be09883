"""Maximum-cardinality matching.

Bipartite graphs go through Hopcroft-Karp; everything else through Edmonds'
augmenting-path search with blossom contraction (blossoms are shrunk by
relabelling their vertices to a common base).
"""

from __future__ import annotations

from collections import deque

from .errors import NotBipartite
from .graph import Graph, two_coloring

Matching = list[tuple[int, int]]


def _pairs(mate: list[int]) -> Matching:
    return [(v, mate[v]) for v in range(len(mate)) if mate[v] > v]


def hopcroft_karp(g: Graph, coloring: list[int] | None = None) -> list[int]:
    """Return the mate array (``-1`` for exposed vertices) of a maximum matching."""
    if coloring is None:
        coloring = two_coloring(g)
        if coloring is None:
            raise NotBipartite("Hopcroft-Karp needs a bipartite graph")
    n = g.n
    adj = g.adj
    left = [v for v in range(n) if coloring[v] == 0]
    mate = [-1] * n
    # cheap greedy start
    for u in left:
        for v in adj[u]:
            if mate[v] == -1:
                mate[u] = v
                mate[v] = u
                break

    inf = n + 1
    dist = [inf] * n
    while True:
        queue = deque()
        for u in left:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in adj[u]:
                w = mate[v]
                if w == -1:
                    if found == inf:
                        found = dist[u] + 1
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if found == inf:
            break
        # layered DFS, iterative so long paths do not hit the recursion limit
        it = [0] * n
        for root in left:
            if mate[root] != -1:
                continue
            stack = [root]
            path_v: list[int] = []
            while stack:
                u = stack[-1]
                advanced = False
                nbrs = adj[u]
                while it[u] < len(nbrs):
                    v = nbrs[it[u]]
                    it[u] += 1
                    w = mate[v]
                    if w == -1:
                        if dist[u] + 1 == found:
                            path_v.append(v)
                            # augment along stack/path_v
                            for x, y in zip(stack, path_v):
                                mate[x] = y
                                mate[y] = x
                            stack = []
                            advanced = True
                            break
                    elif dist[w] == dist[u] + 1:
                        path_v.append(v)
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = inf
                    stack.pop()
                    if path_v:
                        path_v.pop()
    return mate


class _BlossomSearch:
    """One alternating-tree search from an exposed root."""

    def __init__(self, g: Graph, mate: list[int]):
        self.adj = g.adj
        self.n = g.n
        self.mate = mate

    def _lca(self, a: int, b: int) -> int:
        base, mate, parent = self.base, self.mate, self.parent
        seen = [False] * self.n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def _mark_path(self, v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        base, mate, parent = self.base, self.mate, self.parent
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find(self, root: int) -> int:
        """Return the exposed endpoint of an augmenting path, or -1."""
        n, adj, mate = self.n, self.adj, self.mate
        self.base = base = list(range(n))
        self.parent = parent = [-1] * n
        used = [False] * n
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = self._lca(v, to)
                    in_blossom = [False] * n
                    self._mark_path(v, cur, to, in_blossom)
                    self._mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    def augment(self, end: int) -> None:
        mate, parent = self.mate, self.parent
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nxt


def edmonds(g: Graph) -> list[int]:
    """Mate array of a maximum matching in a general graph."""
    mate = [-1] * g.n
    for u, v in g.edges():
        if mate[u] == -1 and mate[v] == -1:
            mate[u] = v
            mate[v] = u
    search = _BlossomSearch(g, mate)
    # a root that fails once stays blocked for the rest of the run
    for root in range(g.n):
        if mate[root] == -1 and g.adj[root]:
            end = search.find(root)
            if end != -1:
                search.augment(end)
    return mate


def has_augmenting_path(g: Graph, matching: Matching) -> bool:
    """True iff some exposed vertex starts an augmenting path for ``matching``."""
    mate = [-1] * g.n
    for u, v in matching:
        mate[u] = v
        mate[v] = u
    search = _BlossomSearch(g, mate)
    return any(mate[r] == -1 and search.find(r) != -1 for r in range(g.n))


def is_matching(g: Graph, edges: Matching) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def max_matching(g: Graph) -> tuple[int, Matching]:
    """Matching number and a witness edge list sorted by smaller endpoint."""
    coloring = two_coloring(g)
    if coloring is not None:
        mate = hopcroft_karp(g, coloring)
    else:
        mate = edmonds(g)
    pairs = _pairs(mate)
    return len(pairs), pairs
