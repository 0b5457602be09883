"""Simple undirected graphs on dense vertex ids ``0..n-1``.

A :class:`Graph` is immutable once built.  Neighbour sets are kept as sorted
tuples for deterministic iteration and as integer bitmasks for the set-heavy
algorithms (independent sets, triangle detection).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BadVertex, DuplicateEdge, LoopEdge


class Graph:
    __slots__ = ("n", "adj", "m", "_masks")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        # Trusted constructor; use build_graph() for validated input.
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self.m = sum(len(a) for a in self.adj) // 2
        self._masks: tuple[int, ...] | None = None

    @property
    def masks(self) -> tuple[int, ...]:
        if self._masks is None:
            out = []
            for nbrs in self.adj:
                bits = 0
                for u in nbrs:
                    bits |= 1 << u
                out.append(bits)
            self._masks = tuple(out)
        return self._masks

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]
    origin: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class GraphClass:
    is_tree: bool
    is_forest: bool
    is_bipartite: bool
    is_konig_egervary: bool | None
    is_triangle_free: bool
    is_connected: bool
    is_star: bool


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build the graph on vertices ``0..n-1``."""
    if n < 0:
        raise BadVertex(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertex(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if v in nbrs[u]:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, [sorted(s) for s in nbrs])


def degree_sequence(g: Graph) -> DegreeSequence:
    """Ascending degrees; equal degrees keep ascending vertex order."""
    order = sorted(range(g.n), key=lambda v: (len(g.adj[v]), v))
    return DegreeSequence(tuple(len(g.adj[v]) for v in order), tuple(order))


def _check_vertices(g: Graph, s: Iterable[int]) -> list[int]:
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise BadVertex(f"vertex {v} not in graph with n={g.n}")
    return verts


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[s]`` relabelled densely, plus the old-to-new vertex map."""
    verts = _check_vertices(g, s)
    relabel = {v: i for i, v in enumerate(verts)}
    adj = [[relabel[u] for u in g.adj[v] if u in relabel] for v in verts]
    return Graph(len(verts), adj), relabel


def count_edges_within(g: Graph, s: Iterable[int]) -> int:
    mask = _mask_of(s)
    return sum(bin(g.masks[v] & mask).count("1") for v in _iter_mask(mask)) // 2


def _mask_of(s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        mask |= 1 << v
    return mask


def _iter_mask(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(sorted(comp))
    return out


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-colouring (0/1 per vertex), or None if an odd cycle exists.

    Each component's smallest vertex gets colour 0.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_triangle_free(g: Graph) -> bool:
    masks = g.masks
    for u, v in g.edges():
        if masks[u] & masks[v]:
            return False
    return True


def classify(g: Graph, alpha: int | None = None, mu: int | None = None) -> GraphClass:
    """Structural class flags.

    The Konig-Egervary flag is only decided when ``alpha`` is supplied; the
    matching number is computed if not given.
    """
    n, m = g.n, g.m
    n_comp = len(components(g))
    connected = n_comp <= 1 and n >= 1
    forest = m == n - n_comp
    tree = connected and m == n - 1
    star = tree and n >= 2 and max(g.degrees) == n - 1
    bipartite = two_coloring(g) is not None
    ke = None
    if alpha is not None:
        if mu is None:
            from .matching import max_matching

            mu = max_matching(g)[0]
        ke = alpha + mu == n
    return GraphClass(
        is_tree=tree,
        is_forest=forest,
        is_bipartite=bipartite,
        is_konig_egervary=ke,
        is_triangle_free=bipartite or is_triangle_free(g),
        is_connected=connected,
        is_star=star,
    )
