"""Brute-force reference values for alpha and mu.

These share no code with the production solvers and exist to cross-check
them on small graphs.
"""

from __future__ import annotations

from .errors import TooLarge
from .graph import Graph

ORACLE_ALPHA_MAX_N = 24
ORACLE_MU_MAX_M = 120


def oracle_alpha(g: Graph) -> int:
    """alpha by enumerating every independent set."""
    if g.n > ORACLE_ALPHA_MAX_N:
        raise TooLarge(f"oracle_alpha limited to n <= {ORACLE_ALPHA_MAX_N}")
    nbr = [0] * g.n
    for u, v in g.edges():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best = 0
    # stack of (remaining candidates, size so far); candidates are only
    # removed when they conflict with a chosen vertex
    stack = [((1 << g.n) - 1, 0)]
    while stack:
        cand, size = stack.pop()
        if not cand:
            if size > best:
                best = size
            continue
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        stack.append((rest, size))
        stack.append((rest & ~nbr[v], size + 1))
    return best


def oracle_mu(g: Graph) -> int:
    """mu by including or excluding each edge in turn."""
    edges = list(g.edges())
    if len(edges) > ORACLE_MU_MAX_M:
        raise TooLarge(f"oracle_mu limited to m <= {ORACLE_MU_MAX_M}")
    limit = g.n // 2
    best = 0

    def rec(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if best == limit or i == len(edges):
            return
        # no way to beat best with the edges that are left
        if size + (len(edges) - i) <= best:
            return
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            rec(i + 1, used | 1 << u | 1 << v, size + 1)
        rec(i + 1, used, size)

    rec(0, 0, 0)
    return best
