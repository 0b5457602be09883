"""Constructors for the extremal families and fixed example graphs.

Numbering convention: low-degree vertices first, hubs last.  Each
constructor has a :class:`FamilySpec` with the closed-form invariants the
graph must reproduce; :func:`self_check` compares a full report against it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BadParameter
from .graph import Graph, build_graph
from .invariants import InvariantReport, full_report


class FamilyId(str, enum.Enum):
    STAR = "STAR"
    TREE_MU3 = "TREE_MU3"
    TREE_MU5 = "TREE_MU5"
    SPIDER = "SPIDER"
    BIPARTITE_P = "BIPARTITE_P"
    BIPARTITE_FIXED_16 = "BIPARTITE_FIXED_16"
    BIPARTITE_COUNTEREXAMPLE_32 = "BIPARTITE_COUNTEREXAMPLE_32"
    KE_K = "KE_K"
    KE_COUNTEREXAMPLE_12 = "KE_COUNTEREXAMPLE_12"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FamilySpec:
    family_id: FamilyId
    parameter: int | None
    n: int
    m: int
    alpha: int
    mu: int
    a: int

    @property
    def gap(self) -> int:
        return self.a - self.alpha


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameter(msg)


def make_star(n: int) -> Graph:
    _need(n >= 2, f"star needs n >= 2, got {n}")
    return build_graph(n, [(i, n - 1) for i in range(n - 1)])


def _hub_with_pendant_paths(n: int, paths: int) -> Graph:
    # root leaves, then path ends, then path middles, root last
    root = n - 1
    extra = n - 1 - 2 * paths
    ends = range(extra, extra + paths)
    mids = range(extra + paths, extra + 2 * paths)
    edges = [(i, root) for i in range(extra)]
    edges += [(e, m) for e, m in zip(ends, mids)]
    edges += [(m, root) for m in mids]
    return build_graph(n, edges)


def make_tree_mu3(n: int) -> Graph:
    """Root of degree n-3 with two children extended by a pendant edge."""
    _need(n >= 6, f"mu=3 tree family needs n >= 6, got {n}")
    return _hub_with_pendant_paths(n, 2)


def make_tree_mu5(n: int) -> Graph:
    """Root of degree n-5 with four children extended by a pendant edge."""
    _need(n >= 10, f"mu=5 tree family needs n >= 10, got {n}")
    return _hub_with_pendant_paths(n, 4)


def make_spider(q: int) -> Graph:
    """Root with one leaf and 2q legs of length two; n = 4q + 2."""
    _need(q >= 1, f"spider needs q >= 1, got {q}")
    return _hub_with_pendant_paths(4 * q + 2, 2 * q)


def make_bipartite_p(p: int) -> Graph:
    """Leaves A, middle layer B, and a K_{p-1,p-1} core C; n = 2p^2 - 2.

    A has p^2 - 1 degree-one vertices: the first (p-1)^2 are matched to B,
    the rest to C.  The first 2p - 2 vertices of B are also matched to C.
    """
    _need(p >= 3, f"bipartite family needs p >= 3, got {p}")
    size_a, size_b, size_c = p * p - 1, (p - 1) ** 2, 2 * p - 2
    a0, b0, c0 = 0, size_a, size_a + size_b
    n = size_a + size_b + size_c
    edges = [(a0 + i, b0 + i) for i in range(size_b)]
    edges += [(a0 + size_b + j, c0 + j) for j in range(size_c)]
    edges += [(b0 + j, c0 + j) for j in range(size_c)]
    half = p - 1
    edges += [(c0 + i, c0 + half + j) for i in range(half) for j in range(half)]
    return build_graph(n, edges)


def make_bipartite_fixed_16() -> Graph:
    return make_bipartite_p(3)


def make_bipartite_counterexample_32() -> Graph:
    """A: 16 leaves, B: 8 vertices of degree 2, C = K_{4,4} with degree 6."""
    a0, b0, c0 = 0, 16, 24
    edges = [(a0 + i, b0 + i) for i in range(8)]
    edges += [(a0 + 8 + j, c0 + j) for j in range(8)]
    edges += [(b0 + i, c0 + i) for i in range(8)]
    edges += [(c0 + i, c0 + 4 + j) for i in range(4) for j in range(4)]
    return build_graph(32, edges)


def make_ke_k(k: int) -> Graph:
    """Triangle v1 v2 v3 with k leaves on v1, k on v2 and one on v3."""
    _need(k >= 1, f"KE family needs k >= 1, got {k}")
    n = 2 * k + 4
    v3, v2, v1 = n - 3, n - 2, n - 1
    edges = [(i, v1) for i in range(k)]
    edges += [(k + i, v2) for i in range(k)]
    edges += [(2 * k, v3), (v1, v2), (v2, v3), (v1, v3)]
    return build_graph(n, edges)


# Hand-transcribed; accepted because it reproduces the degree multiset
# 1,2,2,2,3,3,3,3,3,7,7,8 and (alpha, mu, a) = (6, 6, 9).
_KE12_EDGES = [
    (0, 1), (0, 6), (0, 4), (0, 5), (0, 7), (0, 2), (2, 3), (2, 7),
    (7, 5), (4, 6), (6, 1), (4, 5), (6, 7), (7, 9), (9, 6), (6, 8),
    (8, 7), (10, 11), (11, 7), (10, 6), (11, 0), (10, 7),
]


def make_ke_counterexample_12() -> Graph:
    return build_graph(12, _KE12_EDGES)


_SPECS = {
    FamilyId.STAR: lambda n: (n, n - 1, n - 1, 1, n - 1),
    FamilyId.TREE_MU3: lambda n: (n, n - 1, n - 3, 3, n - 2),
    FamilyId.TREE_MU5: lambda n: (n, n - 1, n - 5, 5, n - 3),
    FamilyId.SPIDER: lambda q: (4 * q + 2, 4 * q + 1, 2 * q + 1, 2 * q + 1, 3 * q + 1),
    FamilyId.BIPARTITE_P: lambda p: (2 * p * p - 2, 2 * p * p - 2, p * p - 1, p * p - 1, 2 * p * p - 2 * p),
    FamilyId.BIPARTITE_FIXED_16: lambda _: (16, 16, 8, 8, 12),
    FamilyId.BIPARTITE_COUNTEREXAMPLE_32: lambda _: (32, 40, 16, 16, 25),
    FamilyId.KE_K: lambda k: (2 * k + 4, 2 * k + 4, 2 * k + 1, 3, 2 * k + 2),
    FamilyId.KE_COUNTEREXAMPLE_12: lambda _: (12, 22, 6, 6, 9),
}

_BUILDERS = {
    FamilyId.STAR: make_star,
    FamilyId.TREE_MU3: make_tree_mu3,
    FamilyId.TREE_MU5: make_tree_mu5,
    FamilyId.SPIDER: make_spider,
    FamilyId.BIPARTITE_P: make_bipartite_p,
    FamilyId.BIPARTITE_FIXED_16: lambda _: make_bipartite_fixed_16(),
    FamilyId.BIPARTITE_COUNTEREXAMPLE_32: lambda _: make_bipartite_counterexample_32(),
    FamilyId.KE_K: make_ke_k,
    FamilyId.KE_COUNTEREXAMPLE_12: lambda _: make_ke_counterexample_12(),
}

PARAMETRIC = {FamilyId.STAR, FamilyId.TREE_MU3, FamilyId.TREE_MU5, FamilyId.SPIDER,
              FamilyId.BIPARTITE_P, FamilyId.KE_K}

# smallest legal parameter, used as the default on the command line
MIN_PARAMETER = {
    FamilyId.STAR: 2, FamilyId.TREE_MU3: 6, FamilyId.TREE_MU5: 10,
    FamilyId.SPIDER: 1, FamilyId.BIPARTITE_P: 3, FamilyId.KE_K: 1,
}

# command-line spellings
ALIASES = {
    "star": FamilyId.STAR,
    "tree-mu3": FamilyId.TREE_MU3,
    "tree-mu5": FamilyId.TREE_MU5,
    "spider": FamilyId.SPIDER,
    "bipartite-p": FamilyId.BIPARTITE_P,
    "bipartite-16": FamilyId.BIPARTITE_FIXED_16,
    "bipartite-32": FamilyId.BIPARTITE_COUNTEREXAMPLE_32,
    "ke": FamilyId.KE_K,
    "ke-12": FamilyId.KE_COUNTEREXAMPLE_12,
}


def resolve_family(name: str) -> FamilyId:
    key = name.strip()
    if key.lower() in ALIASES:
        return ALIASES[key.lower()]
    try:
        return FamilyId(key.upper().replace("-", "_"))
    except ValueError:
        raise BadParameter(f"unknown family {name!r}") from None


def family_spec(family: FamilyId | str, parameter: int | None = None) -> FamilySpec:
    fid = family if isinstance(family, FamilyId) else resolve_family(family)
    if fid in PARAMETRIC:
        if parameter is None:
            raise BadParameter(f"{fid} needs a parameter")
    else:
        parameter = None
    build(fid, parameter)  # validates the parameter range
    n, m, alpha, mu, a = _SPECS[fid](parameter)
    return FamilySpec(fid, parameter, n, m, alpha, mu, a)


def build(family: FamilyId | str, parameter: int | None = None) -> Graph:
    fid = family if isinstance(family, FamilyId) else resolve_family(family)
    if fid in PARAMETRIC and parameter is None:
        raise BadParameter(f"{fid} needs a parameter")
    return _BUILDERS[fid](parameter)


def self_check(spec: FamilySpec, report: InvariantReport) -> list[str]:
    """Mismatches between a report and the family's closed forms (empty = ok)."""
    got = {"n": report.n, "m": report.m, "alpha": report.alpha, "mu": report.mu,
           "a": report.annihilation}
    want = {"n": spec.n, "m": spec.m, "alpha": spec.alpha, "mu": spec.mu, "a": spec.a}
    return [f"{k}: expected {want[k]}, got {got[k]}" for k in want if got[k] != want[k]]


def verified(family: FamilyId | str, parameter: int | None = None) -> tuple[Graph, InvariantReport]:
    """Build a family member and raise AssertionError unless it matches its spec."""
    spec = family_spec(family, parameter)
    g = build(spec.family_id, spec.parameter)
    report = full_report(g)
    problems = self_check(spec, report)
    if problems:
        raise AssertionError(f"{spec.family_id}({parameter}): " + "; ".join(problems))
    return g, report


def default_fixtures() -> list[tuple[FamilyId, int | None]]:
    """Every fixed example plus the smallest member of each family."""
    return [
        (FamilyId.STAR, 6),
        (FamilyId.TREE_MU3, 6),
        (FamilyId.TREE_MU5, 10),
        (FamilyId.SPIDER, 2),
        (FamilyId.BIPARTITE_P, 3),
        (FamilyId.BIPARTITE_P, 4),
        (FamilyId.BIPARTITE_FIXED_16, None),
        (FamilyId.BIPARTITE_COUNTEREXAMPLE_32, None),
        (FamilyId.KE_K, 1),
        (FamilyId.KE_K, 2),
        (FamilyId.KE_COUNTEREXAMPLE_12, None),
    ]
