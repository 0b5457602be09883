"""Annihilation number, independence number and matching number of graphs,
with exact checks of the gap bounds between them."""

from .bounds import (
    BOUND_IDS, BoundId, BoundReport, BoundRow, Status, check_corollaries,
    check_star_annihilation, evaluate_bounds, sqrt_bound_compare,
)
from .decomposition import (
    AnnihilationDecomposition, check_lemma_gap_le_ma, check_lemma_ma_le_mb, decompose,
)
from .errors import (
    AnnihilatorError, BadInput, BadParameter, BadVertex, BudgetExceeded, DuplicateEdge,
    GraphError, IncompleteReport, InvariantViolation, LoopEdge, NotAnnihilating,
    NotBipartite, NotConnected, ParseError, TooLarge, Unsupported,
)
from .formats import parse_edge_list, parse_graph6, read_graphs, write_edge_list, write_graph6
from .graph import DegreeSequence, Graph, GraphClass, build_graph, classify, degree_sequence
from .independence import alpha_bipartite, max_independent_set
from .invariants import (
    InvariantReport, annihilation_number, full_report, is_annihilating,
    is_maximal_annihilating,
)
from .matching import max_matching
from .oracles import oracle_alpha, oracle_mu

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
