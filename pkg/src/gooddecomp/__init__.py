"""Good decompositions (spanning tree + matching + 2-regular subgraph) of subcubic graphs."""

from .clawfree import CaseTrace, decompose_auto, decompose_clawfree
from .decomposition import Decomposition, VerificationReport, parse_decomposition, serialize, verify
from .exact import OutcomeKind, SearchLimits, SearchOutcome, count_good_decompositions, find_good_decomposition
from .graph import Graph, from_edge_list, parse_graph6, to_dot, write_graph6

__all__ = [
    "CaseTrace",
    "Decomposition",
    "Graph",
    "OutcomeKind",
    "SearchLimits",
    "SearchOutcome",
    "VerificationReport",
    "count_good_decompositions",
    "decompose_auto",
    "decompose_clawfree",
    "find_good_decomposition",
    "from_edge_list",
    "parse_decomposition",
    "parse_graph6",
    "serialize",
    "to_dot",
    "verify",
    "write_graph6",
]
