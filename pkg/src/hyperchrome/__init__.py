"""Hypergraph coloring vs. local edge connectivity: exact chromatic
numbers, criticality, the join/sum/split construction calculus, and
the classifier with replayable join certificates."""

from .hypercore import HgrFormatError, Hypergraph, Relabeled
from .coloring import (
    Coloring,
    CriticalityReport,
    GuardExceeded,
    chromatic_number,
    find_k_coloring,
    is_critical,
)
from .connectivity import (
    Block,
    EdgeCut,
    Hyperpath,
    blocks,
    local_edge_connectivity,
    max_local_edge_connectivity,
)
from .classifier import (
    Certificate,
    ClassifyOutcome,
    Join,
    Leaf,
    classify,
    hk_certificate,
    is_in_Ck,
    jones_classify,
    replay_certificate,
    verify_certificate,
)

__all__ = [
    "HgrFormatError",
    "Hypergraph",
    "Relabeled",
    "Coloring",
    "CriticalityReport",
    "GuardExceeded",
    "chromatic_number",
    "find_k_coloring",
    "is_critical",
    "Block",
    "EdgeCut",
    "Hyperpath",
    "blocks",
    "local_edge_connectivity",
    "max_local_edge_connectivity",
    "Certificate",
    "ClassifyOutcome",
    "Join",
    "Leaf",
    "classify",
    "hk_certificate",
    "is_in_Ck",
    "jones_classify",
    "replay_certificate",
    "verify_certificate",
]
