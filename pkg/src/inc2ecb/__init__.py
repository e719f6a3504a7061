"""Incremental 2-edge-connected blocks of directed graphs."""

from .auxiliary import AuxiliaryGraph, Label, build_auxiliary_graphs, label_of, nearest_ancestor_in
from .blocks import (
    Metrics,
    ScBlockState,
    TwoEcIndex,
    blocks_snapshot,
    initialize_component,
    sc_insert_edge,
    static_blocks,
    update_ac,
)
from .dominator import DominatorState, InsertionReport, compute_dominator_state
from .graph import Digraph, ReverseView, from_edges, new_graph
from .incscc import IncScc, MergeReport
from .query import Witness, are_two_edge_connected, report_blocks, separating_edge

__all__ = [
    "AuxiliaryGraph", "Label", "build_auxiliary_graphs", "label_of", "nearest_ancestor_in",
    "Metrics", "ScBlockState", "TwoEcIndex", "blocks_snapshot", "initialize_component",
    "sc_insert_edge", "static_blocks", "update_ac",
    "DominatorState", "InsertionReport", "compute_dominator_state",
    "Digraph", "ReverseView", "from_edges", "new_graph",
    "IncScc", "MergeReport",
    "Witness", "are_two_edge_connected", "report_blocks", "separating_edge",
]
