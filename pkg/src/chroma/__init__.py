"""Chromatic number estimation by repeated non-adjacent vertex contraction.

The heuristic lives in :mod:`chroma.solver`, the exact reference in
:mod:`chroma.oracle`; :mod:`chroma.corpus` generates test graphs and
:mod:`chroma.mine` pits the two against each other on random graphs.
"""

from .corpus import (
    Complete,
    CompleteBipartite,
    Cycle,
    Mycielski,
    Path,
    Petersen,
    Random,
    Star,
    generate,
    known_chromatic,
    parse_family,
)
from .fileio import ParseError, RunReport, parse_dimacs, parse_edge_list, write_dimacs, write_report
from .graph import ContractionError, Graph, GraphError, VertexNotFound, build_graph, is_proper_coloring
from .oracle import (
    Budget,
    BudgetExhausted,
    check_condition1,
    enumerate_chromatic_partitions,
    exact_chromatic_number,
    is_k_colorable,
    max_clique,
    optimal_coloring,
)
from .solver import (
    LEXMAX,
    LEXMIN,
    Coloring,
    TiePolicy,
    coloring_from_provenance,
    contract_color_classes,
    run_operation1,
    select_pair,
)

__version__ = "0.1.0"
