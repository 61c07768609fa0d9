"""Berge-cycle analysis for r-uniform hypergraphs.

Exact circumference and codiameter search, incidence-graph connectivity,
local-improvement cycle growing, sharpness-family generators and desk-scale
verification campaigns.
"""

from .connectivity import (ConnectivityWitness, Graph, is_k_connected,
                           is_two_connected, vertex_connectivity)
from .constructions import (FAMILIES, bounded_core, complete_runiform,
                            shared_pair_cliques, two_hub_blocks)
from .errors import (BadParams, BergeError, BudgetExhausted, DuplicateEdge,
                     InvalidLollipop, NoCycle, NonUniformEdge,
                     NotTwoConnected, ParseError, VertexOutOfRange)
from .harness import (CampaignSpec, VerificationReport, emit_report,
                      load_certificate, run_campaign, sample_instance,
                      verify_codiameter, verify_proposition, verify_sharpness,
                      verify_theorem)
from .hypergraph import (Hypergraph, IncidenceGraph, build, from_document,
                         from_text, load, save)
from .lollipop import (Lollipop, aligned_disjoint_paths, check_lollipop,
                       equality_condition_holds, grow_long_cycle,
                       independent_set_bound, independent_sets_on_path,
                       long_segment, improve, reduced_edge_sets, score)
from .search import (BergeCycle, BergePath, PartialBergePath, circumference,
                     codiameter, longest_berge_cycle,
                     longest_berge_path_between, validate_cycle,
                     validate_path)

__version__ = "0.1.0"

__all__ = [
    "BadParams", "BergeCycle", "BergeError", "BergePath", "BudgetExhausted",
    "CampaignSpec", "ConnectivityWitness", "DuplicateEdge", "FAMILIES",
    "Graph", "Hypergraph", "IncidenceGraph", "InvalidLollipop", "Lollipop",
    "NoCycle", "NonUniformEdge", "NotTwoConnected", "ParseError",
    "PartialBergePath", "VerificationReport", "VertexOutOfRange",
    "aligned_disjoint_paths", "bounded_core", "build", "check_lollipop",
    "circumference", "codiameter", "complete_runiform", "emit_report",
    "equality_condition_holds", "from_document", "from_text",
    "grow_long_cycle", "improve", "independent_set_bound",
    "independent_sets_on_path", "is_k_connected", "is_two_connected",
    "load", "load_certificate", "long_segment", "longest_berge_cycle",
    "longest_berge_path_between", "reduced_edge_sets", "run_campaign",
    "sample_instance", "save", "score", "shared_pair_cliques",
    "two_hub_blocks", "validate_cycle", "validate_path",
    "verify_codiameter", "verify_proposition", "verify_sharpness",
    "verify_theorem", "vertex_connectivity",
]
