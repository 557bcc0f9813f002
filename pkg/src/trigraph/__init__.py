"""Triangle graphs: construction, transforms, classification, and packing bounds."""

from trigraph.graph import (
    Graph,
    Triangle,
    IsoCertificate,
    enumerate_triangles,
    contains_subgraph,
    canonical_form,
    canonical_graph,
    is_isomorphic,
    find_induced_cycle,
    find_hole,
    open_neighborhood,
    is_path_graph,
    is_cycle_graph,
)
from trigraph.tgraph import (
    TriangleFreeError,
    TriangleGraph,
    build_triangle_graph,
    DesignatedCycle,
    check_designated_cycle,
    find_designated_cycle,
    EdgeCoverage,
    classify_edge_coverage,
    cycle_triangle_neighborhood,
    is_triangle_connected,
    HairyCycle,
    hairy_cycle_structure,
)
from trigraph.transforms import (
    WEAK,
    STRONG,
    STRICT,
    TransformError,
    TransformStep,
    TransformLog,
    TransformResult,
    edge_split,
    vertex_stick,
    inverse_edge_split,
    inverse_vertex_stick,
    apply_step,
    replay,
    reduce_to_irreducible,
    reorder_log,
)
from trigraph.generators import (
    empty_graph,
    complete,
    path,
    cycle,
    wheel,
    cycle_power,
    complete_minus,
    supplementary,
    join,
    triangle_graph_forbidden_pattern,
    make_named,
    enumerate_induced_cycles,
    FamilyMember,
    ForbiddenFamily,
    forbidden_family,
    perfect_forbidden_family,
    enumerate_small_graphs,
)
from trigraph.classify import (
    RouteDisagreement,
    theorem_hypothesis_violation,
    tgraph_is_cycle_direct,
    CycleCertificate,
    characterize_cycle,
    PathNeighborhoodReport,
    classify_png_cycle,
    CnFreeReport,
    tgraph_cn_free,
    DualVerdict,
    ClassReport,
    tgraph_pattern_free,
    tgraph_class,
)
from trigraph.packing import (
    BoundViolation,
    TypedClique,
    nu_delta,
    tau_delta,
    k4_subgraphs,
    typed_cliques,
    maximal_cliques,
    typed_cliques_complete,
    theta_tgraph,
    transversal_from_cover,
    TuzaReport,
    tuza_report,
)
from trigraph.formats import (
    ParseError,
    parse_edge_list,
    emit_edge_list,
    parse_graph6,
    emit_graph6,
    parse_graph6_file,
    tgraph_to_dot,
)
from trigraph.survey import (
    ALL_CHECKS,
    naive_alpha,
    check_graph,
    SurveyReport,
    run_survey,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Triangle",
    "IsoCertificate",
    "enumerate_triangles",
    "contains_subgraph",
    "canonical_form",
    "canonical_graph",
    "is_isomorphic",
    "find_induced_cycle",
    "find_hole",
    "open_neighborhood",
    "is_path_graph",
    "is_cycle_graph",
    "TriangleFreeError",
    "TriangleGraph",
    "build_triangle_graph",
    "DesignatedCycle",
    "check_designated_cycle",
    "find_designated_cycle",
    "EdgeCoverage",
    "classify_edge_coverage",
    "cycle_triangle_neighborhood",
    "is_triangle_connected",
    "HairyCycle",
    "hairy_cycle_structure",
    "WEAK",
    "STRONG",
    "STRICT",
    "TransformError",
    "TransformStep",
    "TransformLog",
    "TransformResult",
    "edge_split",
    "vertex_stick",
    "inverse_edge_split",
    "inverse_vertex_stick",
    "apply_step",
    "replay",
    "reduce_to_irreducible",
    "reorder_log",
    "empty_graph",
    "complete",
    "path",
    "cycle",
    "wheel",
    "cycle_power",
    "complete_minus",
    "supplementary",
    "join",
    "triangle_graph_forbidden_pattern",
    "make_named",
    "enumerate_induced_cycles",
    "FamilyMember",
    "ForbiddenFamily",
    "forbidden_family",
    "perfect_forbidden_family",
    "enumerate_small_graphs",
    "RouteDisagreement",
    "theorem_hypothesis_violation",
    "tgraph_is_cycle_direct",
    "CycleCertificate",
    "characterize_cycle",
    "PathNeighborhoodReport",
    "classify_png_cycle",
    "CnFreeReport",
    "tgraph_cn_free",
    "DualVerdict",
    "ClassReport",
    "tgraph_pattern_free",
    "tgraph_class",
    "BoundViolation",
    "TypedClique",
    "nu_delta",
    "tau_delta",
    "k4_subgraphs",
    "typed_cliques",
    "maximal_cliques",
    "typed_cliques_complete",
    "theta_tgraph",
    "transversal_from_cover",
    "TuzaReport",
    "tuza_report",
    "ParseError",
    "parse_edge_list",
    "emit_edge_list",
    "parse_graph6",
    "emit_graph6",
    "parse_graph6_file",
    "tgraph_to_dot",
    "ALL_CHECKS",
    "naive_alpha",
    "check_graph",
    "SurveyReport",
    "run_survey",
]
