"""Extremal graph constructions and exact small-order verification.

The package centers on forbidden families of disjoint pattern unions: it
builds candidate extremal graphs, evaluates closed-form edge-count formulas,
and checks both against an exhaustive isomorph-free oracle at small orders,
plus structural diagnostics (dominating cliques, partition stability).
"""

from .canonical import certificate, is_isomorphic
from .coloring import CriticalityReport, chromatic_number, criticality, is_k_colorable
from .constructions import (
    ConstructionRecipe,
    FormulaValue,
    InfeasibleConstructionError,
    ProperOrderReport,
    UnionWheelsValue,
    best_feasible_wheel_graph,
    build_from_recipe,
    check_properly_ordered,
    is_path_free_regular,
    path_free_regular_graph,
    union_extremal_graph,
    union_extremal_value,
    union_wheels_value,
    wheel_construction_recipe,
    wheel_extremal_graph,
    wheel_extremal_value,
)
from .containment import (
    Embedding,
    ForbiddenFamily,
    contains_disjoint_family,
    contains_disjoint_family_through,
    contains_subgraph,
    embedding_is_valid,
    is_free,
)
from .graph6 import (
    Graph6ParseError,
    decode_graph6,
    encode_graph6,
    read_graph6_lines,
    write_graph6_lines,
)
from .graphs import (
    SimpleGraph,
    StandardKind,
    build_standard,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty_graph,
    join,
    path,
    turan,
    turan_edge_count,
    wheel,
)
from .oracle import (
    BudgetExceededError,
    ExtremalResult,
    MaximalityReport,
    SearchBudget,
    ThresholdReport,
    ThresholdRow,
    brute_force_ex,
    labeled_filter_ex,
    maximality_audit,
    threshold_scan,
)
from .stability import (
    PartitionDiagnostics,
    StructureAudit,
    dominating_clique,
    is_vertex_move_optimal,
    min_degree_audit,
    min_internal_partition,
    structure_audit,
    w_set,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ConstructionRecipe",
    "CriticalityReport",
    "Embedding",
    "ExtremalResult",
    "ForbiddenFamily",
    "FormulaValue",
    "Graph6ParseError",
    "InfeasibleConstructionError",
    "MaximalityReport",
    "PartitionDiagnostics",
    "ProperOrderReport",
    "SearchBudget",
    "SimpleGraph",
    "StandardKind",
    "StructureAudit",
    "ThresholdReport",
    "ThresholdRow",
    "UnionWheelsValue",
    "best_feasible_wheel_graph",
    "brute_force_ex",
    "build_from_recipe",
    "build_standard",
    "certificate",
    "check_properly_ordered",
    "chromatic_number",
    "complete",
    "complete_multipartite",
    "contains_disjoint_family",
    "contains_disjoint_family_through",
    "contains_subgraph",
    "criticality",
    "cycle",
    "decode_graph6",
    "disjoint_union",
    "dominating_clique",
    "embedding_is_valid",
    "empty_graph",
    "encode_graph6",
    "is_free",
    "is_isomorphic",
    "is_k_colorable",
    "is_path_free_regular",
    "is_vertex_move_optimal",
    "join",
    "labeled_filter_ex",
    "maximality_audit",
    "min_degree_audit",
    "min_internal_partition",
    "path",
    "path_free_regular_graph",
    "read_graph6_lines",
    "structure_audit",
    "threshold_scan",
    "turan",
    "turan_edge_count",
    "union_extremal_graph",
    "union_extremal_value",
    "union_wheels_value",
    "w_set",
    "wheel",
    "wheel_construction_recipe",
    "wheel_extremal_graph",
    "wheel_extremal_value",
    "write_graph6_lines",
]
