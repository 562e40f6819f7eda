"""Resistance distances and Kirchhoff indices of edge-replacement transforms.

The quadrilateral transform turns every edge into a 4-cycle, the pentagonal
one into a 5-cycle.  A structured block {1}-inverse of the transformed
Laplacian is assembled from factor-graph data alone (one group inverse plus
one small LU solve), and an independent brute-force oracle checks it.
"""

from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    IncidenceSplit,
    adjacency_matrix,
    graph_from_edges,
    incidence_split,
    is_connected,
    laplacian,
    parse_edge_list,
    render_edge_list,
)
from .linalg import (
    BlockOneInverse,
    SingularMatrixError,
    all_ones_sum,
    block_one_inverse,
    group_inverse_laplacian,
    invert,
    quadratic_form,
    trace,
)
from .oracle import oracle_kirchhoff, oracle_resistance_matrix
from .structured import (
    StructuredOneInverse,
    build_structured_inverse,
    kirchhoff,
    resistance,
    resistance_matrix,
)
from .transforms import (
    TransformKind,
    VertexClass,
    VertexRole,
    apply_transform,
    classify,
    flat_id,
    original,
    path1,
    path2,
    path3,
    pentagonal,
    quadrilateral,
)
from .verify import (
    AuditClause,
    AuditReport,
    ClauseDomain,
    DiscrepancyReport,
    GenerationBudgetError,
    SplitMix64,
    audit_theorems,
    compare,
    random_connected_graph,
    run_corpus,
)

__all__ = [
    "AuditClause",
    "AuditReport",
    "BlockOneInverse",
    "ClauseDomain",
    "DisconnectedGraphError",
    "DiscrepancyReport",
    "GenerationBudgetError",
    "Graph",
    "GraphError",
    "IncidenceSplit",
    "SingularMatrixError",
    "SplitMix64",
    "StructuredOneInverse",
    "TransformKind",
    "VertexClass",
    "VertexRole",
    "adjacency_matrix",
    "all_ones_sum",
    "apply_transform",
    "audit_theorems",
    "block_one_inverse",
    "build_structured_inverse",
    "classify",
    "compare",
    "flat_id",
    "graph_from_edges",
    "group_inverse_laplacian",
    "incidence_split",
    "invert",
    "is_connected",
    "kirchhoff",
    "laplacian",
    "oracle_kirchhoff",
    "oracle_resistance_matrix",
    "original",
    "parse_edge_list",
    "path1",
    "path2",
    "path3",
    "pentagonal",
    "quadratic_form",
    "quadrilateral",
    "random_connected_graph",
    "render_edge_list",
    "resistance",
    "resistance_matrix",
    "run_corpus",
    "trace",
]

__version__ = "0.1.0"
