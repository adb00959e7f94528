"""Graph families over Z_n and very-cost-effective bipartitions.

Builds the zero-divisor graph and its nilpotent, non-nilpotent, line, and
total variants; constructs an explicit very-cost-effective bipartition for
each supported modulus shape; and verifies or refutes very-cost-effectiveness
with a checker, an exhaustive search oracle, and obstruction certificates.
"""
from .constructions import (
    Certificate,
    ConstructionId,
    ExhaustedSearch,
    Exists,
    IsolatedVertex,
    NotVce,
    dispatch,
    vce_line_pq,
    vce_nilradical,
    vce_omega_squarefree,
    vce_p2q,
    vce_p2q2,
    vce_squarefree,
    vce_total_pq,
)
from .errors import (
    ConstructionError,
    DomainError,
    FormatError,
    PartitionError,
    ShapeError,
    ZnvceError,
)
from .graphs import (
    EdgePair,
    GraphFamily,
    LabeledGraph,
    Residue,
    TotalEdge,
    TotalOriginal,
    VertexLabel,
    build_family,
    gamma,
    isolated_vertices,
    line_graph,
    nilradical_graph,
    non_nilradical_graph,
    total_graph,
)
from .rings import (
    Factorization,
    ModulusShape,
    ShapeKind,
    classify,
    factorize,
    is_prime,
    nilpotents,
    zero_divisors,
)
from .search import (
    DEFAULT_VERTEX_CAP,
    SearchOutcome,
    SearchStatus,
    brute_force,
    isolated_obstruction,
    local_search,
)
from .serialize import (
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    parse_label,
    partition_from_json,
    partition_to_json,
    render_label,
)
from .vce import (
    Bipartition,
    PartitionVerdict,
    VceReport,
    Verdict,
    VertexTally,
    check_bipartition,
    is_vce,
    tally,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "Certificate",
    "ConstructionError",
    "ConstructionId",
    "DEFAULT_VERTEX_CAP",
    "DomainError",
    "EdgePair",
    "ExhaustedSearch",
    "Exists",
    "Factorization",
    "FormatError",
    "GraphFamily",
    "IsolatedVertex",
    "LabeledGraph",
    "ModulusShape",
    "NotVce",
    "PartitionError",
    "PartitionVerdict",
    "Residue",
    "SearchOutcome",
    "SearchStatus",
    "ShapeError",
    "ShapeKind",
    "TotalEdge",
    "TotalOriginal",
    "VceReport",
    "Verdict",
    "VertexLabel",
    "VertexTally",
    "ZnvceError",
    "brute_force",
    "build_family",
    "check_bipartition",
    "classify",
    "dispatch",
    "factorize",
    "gamma",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "is_prime",
    "is_vce",
    "isolated_obstruction",
    "isolated_vertices",
    "line_graph",
    "local_search",
    "nilpotents",
    "nilradical_graph",
    "non_nilradical_graph",
    "parse_label",
    "partition_from_json",
    "partition_to_json",
    "render_label",
    "tally",
    "total_graph",
    "vce_line_pq",
    "vce_nilradical",
    "vce_omega_squarefree",
    "vce_p2q",
    "vce_p2q2",
    "vce_squarefree",
    "vce_total_pq",
    "zero_divisors",
]
