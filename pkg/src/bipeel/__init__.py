"""bipeel: butterfly-based dense subgraph discovery in bipartite graphs.

Count butterflies (2,2-bicliques), peel them into tip and wing
decompositions with their nucleus hierarchies, and compare against the
classic projection-based baselines (k-core, fractional k-core, triangle
nucleus), all behind both a functional API and sklearn-style estimators.
"""

from .baselines import (
    CoreResult,
    NucleusEdgeResult,
    core_decompose,
    core_hierarchy,
    fractional_core_decompose,
    fractional_core_hierarchy,
    induced_bipartite_profile,
    nucleus23_decompose,
    nucleus23_hierarchy,
    triangle_supports,
)
from .butterflies import (
    ButterflyCounts,
    butterflies_of_edge,
    butterflies_of_vertex,
    count_per_edge,
    count_per_vertex,
    count_total,
)
from .datasets import REGISTRY, fetch_dataset
from .errors import (
    BipeelError,
    ChecksumMismatchError,
    DatasetError,
    DownloadError,
    EdgeListParseError,
    EmptyGraphError,
    ProjectionSizeError,
)
from .estimators import (
    BipartiteProjector,
    ButterflyCounter,
    CoreDecomposition,
    FractionalCoreDecomposition,
    TipDecomposition,
    TriangleNucleusDecomposition,
    WingDecomposition,
)
from .graph import (
    BipartiteGraph,
    LoadStats,
    SubgraphProfile,
    induced_profile,
    induced_subgraph,
    load_bipartite,
    write_edge_list,
    write_label_map,
)
from .hierarchy import (
    NucleusNode,
    NucleusTree,
    UnionFind,
    build_hierarchy,
    extract_k_tips,
    extract_k_wings,
    subgraph_profiles,
)
from .projection import ProjectedGraph, project_unweighted, project_weighted
from .tip import TipResult, tip_decompose
from .validation import check_bipartite_graph, check_counts, check_projected_graph
from .wing import WingResult, k_wing_edge_sets, wing_decompose

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "BipartiteProjector",
    "BipeelError",
    "ButterflyCounter",
    "ButterflyCounts",
    "ChecksumMismatchError",
    "CoreDecomposition",
    "CoreResult",
    "DatasetError",
    "DownloadError",
    "EdgeListParseError",
    "EmptyGraphError",
    "FractionalCoreDecomposition",
    "LoadStats",
    "NucleusEdgeResult",
    "NucleusNode",
    "NucleusTree",
    "ProjectedGraph",
    "ProjectionSizeError",
    "REGISTRY",
    "SubgraphProfile",
    "TipDecomposition",
    "TipResult",
    "TriangleNucleusDecomposition",
    "UnionFind",
    "WingDecomposition",
    "WingResult",
    "build_hierarchy",
    "butterflies_of_edge",
    "butterflies_of_vertex",
    "check_bipartite_graph",
    "check_counts",
    "check_projected_graph",
    "core_decompose",
    "core_hierarchy",
    "count_per_edge",
    "count_per_vertex",
    "count_total",
    "extract_k_tips",
    "extract_k_wings",
    "fetch_dataset",
    "fractional_core_decompose",
    "fractional_core_hierarchy",
    "induced_bipartite_profile",
    "induced_profile",
    "induced_subgraph",
    "k_wing_edge_sets",
    "load_bipartite",
    "nucleus23_decompose",
    "nucleus23_hierarchy",
    "project_unweighted",
    "project_weighted",
    "subgraph_profiles",
    "tip_decompose",
    "triangle_supports",
    "wing_decompose",
    "write_edge_list",
    "write_label_map",
]
