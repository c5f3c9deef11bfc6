"""Star graph toolkit: decompositions, k-super cuts, and exact search oracles.

Verifies, constructively and by exhaustive search at small sizes, that the
minimum number of vertices (or edges) whose removal disconnects the
n-dimensional star graph while keeping every surviving degree at least k
is (k+1)!(n-k-1).
"""

from .core import (
    AUTO_MATERIALIZE_MAX_N,
    CapacityError,
    InputError,
    InvariantViolationError,
    MATERIALIZED_MAX_N,
    StarGraph,
    build_star_graph,
    components,
    edge_boundary,
    format_perm,
    induced_edges,
    induced_min_degree,
    min_degree,
    neighborhood,
    parse_perm,
    perm_rank,
    perm_unrank,
    star_neighbors,
    validate_perm,
)
from .cuts import (
    CutConstruction,
    CutVerdict,
    SymbolProfile,
    UniqueNeighborReport,
    cut_size_formula,
    is_k_edge_cut,
    is_k_vertex_cut,
    sample_connected_subgraph,
    sample_min_degree_subgraphs,
    substar_iso_ok,
    substar_isolating_cut,
    symbol_profile,
    unique_neighbor_report,
    verify_witness_exhaustive,
    witness_position,
)
from .decomposition import (
    DimensionPartition,
    DimensionPartitionReport,
    SymbolPartition,
    SymbolPartitionReport,
    cross_edges,
    partition_by_dimension,
    partition_by_symbol,
    relabel_to_smaller_star,
    shrink_perm,
    validate_dimension_partition,
    validate_symbol_partition,
)
from .oracle import (
    FormulaRow,
    OracleResult,
    SearchBudget,
    SearchStats,
    classical_connectivity,
    compare_formula,
    exact_kappa_super,
    exact_lambda_super,
)

__version__ = "0.1.0"
