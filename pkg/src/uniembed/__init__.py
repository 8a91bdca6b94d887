"""Uniform threshold embeddings for Robinson similarity matrices.

Given a symmetric matrix with integer similarity levels 0..k that increase
towards the diagonal, find positions on the line and threshold distances
d_1 > ... > d_k > 0 such that a pair has level t exactly when its gap lies
strictly between d_{t+1} and d_t, or produce one or two cycles whose
distance bounds are jointly contradictory. All arithmetic is exact.
"""

from .bounds import (
    LOWER, UPPER, Bound, BoundWalk, chain_id, edge_lower_bound,
    edge_upper_bound, precedes, reverse_walk, walk_bound,
)
from .embedding import (
    Embedding, Violation, construct_embedding, expand_embedding,
    verify_embedding,
)
from .errors import (
    EmbeddingGapError, IllegalWalkError, InternalVerificationError,
    MatrixError, MatrixInvariantError, MatrixSyntaxError, SizeGuardError,
    ThresholdOrderError, UniembedError,
)
from .feasibility import (
    InfeasibilityCertificate, RatioInterval, Thresholds, ratio_interval,
    solve_general_k, solve_ratio_k2,
)
from .matrix import (
    RobinsonMatrix, RowReduction, level_graph, parse_matrix,
    reduce_repeated_rows, validate_robinson,
)
from .pathgen import (
    BoundTable, CycleRecord, TableEntry, extract_cycles,
    generate_bound_tables, minimal_insert,
)
from .solver import SolveResult, check_certificate, solve

__version__ = "0.1.0"

__all__ = [
    "Bound", "BoundTable", "BoundWalk", "CycleRecord", "Embedding",
    "EmbeddingGapError", "IllegalWalkError", "InfeasibilityCertificate",
    "InternalVerificationError", "LOWER", "MatrixError",
    "MatrixInvariantError", "MatrixSyntaxError", "RatioInterval",
    "RobinsonMatrix", "RowReduction", "SizeGuardError", "SolveResult",
    "TableEntry", "ThresholdOrderError", "Thresholds", "UniembedError",
    "UPPER", "Violation", "chain_id", "check_certificate",
    "construct_embedding", "edge_lower_bound", "edge_upper_bound",
    "expand_embedding", "extract_cycles", "generate_bound_tables",
    "level_graph", "minimal_insert", "parse_matrix", "precedes",
    "ratio_interval", "reduce_repeated_rows", "reverse_walk", "solve",
    "solve_general_k", "solve_ratio_k2", "validate_robinson",
    "verify_embedding", "walk_bound",
]
