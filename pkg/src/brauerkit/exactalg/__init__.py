"""Exact scalar rings and exact linear algebra."""

from .scalars import (
    GF,
    QQ,
    QQ_DELTA,
    DeltaPoly,
    Mod,
    Ring,
    RingMismatchError,
    Scalar,
    UnspecializedDeltaError,
    format_scalar,
    is_prime,
    parse_delta_poly,
)
from .linalg import (
    Matrix,
    Subspace,
    bareiss_rank,
    infer_ring,
    kernel_from_rref,
    mat_rank,
    null_space,
    rref_sparse,
    subspace_equal,
)

__all__ = [
    "GF", "QQ", "QQ_DELTA", "DeltaPoly", "Mod", "Ring", "RingMismatchError",
    "Scalar", "UnspecializedDeltaError", "format_scalar", "is_prime",
    "parse_delta_poly", "Matrix", "Subspace", "bareiss_rank", "infer_ring",
    "kernel_from_rref", "mat_rank", "null_space", "rref_sparse", "subspace_equal",
]
