"""Exact Laplacian-spectrum toolkit for linear octagonal-quadrilateral networks L_n."""

from .closed_forms import b4n, complexity, det_LS, kf_path, kirchhoff, partial_sums
from .decomposition import char_poly, path_eigenvalues, split, transform_check, verify_factorization
from .graph import block_partition, build_chain, laplacian
from .quadfield import A, B, QuadNumber

__all__ = [
    "A",
    "B",
    "QuadNumber",
    "b4n",
    "block_partition",
    "build_chain",
    "char_poly",
    "complexity",
    "det_LS",
    "kf_path",
    "kirchhoff",
    "laplacian",
    "partial_sums",
    "path_eigenvalues",
    "split",
    "transform_check",
    "verify_factorization",
]
