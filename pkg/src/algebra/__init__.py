"""
Algebra kernel - точная линейная алгебра над F2 и F2[t, t^-1].
"""

from .laurent import LaurentPoly, ZERO, ONE, T, ONE_PLUS_T
from .sparse import SparseMatrix
from .gf2 import Gf2Elimination, Gf2ColumnSpan, gf2_gauss, gf2_rank, gf2_row_reduce
from .snf import SnfResult, LaurentColumnSpan, laurent_snf, laurent_kernel_basis
from .linalg import image_membership

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "T",
    "ONE_PLUS_T",
    "SparseMatrix",
    "Gf2Elimination",
    "Gf2ColumnSpan",
    "gf2_gauss",
    "gf2_rank",
    "gf2_row_reduce",
    "SnfResult",
    "LaurentColumnSpan",
    "laurent_snf",
    "laurent_kernel_basis",
    "image_membership",
]
