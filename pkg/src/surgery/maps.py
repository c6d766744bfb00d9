"""
Maps v_s, h_s: A_s^+ -> B^+.

v - проекция на C{i >= 0}; h - проекция на C{j >= s}, затем U^s и
флип Φ(x) = U^{-A(x)} σ(x), который меняет координаты (i, j) местами.
"""

from functools import lru_cache
from typing import Tuple

from ..algebra import SparseMatrix
from ..cfk import CfkComplex
from .truncated import build_A_plus, build_B_plus


@lru_cache(maxsize=256)
def maps_v_h(c: CfkComplex, s: int, N: int) -> Tuple[SparseMatrix, SparseMatrix]:
    """
    Returns:
        (v, h) - матрицы над F2 размера |B^+| x |A_s^+|.
        v сохраняет градуировку, h понижает её на 2s.
    """
    a_part = build_A_plus(c, s, N)
    b_part = build_B_plus(c, N)
    sigma = c.sigma

    v_entries = {}
    h_entries = {}
    for col, (gid, i) in enumerate(a_part.basis):
        if i >= 0:
            row = b_part.index_of(gid, i)
            if row is not None:
                v_entries[(row, col)] = 1
        j = i + c.generator(gid).alexander
        if j >= s:
            row = b_part.index_of(sigma[gid], j - s)
            if row is not None:
                h_entries[(row, col)] = 1

    v = SparseMatrix(b_part.size, a_part.size, v_entries, "gf2")
    h = SparseMatrix(b_part.size, a_part.size, h_entries, "gf2")
    return v, h
