"""
image_membership - принадлежность вектора образу матрицы над F2 или F2[t, t^-1].
Используется при поиске башен: лежит ли класс U^k z в образе границы.
"""

from typing import List, Optional, Sequence

import numpy as np

from .gf2 import Gf2ColumnSpan
from .laurent import LaurentPoly, ZERO
from .snf import LaurentColumnSpan
from .sparse import Entry, SparseMatrix
from ..errors import DimensionError


def image_membership(m: SparseMatrix, v: Sequence[Entry]) -> Optional[List[Entry]]:
    """
    Ищет x с m @ x == v.

    Returns:
        Коэффициенты x (int для F2, LaurentPoly для кольца Лорана)
        или None, если v не лежит в образе.
    """
    if len(v) != m.rows:
        raise DimensionError(f"vector of length {len(v)} does not match {m.rows} rows")
    if m.ring == "gf2":
        solution = Gf2ColumnSpan(m).solve(np.asarray([int(x) % 2 for x in v], dtype=np.uint8))
        return None if solution is None else [int(x) for x in solution]
    vector = [x if isinstance(x, LaurentPoly) else (LaurentPoly.monomial(0) if int(x) % 2 else ZERO) for x in v]
    return LaurentColumnSpan(m).solve(vector)
