"""
GF(2) elimination - ранг, ядро, образ и решение систем над F2.

Плотная редукция на numpy uint8 со строковыми XOR; матрица-преобразование
ведётся параллельно (T @ A = RREF), чтобы отвечать на запросы принадлежности
образу без повторной редукции.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .sparse import SparseMatrix
from ..errors import DimensionError

MatrixLike = Union[SparseMatrix, np.ndarray]


def _as_array(m: MatrixLike) -> np.ndarray:
    if isinstance(m, SparseMatrix):
        return m.to_dense_gf2()
    array = np.asarray(m, dtype=np.uint8)
    if array.ndim != 2:
        raise DimensionError(f"expected 2-d matrix, got shape {array.shape}")
    return array % 2


def gf2_row_reduce(a: MatrixLike) -> Tuple[np.ndarray, np.ndarray, List[int]]:
    """
    Приведение к ступенчатому виду (RREF).

    Returns:
        (rref, transform, pivots): transform @ a == rref по модулю 2,
        pivots - столбцы ведущих элементов по порядку строк
    """
    work = _as_array(a).copy()
    n_rows, n_cols = work.shape
    transform = np.eye(n_rows, dtype=np.uint8)
    pivots: List[int] = []
    r = 0
    for j in range(n_cols):
        if r == n_rows:
            break
        candidates = np.nonzero(work[r:, j])[0]
        if candidates.size == 0:
            continue
        i = r + int(candidates[0])
        if i != r:
            work[[r, i]] = work[[i, r]]
            transform[[r, i]] = transform[[i, r]]
        for k in np.nonzero(work[:, j])[0]:
            if k != r:
                work[k] ^= work[r]
                transform[k] ^= transform[r]
        pivots.append(j)
        r += 1
    return work, transform, pivots


@dataclass(frozen=True)
class Gf2Elimination:
    """Результат gf2_gauss"""
    rank: int
    kernel_basis: Tuple[np.ndarray, ...]
    image_basis: Tuple[np.ndarray, ...]
    pivots: Tuple[int, ...]

    @property
    def nullity(self) -> int:
        return len(self.kernel_basis)


def gf2_gauss(m: MatrixLike) -> Gf2Elimination:
    """Ранг, базис ядра и базис образа (столбцы исходной матрицы)"""
    array = _as_array(m)
    n_rows, n_cols = array.shape
    rref, _, pivots = gf2_row_reduce(array)
    pivot_set = set(pivots)

    kernel = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vector = np.zeros(n_cols, dtype=np.uint8)
        vector[free] = 1
        for row, col in enumerate(pivots):
            vector[col] = rref[row, free]
        kernel.append(vector)

    image = tuple(array[:, col].copy() for col in pivots)
    return Gf2Elimination(
        rank=len(pivots),
        kernel_basis=tuple(kernel),
        image_basis=image,
        pivots=tuple(pivots),
    )


def gf2_rank(m: MatrixLike) -> int:
    array = _as_array(m)
    if array.size == 0:
        return 0
    return len(gf2_row_reduce(array)[2])


class Gf2ColumnSpan:
    """
    Пространство столбцов матрицы над F2 с быстрыми запросами
    принадлежности: одна редукция, много векторов.
    """

    def __init__(self, m: MatrixLike):
        self.matrix = _as_array(m)
        self.rows, self.cols = self.matrix.shape
        self._rref, self._transform, self._pivots = gf2_row_reduce(self.matrix)
        self.rank = len(self._pivots)

    def solve(self, v: Sequence[int]) -> Optional[np.ndarray]:
        """x с matrix @ x == v, либо None если v вне образа"""
        vector = np.asarray(v, dtype=np.uint8) % 2
        if vector.shape != (self.rows,):
            raise DimensionError(f"vector of length {vector.size} for {self.rows} rows")
        reduced = (self._transform.astype(np.int64) @ vector) % 2
        if reduced[self.rank:].any():
            return None
        solution = np.zeros(self.cols, dtype=np.uint8)
        for row, col in enumerate(self._pivots):
            solution[col] = reduced[row]
        return solution

    def contains(self, v: Sequence[int]) -> bool:
        return self.solve(v) is not None
