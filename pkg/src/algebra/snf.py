"""
Smith normal form над F2[t, t^-1].

Матрица и четыре матрицы преобразований хранятся как numpy-массивы
объектов LaurentPoly. Инвариант после reduce(): left @ A @ right = diag,
left_inverse и right_inverse - обратные к left и right.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .laurent import LaurentPoly, ONE, ZERO
from .sparse import SparseMatrix
from ..errors import DimensionError


def _identity(n: int) -> np.ndarray:
    array = np.empty((n, n), dtype=object)
    array.fill(ZERO)
    for i in range(n):
        array[i, i] = ONE
    return array


def _to_object_array(m: SparseMatrix) -> np.ndarray:
    laurent = m.as_laurent()
    array = np.empty((laurent.rows, laurent.cols), dtype=object)
    array.fill(ZERO)
    for (r, c), value in laurent.entries.items():
        array[r, c] = value
    return array


def _to_sparse(array: np.ndarray) -> SparseMatrix:
    rows, cols = array.shape
    entries = {(r, c): array[r, c] for r in range(rows) for c in range(cols) if array[r, c]}
    return SparseMatrix(rows, cols, entries, "laurent")


@dataclass(frozen=True)
class SnfResult:
    """
    left @ original @ right = diag(invariants, 0, ...).
    invariants нормализованы (младший показатель 0), каждый делит следующий.
    """
    invariants: Tuple[LaurentPoly, ...]
    left: SparseMatrix
    right: SparseMatrix
    left_inverse: SparseMatrix
    right_inverse: SparseMatrix
    shape: Tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.invariants)

    def diagonal(self) -> SparseMatrix:
        rows, cols = self.shape
        return SparseMatrix(rows, cols, {(i, i): d for i, d in enumerate(self.invariants)}, "laurent")

    def torsion(self) -> Tuple[LaurentPoly, ...]:
        """Неединичные инварианты - торсионная часть коядра"""
        return tuple(d for d in self.invariants if not d.is_unit())


class _SmithReducer:
    """Диагонализация с отслеживанием преобразований и их обратных"""

    def __init__(self, matrix: np.ndarray):
        self.a = matrix.copy()
        self.rows, self.cols = self.a.shape
        self.left = _identity(self.rows)
        self.left_inv = _identity(self.rows)
        self.right = _identity(self.cols)
        self.right_inv = _identity(self.cols)

    # ------------------------------------------------------------
    # Элементарные операции
    # ------------------------------------------------------------

    def _swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.a[[i, j]] = self.a[[j, i]]
        self.left[[i, j]] = self.left[[j, i]]
        self.left_inv[:, [i, j]] = self.left_inv[:, [j, i]]

    def _swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        self.a[:, [i, j]] = self.a[:, [j, i]]
        self.right[:, [i, j]] = self.right[:, [j, i]]
        self.right_inv[[i, j]] = self.right_inv[[j, i]]

    def _add_row(self, dst: int, src: int, q: LaurentPoly) -> None:
        """row_dst += q * row_src"""
        self.a[dst] = self.a[dst] + self.a[src] * q
        self.left[dst] = self.left[dst] + self.left[src] * q
        self.left_inv[:, src] = self.left_inv[:, src] + self.left_inv[:, dst] * q

    def _add_col(self, dst: int, src: int, q: LaurentPoly) -> None:
        """col_dst += q * col_src"""
        self.a[:, dst] = self.a[:, dst] + self.a[:, src] * q
        self.right[:, dst] = self.right[:, dst] + self.right[:, src] * q
        self.right_inv[src] = self.right_inv[src] + self.right_inv[dst] * q

    def _scale_row(self, i: int, unit: LaurentPoly) -> None:
        inverse = unit.unit_inverse()
        self.a[i] = self.a[i] * unit
        self.left[i] = self.left[i] * unit
        self.left_inv[:, i] = self.left_inv[:, i] * inverse

    # ------------------------------------------------------------
    # Редукция
    # ------------------------------------------------------------

    def _pick_pivot(self, t: int) -> Optional[Tuple[int, int]]:
        """Минимальная ширина, затем наименьшие (строка, столбец)"""
        best = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                entry = self.a[i, j]
                if entry:
                    key = (entry.width, i, j)
                    if best is None or key < best:
                        best = key
        return None if best is None else (best[1], best[2])

    def _clear(self, t: int) -> bool:
        """Зануляет строку и столбец t; True если остались остатки"""
        pivot = self.a[t, t]
        dirty = False
        for k in range(t + 1, self.rows):
            if self.a[k, t]:
                q = self.a[k, t] // pivot
                if q:
                    self._add_row(k, t, q)
                dirty = dirty or bool(self.a[k, t])
        for k in range(t + 1, self.cols):
            if self.a[t, k]:
                q = self.a[t, k] // pivot
                if q:
                    self._add_col(k, t, q)
                dirty = dirty or bool(self.a[t, k])
        return dirty

    def _non_divisible_row(self, t: int) -> Optional[int]:
        pivot = self.a[t, t]
        for i in range(t + 1, self.rows):
            for j in range(t + 1, self.cols):
                if self.a[i, j] and not pivot.divides(self.a[i, j]):
                    return i
        return None

    def reduce(self) -> List[LaurentPoly]:
        invariants = []
        for t in range(min(self.rows, self.cols)):
            while True:
                position = self._pick_pivot(t)
                if position is None:
                    return invariants
                self._swap_rows(t, position[0])
                self._swap_cols(t, position[1])
                if self._clear(t):
                    continue
                bad_row = self._non_divisible_row(t)
                if bad_row is None:
                    break
                self._add_row(t, bad_row, ONE)
            pivot = self.a[t, t]
            if pivot.low != 0:
                self._scale_row(t, LaurentPoly.monomial(-pivot.low))
            invariants.append(self.a[t, t])
        return invariants


def laurent_snf(m: SparseMatrix) -> SnfResult:
    """Smith normal form матрицы над F2[t, t^-1]"""
    reducer = _SmithReducer(_to_object_array(m))
    invariants = reducer.reduce()
    return SnfResult(
        invariants=tuple(invariants),
        left=_to_sparse(reducer.left),
        right=_to_sparse(reducer.right),
        left_inverse=_to_sparse(reducer.left_inv),
        right_inverse=_to_sparse(reducer.right_inv),
        shape=(m.rows, m.cols),
    )


def laurent_kernel_basis(m: SparseMatrix, snf: Optional[SnfResult] = None) -> List[List[LaurentPoly]]:
    """Базис ядра: столбцы right с номерами >= rank"""
    snf = snf or laurent_snf(m)
    right = snf.right.to_dense()
    return [[right[r][c] for r in range(m.cols)] for c in range(snf.rank, m.cols)]


class LaurentColumnSpan:
    """Подмодуль, порождённый столбцами матрицы над F2[t, t^-1]"""

    def __init__(self, m: SparseMatrix):
        self.matrix = m.as_laurent()
        self.snf = laurent_snf(self.matrix)

    def solve(self, v: Sequence[LaurentPoly]) -> Optional[List[LaurentPoly]]:
        """x с matrix @ x == v, либо None если v вне подмодуля"""
        if len(v) != self.matrix.rows:
            raise DimensionError(f"vector of length {len(v)} for {self.matrix.rows} rows")
        y = self.snf.left.apply(list(v))
        rank = self.snf.rank
        z = [ZERO] * self.matrix.cols
        for i, value in enumerate(y):
            if i < rank:
                quotient, remainder = divmod(value, self.snf.invariants[i])
                if remainder:
                    return None
                z[i] = quotient
            elif value:
                return None
        return self.snf.right.apply(z)

    def contains(self, v: Sequence[LaurentPoly]) -> bool:
        return self.solve(v) is not None
