"""
SparseMatrix - разреженная матрица над F2 или над F2[t, t^-1].

Хранит только ненулевые элементы. Для вычислений матрица переводится
в плотный вид: numpy uint8 для F2, списки LaurentPoly для кольца Лорана.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Literal, Sequence, Tuple, Union

import numpy as np

from .laurent import LaurentPoly, ONE, ZERO

Ring = Literal["gf2", "laurent"]
Entry = Union[int, LaurentPoly]


def ring_zero(ring: Ring) -> Entry:
    return 0 if ring == "gf2" else ZERO


def ring_one(ring: Ring) -> Entry:
    return 1 if ring == "gf2" else ONE


def _coerce(value, ring: Ring) -> Entry:
    if ring == "gf2":
        if isinstance(value, LaurentPoly):
            return value.evaluate_at_one()
        return int(value) % 2
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, str):
        return LaurentPoly.parse(value)
    return ONE if int(value) % 2 else ZERO


@dataclass(frozen=True)
class SparseMatrix:
    """rows x cols, entries: (row, col) -> ненулевой элемент кольца"""

    rows: int
    cols: int
    entries: Dict[Tuple[int, int], Entry] = field(default_factory=dict)
    ring: Ring = "gf2"

    def __post_init__(self):
        clean = {}
        for (r, c), value in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            value = _coerce(value, self.ring)
            if value:
                clean[(r, c)] = value
        object.__setattr__(self, "entries", clean)

    # ------------------------------------------------------------
    # Конструкторы
    # ------------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: Ring = "gf2") -> "SparseMatrix":
        return cls(rows, cols, {}, ring)

    @classmethod
    def identity(cls, n: int, ring: Ring = "gf2") -> "SparseMatrix":
        return cls(n, n, {(i, i): ring_one(ring) for i in range(n)}, ring)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ring: Ring = "gf2", cols: int = None) -> "SparseMatrix":
        """Плотные строки -> разреженная матрица; элементы: 0/1, LaurentPoly или строка"""
        n_rows = len(rows)
        n_cols = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {}
        for r, row in enumerate(rows):
            for c, value in enumerate(row):
                entries[(r, c)] = value
        return cls(n_rows, n_cols, entries, ring)

    # ------------------------------------------------------------
    # Доступ и преобразования
    # ------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def get(self, r: int, c: int) -> Entry:
        return self.entries.get((r, c), ring_zero(self.ring))

    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()}, self.ring)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same(other)
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries[key] + value if key in entries else value
        return SparseMatrix(self.rows, self.cols, entries, self.ring)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows or self.ring != other.ring:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        by_row: Dict[int, List[Tuple[int, Entry]]] = {}
        for (r, c), value in other.entries.items():
            by_row.setdefault(r, []).append((c, value))
        result: Dict[Tuple[int, int], Entry] = {}
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                product = a * b
                key = (r, c)
                result[key] = result[key] + product if key in result else product
        return SparseMatrix(self.rows, other.cols, result, self.ring)

    def _check_same(self, other: "SparseMatrix") -> None:
        if self.shape != other.shape or self.ring != other.ring:
            raise ValueError(f"shape/ring mismatch: {self.shape}/{self.ring} vs {other.shape}/{other.ring}")

    def to_dense_gf2(self) -> np.ndarray:
        array = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for (r, c), value in self.entries.items():
            array[r, c] = value if self.ring == "gf2" else value.evaluate_at_one()
        return array

    def to_dense(self) -> List[List[Entry]]:
        zero = ring_zero(self.ring)
        dense = [[zero] * self.cols for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            dense[r][c] = value
        return dense

    def specialize_at_one(self) -> "SparseMatrix":
        """Подстановка t = 1: матрица над F2"""
        if self.ring == "gf2":
            return self
        return SparseMatrix(self.rows, self.cols, dict(self.entries), "gf2")

    def as_laurent(self) -> "SparseMatrix":
        if self.ring == "laurent":
            return self
        return SparseMatrix(self.rows, self.cols, {k: ONE for k in self.entries}, "laurent")

    def apply(self, vector: Sequence[Entry]) -> List[Entry]:
        """Произведение матрицы на плотный вектор"""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.cols} columns")
        out = [ring_zero(self.ring)] * self.rows
        for (r, c), value in self.entries.items():
            if vector[c]:
                out[r] = out[r] + value * vector[c]
        if self.ring == "gf2":
            out = [int(v) % 2 for v in out]
        return out

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "SparseMatrix":
        """Блок на выбранных строках и столбцах (в заданном порядке)"""
        row_pos = {r: k for k, r in enumerate(row_idx)}
        col_pos = {c: k for k, c in enumerate(col_idx)}
        entries = {
            (row_pos[r], col_pos[c]): value
            for (r, c), value in self.entries.items()
            if r in row_pos and c in col_pos
        }
        return SparseMatrix(len(row_idx), len(col_idx), entries, self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.ring == other.ring and self.entries == other.entries

