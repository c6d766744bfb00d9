"""
Truncated complexes A_s^+ и B^+ - конечномерные факторкомплексы CFK∞.

Элемент базиса (x, i) означает U^{-i}x в позиции (i, i + A(x)).
A_s^+ = C{max(i, j - s) >= 0}, B^+ = C{i >= 0}; оба обрезаны сверху
уровнем N, так что каждый генератор даёт ровно N + 1 элементов.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from ..algebra import SparseMatrix
from ..cfk import CfkComplex
from ..errors import TruncationError
from ..logger import trace

Basis = Tuple[Tuple[str, int], ...]


def safe_floor(c: CfkComplex, s: int = 0) -> int:
    """Минимально допустимый уровень усечения"""
    return 2 * (c.genus_bound + c.max_upower + abs(s)) + 4


def auto_truncation(c: CfkComplex) -> int:
    """Уровень по умолчанию: безопасный порог плюс разброс градуировок Маслова"""
    low, high = c.maslov_range
    return safe_floor(c) + 2 * math.ceil(high - low)


def check_truncation(c: CfkComplex, N: int, s: int = 0) -> None:
    floor = safe_floor(c, s)
    if N < floor:
        raise TruncationError(f"truncation N={N} is below the safe floor {floor} for {c.name} (s={s})")


def a_region(alexander: int, s: int, N: int) -> Tuple[int, int]:
    """Диапазон i для A_s^+: max(i, i + A - s) = i + m, m = max(0, A - s)"""
    m = max(0, alexander - s)
    return -m, N - m


def b_region(N: int) -> Tuple[int, int]:
    return 0, N


@dataclass(frozen=True, eq=False)
class TruncatedComplex:
    """Конечномерный комплекс над F2 с нильпотентным действием U"""
    kind: str
    s: int
    truncation: int
    basis: Basis
    grading: Tuple[Fraction, ...]
    boundary: SparseMatrix
    u_action: SparseMatrix
    index: Dict[Tuple[str, int], int] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.basis)

    def index_of(self, gid: str, i: int) -> Optional[int]:
        return self.index.get((gid, i))

    def u_power(self, k: int) -> SparseMatrix:
        """U^k: (x, i) -> (x, i - k), если образ остаётся в области"""
        entries = {}
        for col, (gid, i) in enumerate(self.basis):
            row = self.index.get((gid, i - k))
            if row is not None:
                entries[(row, col)] = 1
        return SparseMatrix(self.size, self.size, entries, "gf2")

    def gradings(self) -> Tuple[Fraction, ...]:
        return tuple(sorted(set(self.grading)))


def _build(c: CfkComplex, kind: str, s: int, N: int, ranges: Dict[str, Tuple[int, int]]) -> TruncatedComplex:
    basis = []
    for g in c.generators:
        low, high = ranges[g.id]
        basis.extend((g.id, i) for i in range(low, high + 1))
    index = {element: k for k, element in enumerate(basis)}
    grading = tuple(c.generator(gid).maslov + 2 * i for gid, i in basis)

    counts = Counter()
    for col, (gid, i) in enumerate(basis):
        for (target, power) in c.boundary(gid):
            row = index.get((target, i - power))
            if row is not None:
                counts[(row, col)] += 1
    boundary = SparseMatrix(len(basis), len(basis), {k: v % 2 for k, v in counts.items()}, "gf2")

    u_entries = {}
    for col, (gid, i) in enumerate(basis):
        row = index.get((gid, i - 1))
        if row is not None:
            u_entries[(row, col)] = 1
    u_action = SparseMatrix(len(basis), len(basis), u_entries, "gf2")

    trace("Truncated", f"{kind}{'_' + str(s) if kind == 'A' else ''}^+ of {c.name}, N={N}: {len(basis)} elements")
    return TruncatedComplex(kind, s, N, tuple(basis), grading, boundary, u_action, index)


@lru_cache(maxsize=256)
def build_A_plus(c: CfkComplex, s: int, N: int) -> TruncatedComplex:
    """A_s^+ = C{max(i, j - s) >= 0}, max(i, j - s) <= N"""
    check_truncation(c, N, s)
    ranges = {g.id: a_region(g.alexander, s, N) for g in c.generators}
    return _build(c, "A", s, N, ranges)


@lru_cache(maxsize=256)
def build_B_plus(c: CfkComplex, N: int) -> TruncatedComplex:
    """B^+ = C{i >= 0}, i <= N"""
    check_truncation(c, N)
    ranges = {g.id: b_region(N) for g in c.generators}
    return _build(c, "B", 0, N, ranges)
