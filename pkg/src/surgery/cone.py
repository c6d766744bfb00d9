"""
Mapping cone нулевой хирургии: D = v_s + t·h_s из A_s^+ в B^+.

Порядок базиса конуса: сначала A-часть, затем B-часть.
Градуировка конуса: A-часть сдвинута на +1/2, B-часть на -1/2.
При s != 0 h_s понижает градуировку на 2s, поэтому конус
градуирован только по модулю 2|s|.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from ..algebra import ONE, T, ZERO, SparseMatrix
from ..cfk import CfkComplex
from ..logger import trace
from ..state import CoefficientMode
from .maps import maps_v_h
from .truncated import TruncatedComplex, build_A_plus, build_B_plus

OFFSET_A = Fraction(1, 2)
OFFSET_B = Fraction(-1, 2)


@dataclass(frozen=True, eq=False)
class ConeComplex:
    """Конус отображения v + t·h (t = 1 в нескрученном режиме)"""
    a_part: TruncatedComplex
    b_part: TruncatedComplex
    connecting: SparseMatrix
    mode: CoefficientMode
    s: int
    offset_a: Fraction = OFFSET_A
    offset_b: Fraction = OFFSET_B

    @property
    def ring(self) -> str:
        return self.connecting.ring

    @property
    def size(self) -> int:
        return self.a_part.size + self.b_part.size

    @property
    def truncation(self) -> int:
        return self.b_part.truncation

    @property
    def modulus(self) -> Optional[int]:
        """None для абсолютной градуировки (s = 0), иначе 2|s|"""
        return None if self.s == 0 else 2 * abs(self.s)

    def gradings(self) -> Tuple[Fraction, ...]:
        a = tuple(g + self.offset_a for g in self.a_part.grading)
        b = tuple(g + self.offset_b for g in self.b_part.grading)
        return a + b

    def _lift(self, matrix: SparseMatrix, row_offset: int, col_offset: int) -> dict:
        one = 1 if self.ring == "gf2" else ONE
        return {(r + row_offset, c + col_offset): one for (r, c) in matrix.entries}

    def differential(self) -> SparseMatrix:
        """Полный дифференциал: ∂_A ⊕ ∂_B плюс связующее отображение в блоке (B, A)"""
        n_a = self.a_part.size
        entries = {}
        entries.update(self._lift(self.a_part.boundary, 0, 0))
        entries.update(self._lift(self.b_part.boundary, n_a, n_a))
        for (r, c), value in self.connecting.entries.items():
            entries[(r + n_a, c)] = value
        return SparseMatrix(self.size, self.size, entries, self.ring)

    def u_power(self, k: int) -> SparseMatrix:
        n_a = self.a_part.size
        entries = {}
        entries.update(self._lift(self.a_part.u_power(k), 0, 0))
        entries.update(self._lift(self.b_part.u_power(k), n_a, n_a))
        return SparseMatrix(self.size, self.size, entries, self.ring)


@lru_cache(maxsize=128)
def build_cone(c: CfkComplex, s: int, mode: CoefficientMode, N: int) -> ConeComplex:
    """Конус D_{0,s} = v_s + t·h_s"""
    mode = CoefficientMode(mode)
    a_part = build_A_plus(c, s, N)
    b_part = build_B_plus(c, N)
    v, h = maps_v_h(c, s, N)

    if mode == CoefficientMode.TWISTED:
        entries = {key: ONE for key in v.entries}
        for key in h.entries:
            entries[key] = entries.get(key, ZERO) + T
        connecting = SparseMatrix(b_part.size, a_part.size, entries, "laurent")
    else:
        connecting = v + h

    trace("Cone", f"{mode.value} cone of {c.name}, s={s}, N={N}: {a_part.size}+{b_part.size} elements")
    return ConeComplex(a_part, b_part, connecting, mode, s)
