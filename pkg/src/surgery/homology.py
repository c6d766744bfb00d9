"""
Graded homology - гомологии конечных градуированных комплексов
над F2 (gf2_gauss) и над F2[t, t^-1] (представление + laurent_snf),
плюс поиск башен.

Башня в градуировке g: существует цикл z в градуировке g + 2k, для
которого U^k z не является границей (k = N/2). Выше половины окна
усечения ложные классы у верхнего края не попадают в образ U^k.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..algebra import (
    LaurentColumnSpan,
    LaurentPoly,
    SparseMatrix,
    gf2_gauss,
    gf2_rank,
    laurent_kernel_basis,
    laurent_snf,
)
from ..errors import TruncationError
from ..state import CoefficientMode
from .cone import ConeComplex
from .truncated import TruncatedComplex


@dataclass(frozen=True, eq=False)
class GradedChainData:
    """Градуированный комплекс: ключ градуировки на каждый элемент базиса"""
    keys: Tuple[Fraction, ...]
    differential: SparseMatrix
    u_k: SparseMatrix
    k: int
    modulus: Optional[int] = None
    slices: Dict[Fraction, List[int]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        grouped = defaultdict(list)
        for index, key in enumerate(self.keys):
            grouped[self.norm(key)].append(index)
        object.__setattr__(self, "slices", dict(grouped))

    @property
    def ring(self) -> str:
        return self.differential.ring

    def norm(self, g: Fraction) -> Fraction:
        return Fraction(g) % self.modulus if self.modulus else Fraction(g)

    def indices(self, g: Fraction) -> List[int]:
        return self.slices.get(self.norm(g), [])

    def d_block(self, g: Fraction) -> SparseMatrix:
        """∂: C_g -> C_{g-1}"""
        return self.differential.submatrix(self.indices(g - 1), self.indices(g))

    def u_block(self, g: Fraction) -> SparseMatrix:
        """U^k: C_{g+2k} -> C_g"""
        return self.u_k.submatrix(self.indices(g), self.indices(g + 2 * self.k))

    def sorted_keys(self) -> List[Fraction]:
        return sorted(self.slices)


@dataclass(frozen=True)
class GradingHomology:
    """
    Гомологии в одной градуировке.
    dimension - размерность над F2 (None, если есть свободная часть над Λ).
    """
    grading: Fraction
    free_rank: int
    torsion: Tuple[LaurentPoly, ...] = ()
    dimension: Optional[int] = None


@dataclass(frozen=True)
class GradedModuleSummary:
    """Гомологии конуса по градуировкам и низы башен"""
    mode: CoefficientMode
    s: int
    truncation: int
    per_grading: Tuple[GradingHomology, ...]
    tower_bottoms: Tuple[Fraction, ...]
    relative: bool = False

    def at(self, g: Fraction) -> Optional[GradingHomology]:
        for item in self.per_grading:
            if item.grading == g:
                return item
        return None


# ============================================================
# Гомологии
# ============================================================

def _gf2_homology(data: GradedChainData, g: Fraction) -> GradingHomology:
    n = len(data.indices(g))
    rank_out = gf2_rank(data.d_block(g)) if n else 0
    rank_in = gf2_rank(data.d_block(g + 1)) if n else 0
    dimension = n - rank_out - rank_in
    return GradingHomology(data.norm(g), dimension, (), dimension)


def _laurent_homology(data: GradedChainData, g: Fraction) -> GradingHomology:
    n = len(data.indices(g))
    if n == 0:
        return GradingHomology(data.norm(g), 0, (), 0)
    outgoing = data.d_block(g).as_laurent()
    snf_out = laurent_snf(outgoing)
    r = snf_out.rank
    incoming = data.d_block(g + 1).as_laurent()
    # координаты границ в базисе ядра: строки r.. матрицы right^-1 · ∂_{g+1}
    coords = snf_out.right_inverse @ incoming
    presentation = coords.submatrix(list(range(r, n)), list(range(incoming.cols)))
    snf_in = laurent_snf(presentation)
    free_rank = (n - r) - snf_in.rank
    torsion = snf_in.torsion()
    dimension = sum(d.width for d in torsion) if free_rank == 0 else None
    return GradingHomology(data.norm(g), free_rank, torsion, dimension)


def grading_homology(data: GradedChainData, g: Fraction) -> GradingHomology:
    if data.ring == "gf2":
        return _gf2_homology(data, g)
    return _laurent_homology(data, g)


# ============================================================
# Башни
# ============================================================

def tower_rank(data: GradedChainData, g: Fraction) -> int:
    """
    Размерность над F2 образа U^k в гомологиях в градуировке g:
    rank([U^k K | ∂_{g+1}]) - rank(∂_{g+1}).
    """
    source = data.indices(g + 2 * data.k)
    target = data.indices(g)
    if not source or not target:
        return 0
    kernel = gf2_gauss(data.d_block(g + 2 * data.k)).kernel_basis
    if not kernel:
        return 0
    u_block = data.u_block(g).to_dense_gf2().astype(np.int64)
    images = (u_block @ np.stack(kernel, axis=1).astype(np.int64)) % 2
    boundaries = data.d_block(g + 1).to_dense_gf2()
    combined = np.concatenate([images.astype(np.uint8), boundaries], axis=1)
    return gf2_rank(combined) - gf2_rank(boundaries)


def tower_present(data: GradedChainData, g: Fraction) -> bool:
    """Есть ли ненулевой класс из образа U^k в градуировке g"""
    if data.ring == "gf2":
        return tower_rank(data, g) > 0
    source = data.indices(g + 2 * data.k)
    target = data.indices(g)
    if not source or not target:
        return False
    kernel = laurent_kernel_basis(data.d_block(g + 2 * data.k).as_laurent())
    if not kernel:
        return False
    u_block = data.u_block(g).as_laurent()
    span = LaurentColumnSpan(data.d_block(g + 1).as_laurent())
    for z in kernel:
        y = u_block.apply(z)
        if any(y) and not span.contains(y):
            return True
    return False


def lowest_tower_grading(data: GradedChainData) -> Fraction:
    """Минимальная градуировка, в которой живёт класс из образа U^k"""
    for g in data.sorted_keys():
        if tower_present(data, g):
            return g
    raise TruncationError("no tower class found in the truncated window; increase N")


def tower_bottoms(data: GradedChainData) -> Tuple[Fraction, ...]:
    """
    Низы башен с кратностью.
    Над F2: градуировки, где rank образа U^k превышает rank двумя ниже;
    над Λ: градуировки, где башня есть, а двумя ниже её нет.
    """
    bottoms: List[Fraction] = []
    keys = data.sorted_keys()
    if data.ring == "gf2":
        ranks = {g: tower_rank(data, g) for g in keys}
        for g in keys:
            jump = ranks[g] - ranks.get(g - 2, 0)
            bottoms.extend([g] * max(0, jump))
    else:
        present = {g: tower_present(data, g) for g in keys}
        for g in keys:
            if present[g] and not present.get(g - 2, False):
                bottoms.append(g)
    return tuple(bottoms)


# ============================================================
# Адаптеры комплексов
# ============================================================

def truncated_chain_data(t: TruncatedComplex) -> GradedChainData:
    k = t.truncation // 2
    return GradedChainData(t.grading, t.boundary, t.u_power(k), k)


def cone_chain_data(x: ConeComplex) -> GradedChainData:
    k = x.truncation // 2
    return GradedChainData(x.gradings(), x.differential(), x.u_power(k), k, x.modulus)


def cone_homology(x: ConeComplex) -> GradedModuleSummary:
    """Гомологии конуса по градуировкам; низы башен только при s = 0"""
    data = cone_chain_data(x)
    per_grading = tuple(grading_homology(data, g) for g in data.sorted_keys())
    bottoms = tower_bottoms(data) if x.modulus is None else ()
    return GradedModuleSummary(
        mode=x.mode,
        s=x.s,
        truncation=x.truncation,
        per_grading=per_grading,
        tower_bottoms=bottoms,
        relative=x.modulus is not None,
    )


def homology_rank_profile(summary: GradedModuleSummary) -> Dict[Fraction, Optional[int]]:
    """Размерность над F2 по градуировкам (ширины торсионных множителей для Λ)"""
    return {item.grading: item.dimension for item in summary.per_grading}
