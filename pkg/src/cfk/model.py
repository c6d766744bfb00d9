"""
CFK model - конечнопорождённый комплекс CFK∞ узла в S^3.

Генератор x хранится в канонической позиции [x, 0, A(x)]; остальные
элементы базиса над F2 - U-сдвиги U^{-i}x с координатами (i, i + A(x)).
Все значения неизменяемы и хешируемы, чтобы результаты движка
можно было кешировать через lru_cache.
"""

from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Tuple


@dataclass(frozen=True)
class Generator:
    """Генератор комплекса: (M, A)"""
    id: str
    maslov: Fraction
    alexander: int

    def __post_init__(self):
        object.__setattr__(self, "maslov", Fraction(self.maslov))
        object.__setattr__(self, "alexander", int(self.alexander))


@dataclass(frozen=True)
class DiffTerm:
    """Слагаемое дифференциала: source -> U^upower target"""
    source: str
    target: str
    upower: int = 0


@dataclass(frozen=True)
class FlipInvolution:
    """
    Инволюция σ на генераторах, заданная парами (x, σx).
    Неподвижные точки можно не указывать.
    """
    pairs: Tuple[Tuple[str, str], ...] = ()

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[str]]) -> "FlipInvolution":
        return cls(tuple(tuple(p) for p in pairs))

    def mapping(self) -> Dict[str, str]:
        """x -> σx в обе стороны; при противоречивых парах побеждает последняя"""
        result: Dict[str, str] = {}
        for a, b in self.pairs:
            result[a] = b
            result[b] = a
        return result

    def image(self, gid: str) -> str:
        return self.mapping().get(gid, gid)

    def canonical_pairs(self) -> Tuple[Tuple[str, str], ...]:
        """Отсортированные пары без неподвижных точек"""
        return tuple(sorted({tuple(sorted(p)) for p in self.pairs if p[0] != p[1]}))


@dataclass(frozen=True)
class CfkComplex:
    """Комплекс CFK∞ над F2[U, U^-1] с инволюцией σ"""
    name: str
    generators: Tuple[Generator, ...]
    differential: Tuple[DiffTerm, ...] = ()
    flip: FlipInvolution = field(default_factory=FlipInvolution)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "differential", tuple(self.differential))

    # ------------------------------------------------------------
    # Доступ
    # ------------------------------------------------------------

    @cached_property
    def by_id(self) -> Dict[str, Generator]:
        return {g.id: g for g in self.generators}

    @property
    def ids(self) -> List[str]:
        return [g.id for g in self.generators]

    def generator(self, gid: str) -> Generator:
        return self.by_id[gid]

    @cached_property
    def outgoing(self) -> Dict[str, Tuple[DiffTerm, ...]]:
        """Слагаемые ∂x для каждого x"""
        grouped: Dict[str, List[DiffTerm]] = {g.id: [] for g in self.generators}
        for term in self.differential:
            grouped.setdefault(term.source, []).append(term)
        return {k: tuple(v) for k, v in grouped.items()}

    @cached_property
    def sigma(self) -> Dict[str, str]:
        mapping = self.flip.mapping()
        return {g.id: mapping.get(g.id, g.id) for g in self.generators}

    def boundary(self, gid: str) -> Counter:
        """∂x как мультимножество (target, upower) по модулю 2"""
        counts = Counter((t.target, t.upower) for t in self.outgoing.get(gid, ()))
        return Counter({k: 1 for k, v in counts.items() if v % 2})

    # ------------------------------------------------------------
    # Числовые характеристики
    # ------------------------------------------------------------

    @property
    def genus_bound(self) -> int:
        """max |A(x)|"""
        return max((abs(g.alexander) for g in self.generators), default=0)

    @property
    def max_upower(self) -> int:
        return max((t.upower for t in self.differential), default=0)

    @property
    def maslov_range(self) -> Tuple[Fraction, Fraction]:
        values = [g.maslov for g in self.generators] or [Fraction(0)]
        return min(values), max(values)

    def with_name(self, name: str) -> "CfkComplex":
        return replace(self, name=name)

    def summary(self) -> str:
        return f"{self.name}: {len(self.generators)} generators, {len(self.differential)} terms"
