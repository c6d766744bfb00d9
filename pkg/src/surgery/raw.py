"""
Raw twisted complexes - свободные F2[t, t^-1][U]-комплексы, заданные
напрямую (без узла): генераторы с рациональными градуировками и
слагаемые ∂ вида poly(t)·U^p·y.

Используются для примеров, которые не приходят из CFK∞ узла,
в частности для встроенного комплекса builtin:not_equal.
"""

import json
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..algebra import ONE, ONE_PLUS_T, LaurentPoly, SparseMatrix, ZERO, laurent_snf
from ..cfk.io import format_rational, parse_rational
from ..errors import CfkFormatError, CfkValidationError, UsageError, Violation
from ..logger import trace
from .homology import GradedChainData

BUILTIN_PREFIX = "builtin:"


@dataclass(frozen=True)
class RawTerm:
    """Слагаемое ∂: source -> poly · U^upower · target"""
    source: str
    target: str
    upower: int
    poly: LaurentPoly


@dataclass(frozen=True)
class RawTwistedComplex:
    """Комплекс над F2[t, t^-1][U]; generators - пары (id, градуировка)"""
    name: str
    generators: Tuple[Tuple[str, Fraction], ...]
    terms: Tuple[RawTerm, ...] = ()

    @property
    def grading_of(self) -> Dict[str, Fraction]:
        return dict(self.generators)

    @property
    def ids(self) -> List[str]:
        return [gid for gid, _ in self.generators]

    @property
    def max_upower(self) -> int:
        return max((t.upower for t in self.terms), default=0)

    @property
    def grading_range(self) -> Tuple[Fraction, Fraction]:
        values = [g for _, g in self.generators] or [Fraction(0)]
        return min(values), max(values)

    def boundary(self, gid: str) -> Dict[Tuple[str, int], LaurentPoly]:
        """∂x как {(target, upower): poly} с ненулевыми коэффициентами"""
        total: Dict[Tuple[str, int], LaurentPoly] = defaultdict(lambda: ZERO)
        for t in self.terms:
            if t.source == gid:
                total[(t.target, t.upower)] = total[(t.target, t.upower)] + t.poly
        return {k: v for k, v in total.items() if v}


# ============================================================
# Проверки
# ============================================================

def _term_label(t: RawTerm) -> str:
    return f"{t.source}->({t.poly})·U^{t.upower}·{t.target}"


def u_inverted_is_acyclic(raw: RawTwistedComplex) -> bool:
    """
    Обнуляются ли гомологии после обращения U.
    При U = 1 это комплекс Λ^n: он ацикличен, когда rank ∂ = n/2
    и все инвариантные множители - единицы.
    """
    n = len(raw.generators)
    if n == 0:
        return True
    index = {gid: k for k, gid in enumerate(raw.ids)}
    entries: Dict[Tuple[int, int], LaurentPoly] = defaultdict(lambda: ZERO)
    for t in raw.terms:
        key = (index[t.target], index[t.source])
        entries[key] = entries[key] + t.poly
    snf = laurent_snf(SparseMatrix(n, n, dict(entries), "laurent"))
    return 2 * snf.rank == n and not snf.torsion()


def raw_violations(raw: RawTwistedComplex) -> List[Violation]:
    """id, закон градуировки, ∂² = 0 над F2[t, t^-1][U] и наличие башни"""
    found = []
    seen = Counter(raw.ids)
    for gid, count in seen.items():
        if count > 1:
            found.append(Violation("duplicate_id", gid, f"generator id appears {count} times"))
    for t in raw.terms:
        for gid in (t.source, t.target):
            if gid not in seen:
                found.append(Violation("unknown_id", _term_label(t), f"unknown generator '{gid}' in differential"))
    if found:
        return found

    grading = raw.grading_of
    for t in raw.terms:
        if t.upower < 0:
            found.append(Violation("filtration_law", _term_label(t), f"negative upower {t.upower}"))
        elif grading[t.target] - 2 * t.upower != grading[t.source] - 1:
            found.append(Violation(
                "grading_law", _term_label(t),
                f"gr(to) - 2·upower = {grading[t.target] - 2 * t.upower}, expected gr(from) - 1 = {grading[t.source] - 1}",
            ))

    for gid in raw.ids:
        total: Dict[Tuple[str, int], LaurentPoly] = defaultdict(lambda: ZERO)
        for (mid, a), p in raw.boundary(gid).items():
            for (end, b), q in raw.boundary(mid).items():
                total[(end, a + b)] = total[(end, a + b)] + p * q
        leftovers = sorted((k, v) for k, v in total.items() if v)
        if leftovers:
            (end, power), poly = leftovers[0]
            found.append(Violation("d_squared", gid, f"∂²({gid}) contains ({poly})·U^{power}·{end}"))
    if not found and u_inverted_is_acyclic(raw):
        found.append(Violation("homology_rank", raw.name, "U-inverted homology vanishes: no tower to measure"))
    return found


def check_raw(raw: RawTwistedComplex) -> RawTwistedComplex:
    violations = raw_violations(raw)
    trace("RawComplex", f"{raw.name}: {len(violations)} violation(s)")
    if violations:
        raise CfkValidationError(violations)
    return raw


# ============================================================
# JSON-формат
# ============================================================

class RawGeneratorModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str = Field(min_length=1, description="Уникальный id генератора")
    grading: Union[int, str] = Field(description="Градуировка: целое или 'p/q'")


class RawTermModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    source: str = Field(alias="from", description="id источника")
    to: str = Field(description="id цели")
    upower: int = Field(default=0, description="Степень U")
    poly: List[int] = Field(default_factory=lambda: [0], description="Показатели t в коэффициенте")


class RawFileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = Field(default="raw", description="Имя комплекса")
    generators: List[RawGeneratorModel]
    differential: List[RawTermModel] = Field(default_factory=list)


def parse_raw_twisted(text: str) -> RawTwistedComplex:
    """Текст JSON -> проверенный комплекс (CfkFormatError / CfkValidationError)"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise CfkFormatError(f"invalid JSON: {e.msg}", e.lineno, e.colno)
    try:
        model = RawFileModel.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise CfkFormatError(f"schema error at '{where}': {first['msg']}")

    generators = tuple((g.id, parse_rational(g.grading, f"grading of '{g.id}'")) for g in model.generators)
    terms = tuple(
        RawTerm(t.source, t.to, t.upower, LaurentPoly.from_exponents(t.poly))
        for t in model.differential
    )
    return check_raw(RawTwistedComplex(model.name, generators, tuple(t for t in terms if t.poly)))


def read_raw_twisted_file(path: Union[str, Path]) -> RawTwistedComplex:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CfkFormatError(f"cannot read {path}: {e}")
    return parse_raw_twisted(text)


def raw_to_dict(raw: RawTwistedComplex) -> dict:
    """Каноническое представление: генераторы и слагаемые отсортированы"""
    terms = sorted(raw.terms, key=lambda t: (t.source, t.target, t.upower, t.poly.exponents()))
    return {
        "name": raw.name,
        "generators": [{"id": gid, "grading": format_rational(g)} for gid, g in sorted(raw.generators)],
        "differential": [
            {"from": t.source, "to": t.target, "upower": t.upower, "poly": list(t.poly.exponents())}
            for t in terms
        ],
    }


def serialize_raw_twisted(raw: RawTwistedComplex) -> str:
    return json.dumps(raw_to_dict(raw), ensure_ascii=False, indent=2) + "\n"


# ============================================================
# Встроенные комплексы
# ============================================================

def builtin_not_equal() -> RawTwistedComplex:
    """
    Гипотетический комплекс с b1 = 1, у которого d(·; Λ) = -1/2 < d_bot.
    Сплошная стрелка - 1, штриховая - 1 + t, пунктирная - 1 + t^2.
    """
    one_plus_t2 = ONE_PLUS_T * ONE_PLUS_T
    generators = (
        ("a", Fraction(1, 2)),
        ("b", Fraction(-1, 2)),
        ("c", Fraction(3, 2)),
        ("d", Fraction(1, 2)),
    )
    terms = (
        RawTerm("a", "b", 0, one_plus_t2),
        RawTerm("a", "c", 1, ONE_PLUS_T),
        RawTerm("b", "d", 1, ONE),
        RawTerm("c", "d", 0, ONE_PLUS_T),
    )
    return check_raw(RawTwistedComplex("not_equal", generators, terms))


_BUILTINS = {"not_equal": builtin_not_equal}


def builtin_names() -> List[str]:
    return sorted(_BUILTINS)


def resolve_raw(label: str) -> RawTwistedComplex:
    """'builtin:<name>' или путь к JSON-файлу"""
    if label.startswith(BUILTIN_PREFIX):
        name = label[len(BUILTIN_PREFIX):]
        if name not in _BUILTINS:
            raise UsageError(f"unknown builtin complex '{name}'; known: {', '.join(builtin_names())}")
        return _BUILTINS[name]()
    return read_raw_twisted_file(label)


# ============================================================
# Усечение и CF^+
# ============================================================

def raw_safe_floor(raw: RawTwistedComplex) -> int:
    return 2 * raw.max_upower + 4


def raw_auto_truncation(raw: RawTwistedComplex) -> int:
    low, high = raw.grading_range
    return raw_safe_floor(raw) + 2 * math.ceil(high - low)


def raw_chain_data(raw: RawTwistedComplex, N: int) -> GradedChainData:
    """
    CF^+ с уровнем N: элементы (x, i), i in [0, N], градуировка gr(x) + 2i;
    U^k сдвигает i на -k, k = N // 2.
    """
    basis = [(gid, i) for gid in raw.ids for i in range(N + 1)]
    index = {element: k for k, element in enumerate(basis)}
    grading = raw.grading_of
    keys = tuple(grading[gid] + 2 * i for gid, i in basis)

    entries: Dict[Tuple[int, int], LaurentPoly] = defaultdict(lambda: ZERO)
    for col, (gid, i) in enumerate(basis):
        for (target, power), poly in raw.boundary(gid).items():
            row = index.get((target, i - power))
            if row is not None:
                entries[(row, col)] = entries[(row, col)] + poly
    differential = SparseMatrix(len(basis), len(basis), dict(entries), "laurent")

    k = N // 2
    u_entries = {}
    for col, (gid, i) in enumerate(basis):
        row = index.get((gid, i - k))
        if row is not None:
            u_entries[(row, col)] = ONE
    u_k = SparseMatrix(len(basis), len(basis), u_entries, "laurent")

    trace("RawComplex", f"CF^+ of {raw.name}, N={N}: {len(basis)} elements")
    return GradedChainData(keys, differential, u_k, k)
