"""
2-knot invariants - четвёрка d~(Σ), d~(Σ^r), d~(Σ̄), d~(Σ̄^r)
и препятствия к симметриям, ленточности и d-симметричным
поверхностям Зейферта.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ..cfk import format_rational
from ..errors import InvariantError
from ..logger import trace


@dataclass(frozen=True)
class TwoKnotInvariants:
    """Все четыре значения - чётные целые"""
    d_sigma: Fraction
    d_sigma_r: Fraction
    d_sigma_bar: Fraction
    d_sigma_bar_r: Fraction

    def __post_init__(self):
        for label, value in zip(("d_sigma", "d_sigma_r", "d_sigma_bar", "d_sigma_bar_r"), self.values()):
            value = Fraction(value)
            if value.denominator != 1 or value.numerator % 2:
                raise InvariantError(f"{label} = {format_rational(value)} is not an even integer")

    def values(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (
            Fraction(self.d_sigma),
            Fraction(self.d_sigma_r),
            Fraction(self.d_sigma_bar),
            Fraction(self.d_sigma_bar_r),
        )

    def swapped(self) -> "TwoKnotInvariants":
        """Σ <-> Σ̄, Σ^r <-> Σ̄^r"""
        return TwoKnotInvariants(self.d_sigma_bar, self.d_sigma_bar_r, self.d_sigma, self.d_sigma_r)

    @classmethod
    def of(cls, *values) -> "TwoKnotInvariants":
        if len(values) != 4:
            raise InvariantError(f"a 2-knot quadruple needs 4 values, got {len(values)}")
        return cls(*(Fraction(v) for v in values))


def fibered_two_knot(d_plus: Fraction, d_minus: Fraction, b1: int) -> TwoKnotInvariants:
    """
    Расслоенный 2-узел с слоем Y:
    d~(Σ) = d~(Σ̄) = d(Y; Λ) + b1/2, d~(Σ^r) = d~(Σ̄^r) = d(-Y; Λ) + b1/2.

    Raises:
        InvariantError: b1 < 0 или сдвинутые значения не чётные целые
        (такой слой не бывает слоем 2-узла)
    """
    if b1 < 0:
        raise InvariantError(f"b1 must be nonnegative, got {b1}")
    shift = Fraction(b1, 2)
    plus = Fraction(d_plus) + shift
    minus = Fraction(d_minus) + shift
    return TwoKnotInvariants(plus, minus, plus, minus)


def qhs_fiber_two_knot(d: Fraction) -> TwoKnotInvariants:
    """Слой - рациональная гомологическая сфера: (d, -d, d, -d)"""
    d = Fraction(d)
    return TwoKnotInvariants(d, -d, d, -d)


# ============================================================
# Препятствия
# ============================================================

@dataclass(frozen=True)
class ObstructionFlag:
    """Флаг препятствия; при obstructed хранит нарушенное тождество и значения"""
    obstructed: bool
    identity: Optional[str] = None
    values: Tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class ObstructionReport:
    reversible: ObstructionFlag
    positive_amphichiral: ObstructionFlag
    negative_amphichiral: ObstructionFlag
    ribbon: ObstructionFlag
    d_symmetric_seifert: ObstructionFlag
    qhs_seifert: ObstructionFlag

    def obstructed(self) -> Tuple[str, ...]:
        names = (
            "reversible",
            "positive_amphichiral",
            "negative_amphichiral",
            "ribbon",
            "d_symmetric_seifert",
            "qhs_seifert",
        )
        return tuple(n for n in names if getattr(self, n).obstructed)


def _differ(identity: str, lhs: Fraction, rhs: Fraction) -> ObstructionFlag:
    if lhs == rhs:
        return ObstructionFlag(False)
    return ObstructionFlag(True, identity, (lhs, rhs))


def ribbon_consistent(q: TwoKnotInvariants) -> bool:
    """Ленточный 2-узел имеет все четыре значения равными нулю"""
    return all(v == 0 for v in q.values())


def obstruction_report(q: TwoKnotInvariants) -> ObstructionReport:
    s, s_r, s_bar, s_bar_r = q.values()

    ribbon = ObstructionFlag(False) if ribbon_consistent(q) else ObstructionFlag(
        True, "d(Σ) = d(Σ^r) = d(Σ̄) = d(Σ̄^r) = 0", (s, s_r, s_bar, s_bar_r)
    )

    if s != -s_bar_r:
        d_symmetric = ObstructionFlag(True, "d(Σ) = -d(Σ̄^r)", (s, -s_bar_r))
    elif s_r != -s_bar:
        d_symmetric = ObstructionFlag(True, "d(Σ^r) = -d(Σ̄)", (s_r, -s_bar))
    else:
        d_symmetric = ObstructionFlag(False)

    qhs_ok = s == s_bar and s_r == s_bar_r and s_r == -s
    qhs = ObstructionFlag(False) if qhs_ok else ObstructionFlag(
        True, "(d(Σ), d(Σ^r), d(Σ̄), d(Σ̄^r)) = (d, -d, d, -d)", (s, s_r, s_bar, s_bar_r)
    )

    report = ObstructionReport(
        reversible=_differ("d(Σ) = d(Σ^r)", s, s_r),
        positive_amphichiral=_differ("d(Σ) = d(Σ̄)", s, s_bar),
        negative_amphichiral=_differ("d(Σ) = d(Σ̄^r)", s, s_bar_r),
        ribbon=ribbon,
        d_symmetric_seifert=d_symmetric,
        qhs_seifert=qhs,
    )
    trace("TwoKnot", f"{[format_rational(v) for v in q.values()]}: obstructed {list(report.obstructed())}")
    return report
