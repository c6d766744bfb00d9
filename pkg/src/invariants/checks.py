"""
Cross-checks - сверка профиля с маршрутом через конус и проверки
чётности и обращения ориентации. Провал проверки - запись в отчёте,
а не исключение.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from ..cfk import CfkComplex, format_rational, mirror
from ..logger import trace
from ..surgery import StabilityCertificate, d_twisted_certified, untwisted_bottoms_certified
from .profile import ZeroSurgeryProfile, zero_surgery_profile


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    lhs: str
    rhs: str


@dataclass(frozen=True)
class CheckReport:
    """Результаты crosscheck_profile в фиксированном порядке"""
    subject: str
    results: Tuple[CheckResult, ...]
    certificates: Tuple[StabilityCertificate, ...] = field(default=(), compare=False)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def by_name(self, name: str) -> Optional[CheckResult]:
        return next((r for r in self.results if r.name == name), None)


def _fmt(values) -> str:
    if isinstance(values, (tuple, list)):
        return "[" + ", ".join(format_rational(v) for v in values) + "]"
    return format_rational(values)


def _equality(name: str, lhs, rhs) -> CheckResult:
    return CheckResult(name, lhs == rhs, _fmt(lhs), _fmt(rhs))


def _inequality(name: str, terms: Sequence[Fraction], holds: Callable[[Fraction], bool], bound: str) -> CheckResult:
    total = sum(terms, Fraction(0))
    lhs = " + ".join(format_rational(t) for t in terms)
    return CheckResult(name, holds(total), f"{lhs} = {format_rational(total)}", bound)


def _is_even_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value.numerator % 2 == 0


def crosscheck_profile(
    c: CfkComplex,
    truncation: Optional[int] = None,
    rounds: int = 2,
    profile: Optional[ZeroSurgeryProfile] = None,
) -> CheckReport:
    """
    Проверки:
      cone_twisted_plus / cone_twisted_minus - d(±Y_0; Λ) по конусу равно формуле;
      parity[*] - каждый d~ чётное целое;
      reversal_twisted - d~(Y;Λ) + d~(-Y;Λ) >= 0;
      reversal_untwisted - d~(Y;F) + d~(-Y;F) <= 0;
      untwisted_bottoms_plus - низы башен нескрученного конуса = {d(Y;F), d(Y;Λ)}.
    """
    profile = profile or zero_surgery_profile(c, truncation, rounds)
    cone_plus = d_twisted_certified(c, truncation, rounds)
    cone_minus = d_twisted_certified(mirror(c), truncation, rounds)
    bottoms = untwisted_bottoms_certified(c, truncation, rounds)

    results = [
        _equality("cone_twisted_plus", cone_plus.value, profile.d_twisted_plus),
        _equality("cone_twisted_minus", cone_minus.value, profile.d_twisted_minus),
    ]
    for label, value in (
        ("dtilde_untwisted_plus", profile.dtilde_untwisted_plus),
        ("dtilde_twisted_plus", profile.dtilde_twisted_plus),
        ("dtilde_untwisted_minus", profile.dtilde_untwisted_minus),
        ("dtilde_twisted_minus", profile.dtilde_twisted_minus),
    ):
        results.append(CheckResult(f"parity[{label}]", _is_even_integer(value), format_rational(value), "2Z"))
    results.append(_inequality(
        "reversal_twisted",
        (profile.dtilde_twisted_plus, profile.dtilde_twisted_minus),
        lambda total: total >= 0,
        ">= 0",
    ))
    results.append(_inequality(
        "reversal_untwisted",
        (profile.dtilde_untwisted_plus, profile.dtilde_untwisted_minus),
        lambda total: total <= 0,
        "<= 0",
    ))
    expected = tuple(sorted((profile.d_untwisted_plus, profile.d_twisted_plus)))
    results.append(_equality("untwisted_bottoms_plus", tuple(bottoms.value), expected))

    report = CheckReport(
        c.name,
        tuple(results),
        tuple(profile.certificates) + (cone_plus.certificate, cone_minus.certificate, bottoms.certificate),
    )
    trace("Checks", f"{c.name}: {len(results) - len(report.failures())}/{len(results)} passed")
    return report
