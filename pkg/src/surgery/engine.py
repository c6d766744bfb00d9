"""
Surgery engine - V_s, поправочные члены нулевой хирургии и сертификаты
устойчивости к удвоению уровня усечения.

Каждая публичная функция считает значение для N, 2N, 4N, ...
(stability_run) и пишет один вызов в ComputationLogger.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, Optional, Tuple

from ..cfk import CfkComplex
from ..cfk.io import format_rational
from ..errors import StabilityError, TruncationError, UsageError
from ..logger import trace
from ..state import CertificateModel, CoefficientMode, OpTag
from ..tools.tool_logger import get_computation_logger
from .cone import build_cone
from .homology import (
    cone_chain_data,
    lowest_tower_grading,
    tower_bottoms,
    truncated_chain_data,
)
from .raw import RawTwistedComplex, check_raw, raw_auto_truncation, raw_chain_data, raw_safe_floor
from .truncated import auto_truncation, build_A_plus, build_B_plus, check_truncation, safe_floor


@dataclass(frozen=True)
class StabilityCertificate:
    """Значения операции при N, 2N, 4N, ..."""
    op: OpTag
    subject: str
    truncations: Tuple[int, ...]
    values: Tuple[Any, ...]

    @property
    def stable(self) -> bool:
        return len(self.values) >= 2 and self.values[-1] == self.values[-2]

    def to_model(self) -> CertificateModel:
        return CertificateModel(
            op=self.op,
            subject=self.subject,
            truncations=list(self.truncations),
            values=[_format_value(v) for v in self.values],
            stable=self.stable,
        )


@dataclass(frozen=True)
class StabilityResult:
    value: Any
    certificate: StabilityCertificate


def _format_value(value: Any) -> str:
    if isinstance(value, tuple):
        return "[" + ", ".join(_format_value(v) for v in value) + "]"
    if isinstance(value, (int, Fraction)):
        return format_rational(Fraction(value))
    return str(value)


# ============================================================
# Однократные вычисления при фиксированном N
# ============================================================

@lru_cache(maxsize=256)
def tower_bottom_A(c: CfkComplex, s: int, N: int) -> Fraction:
    return lowest_tower_grading(truncated_chain_data(build_A_plus(c, s, N)))


@lru_cache(maxsize=256)
def tower_bottom_B(c: CfkComplex, N: int) -> Fraction:
    return lowest_tower_grading(truncated_chain_data(build_B_plus(c, N)))


def _v_at(c: CfkComplex, N: int, s: int) -> int:
    """V_s = (низ башни B^+ - низ башни A_s^+) / 2"""
    gap = tower_bottom_B(c, N) - tower_bottom_A(c, s, N)
    if gap < 0 or gap.denominator != 1 or gap.numerator % 2:
        raise StabilityError(f"tower gap {gap} between B^+ and A_{s}^+ of {c.name} is not a nonnegative even integer")
    return gap.numerator // 2


def _d_twisted_at(c: CfkComplex, N: int, s: int = 0) -> Fraction:
    cone = build_cone(c, 0, CoefficientMode.TWISTED, N)
    return lowest_tower_grading(cone_chain_data(cone))


def _untwisted_bottoms_at(c: CfkComplex, N: int, s: int = 0) -> Tuple[Fraction, ...]:
    cone = build_cone(c, 0, CoefficientMode.UNTWISTED, N)
    return tuple(sorted(tower_bottoms(cone_chain_data(cone))))


def _raw_d_at(raw, N: int, s: int = 0) -> Fraction:
    return lowest_tower_grading(raw_chain_data(raw, N))


_SINGLE_RUNS: Dict[OpTag, Callable[..., Any]] = {
    OpTag.COMPUTE_V: _v_at,
    OpTag.D_TWISTED: _d_twisted_at,
    OpTag.UNTWISTED_BOTTOMS: _untwisted_bottoms_at,
    OpTag.TWISTED_COMPLEX_D: _raw_d_at,
}


# ============================================================
# Сертификация
# ============================================================

def _initial_truncation(op: OpTag, subject, truncation: Optional[int], s: int) -> int:
    if op == OpTag.TWISTED_COMPLEX_D:
        if truncation is None:
            return raw_auto_truncation(subject)
        if truncation < raw_safe_floor(subject):
            raise TruncationError(f"truncation N={truncation} is below the safe floor {raw_safe_floor(subject)}")
        return truncation
    if truncation is None:
        return max(auto_truncation(subject), safe_floor(subject, s))
    check_truncation(subject, truncation, s)
    return truncation


def stability_run(
    op: OpTag,
    subject,
    rounds: int = 2,
    truncation: Optional[int] = None,
    s: int = 0,
) -> StabilityResult:
    """
    Повторяет операцию при N, 2N, 4N, ... (rounds раз).

    Raises:
        StabilityError: значения в последних двух раундах различаются
    """
    op = OpTag(op)
    if rounds < 2:
        raise UsageError(f"stability rounds must be >= 2, got {rounds}")
    run = _SINGLE_RUNS[op]
    base = _initial_truncation(op, subject, truncation, s)
    name = getattr(subject, "name", str(subject))

    truncations = []
    values = []
    for r in range(rounds):
        N = base * 2 ** r
        value = run(subject, N, s)
        trace("Engine", f"{op.value}({name}, s={s}) at N={N} -> {_format_value(value)}")
        truncations.append(N)
        values.append(value)

    certificate = StabilityCertificate(op, name, tuple(truncations), tuple(values))
    if not certificate.stable:
        raise StabilityError(
            f"{op.value} of {name} changes under N-doubling: "
            + ", ".join(f"N={n}: {_format_value(v)}" for n, v in zip(truncations, values)),
            certificate,
        )
    return StabilityResult(values[-1], certificate)


# ============================================================
# Публичные операции
# ============================================================

def compute_V_certified(c: CfkComplex, s: int = 0, truncation: Optional[int] = None, rounds: int = 2) -> StabilityResult:
    if s < 0:
        raise UsageError(f"compute_V needs s >= 0, got {s}")
    logger = get_computation_logger()
    with logger.track("compute_V", f"{c.name}, s={s}") as slot:
        result = stability_run(OpTag.COMPUTE_V, c, rounds, truncation, s)
        slot["output"] = str(result.value)
    return result


def compute_V(c: CfkComplex, s: int = 0, truncation: Optional[int] = None, rounds: int = 2) -> int:
    """V_s(K) >= 0, сертифицированное удвоением N"""
    return compute_V_certified(c, s, truncation, rounds).value


def d_twisted_certified(c: CfkComplex, truncation: Optional[int] = None, rounds: int = 2) -> StabilityResult:
    logger = get_computation_logger()
    with logger.track("d_totally_twisted_zero_surgery", c.name) as slot:
        result = stability_run(OpTag.D_TWISTED, c, rounds, truncation)
        slot["output"] = format_rational(result.value)
    return result


def d_totally_twisted_zero_surgery(c: CfkComplex, truncation: Optional[int] = None, rounds: int = 2) -> Fraction:
    """d(Y_0(K); Λ) - низ единственной башни скрученного конуса при s = 0"""
    return d_twisted_certified(c, truncation, rounds).value


def untwisted_bottoms_certified(c: CfkComplex, truncation: Optional[int] = None, rounds: int = 2) -> StabilityResult:
    logger = get_computation_logger()
    with logger.track("untwisted_tower_bottoms", c.name) as slot:
        result = stability_run(OpTag.UNTWISTED_BOTTOMS, c, rounds, truncation)
        slot["output"] = _format_value(result.value)
    return result


def untwisted_tower_bottoms(c: CfkComplex, truncation: Optional[int] = None, rounds: int = 2) -> Tuple[Fraction, ...]:
    """Низы двух башен нескрученного конуса при s = 0, по возрастанию"""
    return untwisted_bottoms_certified(c, truncation, rounds).value


def twisted_certified(raw: RawTwistedComplex, truncation: Optional[int] = None, rounds: int = 2) -> StabilityResult:
    check_raw(raw)
    logger = get_computation_logger()
    with logger.track("twisted_complex_d", raw.name) as slot:
        result = stability_run(OpTag.TWISTED_COMPLEX_D, raw, rounds, truncation)
        slot["output"] = format_rational(result.value)
    return result


def twisted_complex_d(raw: RawTwistedComplex, truncation: Optional[int] = None, rounds: int = 2) -> Fraction:
    """d(·; Λ) свободного F2[t, t^-1][U]-комплекса, заданного напрямую"""
    return twisted_certified(raw, truncation, rounds).value
