"""
Zero-surgery profile - поправочные члены ±Y_0(K) и ±1-хирургий.

Все значения идут через V_0(K) и V_0(mirror K):
    d~(Y_0; F)  = -2·V_0(K)        d~(-Y_0; F)  = -2·V_0(mirror K)
    d~(Y_0; Λ)  =  2·V_0(mirror K) d~(-Y_0; Λ)  =  2·V_0(K)
-Y_0(K) реализуется как Y_0(mirror K).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ..cfk import CfkComplex, mirror
from ..errors import InvariantError, UsageError
from ..logger import trace
from ..surgery import StabilityCertificate, compute_V_certified

# b1(Y_0) = 1; слагаемые A имеют ранг 1 (F) и 0 (Λ)
ZERO_SURGERY_B1 = 1
RANK_UNTWISTED = 1
RANK_TWISTED = 0


def shifted_d(d: Fraction, b1: int, rank_a: int) -> Fraction:
    """d~ = d - rank(A) + b1/2"""
    if b1 < 0 or rank_a < 0:
        raise InvariantError(f"b1 and rank(A) must be nonnegative, got b1={b1}, rank={rank_a}")
    return Fraction(d) - rank_a + Fraction(b1, 2)


def unshifted_d(dtilde: Fraction, b1: int, rank_a: int) -> Fraction:
    return Fraction(dtilde) + rank_a - Fraction(b1, 2)


@dataclass(frozen=True)
class ZeroSurgeryProfile:
    """Четыре поправочных члена ±Y_0(K) и их сдвиги"""
    name: str
    v0: int
    v0_mirror: int
    d_untwisted_plus: Fraction
    d_twisted_plus: Fraction
    d_untwisted_minus: Fraction
    d_twisted_minus: Fraction
    certificates: Tuple[StabilityCertificate, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.v0 < 0 or self.v0_mirror < 0:
            raise InvariantError(f"V_0 must be nonnegative, got {self.v0} and {self.v0_mirror}")

    @classmethod
    def from_v0(cls, name: str, v0: int, v0_mirror: int, certificates=()) -> "ZeroSurgeryProfile":
        def d_of(dtilde: int, rank_a: int) -> Fraction:
            return unshifted_d(Fraction(dtilde), ZERO_SURGERY_B1, rank_a)

        return cls(
            name=name,
            v0=v0,
            v0_mirror=v0_mirror,
            d_untwisted_plus=d_of(-2 * v0, RANK_UNTWISTED),
            d_twisted_plus=d_of(2 * v0_mirror, RANK_TWISTED),
            d_untwisted_minus=d_of(-2 * v0_mirror, RANK_UNTWISTED),
            d_twisted_minus=d_of(2 * v0, RANK_TWISTED),
            certificates=tuple(certificates),
        )

    @property
    def dtilde_untwisted_plus(self) -> Fraction:
        return shifted_d(self.d_untwisted_plus, ZERO_SURGERY_B1, RANK_UNTWISTED)

    @property
    def dtilde_twisted_plus(self) -> Fraction:
        return shifted_d(self.d_twisted_plus, ZERO_SURGERY_B1, RANK_TWISTED)

    @property
    def dtilde_untwisted_minus(self) -> Fraction:
        return shifted_d(self.d_untwisted_minus, ZERO_SURGERY_B1, RANK_UNTWISTED)

    @property
    def dtilde_twisted_minus(self) -> Fraction:
        return shifted_d(self.d_twisted_minus, ZERO_SURGERY_B1, RANK_TWISTED)

    def d_values(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        """(d(Y;F), d(Y;Λ), d(-Y;F), d(-Y;Λ))"""
        return (self.d_untwisted_plus, self.d_twisted_plus, self.d_untwisted_minus, self.d_twisted_minus)

    def dtilde_values(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (
            self.dtilde_untwisted_plus,
            self.dtilde_twisted_plus,
            self.dtilde_untwisted_minus,
            self.dtilde_twisted_minus,
        )


# ============================================================
# Операции
# ============================================================

def pm_one_surgery_d(c: CfkComplex, sign: int, truncation: Optional[int] = None, rounds: int = 2) -> Fraction:
    """d(S^3_{+1}(K)) = -2·V_0(K), d(S^3_{-1}(K)) = 2·V_0(mirror K)"""
    if sign == 1:
        return Fraction(-2 * compute_V_certified(c, 0, truncation, rounds).value)
    if sign == -1:
        return Fraction(2 * compute_V_certified(mirror(c), 0, truncation, rounds).value)
    raise UsageError(f"surgery sign must be +1 or -1, got {sign}")


def zero_surgery_profile(c: CfkComplex, truncation: Optional[int] = None, rounds: int = 2) -> ZeroSurgeryProfile:
    """Профиль Y_0(K) по V_0(K) и V_0(mirror K)"""
    v0 = compute_V_certified(c, 0, truncation, rounds)
    v0_mirror = compute_V_certified(mirror(c), 0, truncation, rounds)
    trace("Profile", f"{c.name}: V0={v0.value}, V0(mirror)={v0_mirror.value}")
    return ZeroSurgeryProfile.from_v0(
        c.name, v0.value, v0_mirror.value, (v0.certificate, v0_mirror.certificate)
    )


def is_d_symmetric_zero_surgery(
    c: CfkComplex,
    truncation: Optional[int] = None,
    rounds: int = 2,
    profile: Optional[ZeroSurgeryProfile] = None,
) -> bool:
    """d~(-Y; M) = -d~(Y; M) для M = F и M = Λ"""
    profile = profile or zero_surgery_profile(c, truncation, rounds)
    return (
        profile.dtilde_untwisted_minus == -profile.dtilde_untwisted_plus
        and profile.dtilde_twisted_minus == -profile.dtilde_twisted_plus
    )
