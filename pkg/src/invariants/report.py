"""
Report serialization - доменные значения -> pydantic-модели из state.
Рациональные числа всегда 'p/q' в несократимом виде.
"""

from typing import Iterable, List

from ..cfk import ValidationReport, format_rational
from ..state import (
    CertificateModel,
    CheckModel,
    CheckStatus,
    ObstructionFlagModel,
    ObstructionsModel,
    ProfileModel,
    TwoKnotModel,
    TwoKnotReport,
    ValidationModel,
    ViolationModel,
)
from ..surgery import StabilityCertificate
from .checks import CheckReport
from .profile import ZeroSurgeryProfile
from .two_knot import ObstructionFlag, ObstructionReport, TwoKnotInvariants


def validation_to_model(report: ValidationReport) -> ValidationModel:
    return ValidationModel(
        name=report.complex_name,
        valid=report.ok,
        homology_rank=report.homology_rank,
        violations=[ViolationModel(kind=v.kind, subject=v.subject, message=v.message) for v in report.violations],
    )


def profile_to_model(profile: ZeroSurgeryProfile) -> ProfileModel:
    return ProfileModel(
        v0=profile.v0,
        v0_mirror=profile.v0_mirror,
        d_untwisted_plus=format_rational(profile.d_untwisted_plus),
        d_twisted_plus=format_rational(profile.d_twisted_plus),
        d_untwisted_minus=format_rational(profile.d_untwisted_minus),
        d_twisted_minus=format_rational(profile.d_twisted_minus),
        dtilde_untwisted_plus=format_rational(profile.dtilde_untwisted_plus),
        dtilde_twisted_plus=format_rational(profile.dtilde_twisted_plus),
        dtilde_untwisted_minus=format_rational(profile.dtilde_untwisted_minus),
        dtilde_twisted_minus=format_rational(profile.dtilde_twisted_minus),
    )


def checks_to_models(report: CheckReport) -> List[CheckModel]:
    return [
        CheckModel(
            name=r.name,
            status=CheckStatus.PASS if r.passed else CheckStatus.FAIL,
            lhs=r.lhs,
            rhs=r.rhs,
        )
        for r in report.results
    ]


def certificates_to_models(certificates: Iterable[StabilityCertificate]) -> List[CertificateModel]:
    return [c.to_model() for c in certificates]


def two_knot_to_model(q: TwoKnotInvariants) -> TwoKnotModel:
    s, s_r, s_bar, s_bar_r = (format_rational(v) for v in q.values())
    return TwoKnotModel(d_sigma=s, d_sigma_r=s_r, d_sigma_bar=s_bar, d_sigma_bar_r=s_bar_r)


def _flag_model(flag: ObstructionFlag) -> ObstructionFlagModel:
    if not flag.obstructed:
        return ObstructionFlagModel(obstructed=False)
    return ObstructionFlagModel(
        obstructed=True,
        identity=flag.identity,
        values=[format_rational(v) for v in flag.values],
    )


def obstructions_to_model(report: ObstructionReport) -> ObstructionsModel:
    return ObstructionsModel(
        reversible=_flag_model(report.reversible),
        positive_amphichiral=_flag_model(report.positive_amphichiral),
        negative_amphichiral=_flag_model(report.negative_amphichiral),
        ribbon=_flag_model(report.ribbon),
        d_symmetric_seifert=_flag_model(report.d_symmetric_seifert),
        qhs_seifert=_flag_model(report.qhs_seifert),
    )


def two_knot_report(q: TwoKnotInvariants, obstructions: ObstructionReport) -> TwoKnotReport:
    return TwoKnotReport(two_knot=two_knot_to_model(q), obstructions=obstructions_to_model(obstructions))
