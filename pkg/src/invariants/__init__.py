"""
Invariant suite - профили нулевой хирургии, перекрёстные проверки,
инварианты 2-узлов и препятствия.
"""

from .profile import (
    ZeroSurgeryProfile,
    is_d_symmetric_zero_surgery,
    pm_one_surgery_d,
    shifted_d,
    unshifted_d,
    zero_surgery_profile,
)
from .checks import CheckReport, CheckResult, crosscheck_profile
from .two_knot import (
    ObstructionFlag,
    ObstructionReport,
    TwoKnotInvariants,
    fibered_two_knot,
    obstruction_report,
    qhs_fiber_two_knot,
    ribbon_consistent,
)
from .constants import (
    REFERENCE_CONSTANTS,
    ReferenceConstant,
    reference_constant,
    reference_names,
    reference_quadruple,
)
from .report import (
    certificates_to_models,
    checks_to_models,
    obstructions_to_model,
    profile_to_model,
    two_knot_report,
    two_knot_to_model,
    validation_to_model,
)

__all__ = [
    "ZeroSurgeryProfile",
    "is_d_symmetric_zero_surgery",
    "pm_one_surgery_d",
    "shifted_d",
    "unshifted_d",
    "zero_surgery_profile",
    "CheckReport",
    "CheckResult",
    "crosscheck_profile",
    "ObstructionFlag",
    "ObstructionReport",
    "TwoKnotInvariants",
    "fibered_two_knot",
    "obstruction_report",
    "qhs_fiber_two_knot",
    "ribbon_consistent",
    "REFERENCE_CONSTANTS",
    "ReferenceConstant",
    "reference_constant",
    "reference_names",
    "reference_quadruple",
    "certificates_to_models",
    "checks_to_models",
    "obstructions_to_model",
    "profile_to_model",
    "two_knot_report",
    "two_knot_to_model",
    "validation_to_model",
]
