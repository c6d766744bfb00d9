"""
Reference constants - значения, которые не вычисляются движком
(слои с b1 >= 2, T^3, сфера Пуанкаре), только для примеров и
проверки препятствий.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from ..errors import UsageError
from .two_knot import TwoKnotInvariants


@dataclass(frozen=True)
class ReferenceConstant:
    name: str
    labels: Tuple[str, ...]
    values: Tuple[Fraction, ...]
    note: str

    def as_dict(self) -> Dict[str, Fraction]:
        return dict(zip(self.labels, self.values))

    @property
    def is_quadruple(self) -> bool:
        return self.labels == QUADRUPLE_LABELS


QUADRUPLE_LABELS = ("d_sigma", "d_sigma_r", "d_sigma_bar", "d_sigma_bar_r")


def _q(*values) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


REFERENCE_CONSTANTS: Dict[str, ReferenceConstant] = {
    c.name: c
    for c in (
        ReferenceConstant(
            "five_twist_spin_trefoil",
            QUADRUPLE_LABELS,
            _q(2, -2, 2, -2),
            "fiber is the Poincaré sphere; neither reversible nor negative amphichiral",
        ),
        ReferenceConstant(
            "six_twist_spin_trefoil",
            QUADRUPLE_LABELS,
            _q(0, -2, 0, -2),
            "stored as stated for the 6-fold branched cover fiber; "
            "the b1/2-shifted fibered formula would give (2, 0, 2, 0)",
        ),
        ReferenceConstant(
            "six_twist_spin_fiber",
            ("d_plus", "d_minus", "b1"),
            _q(1, -1, 2),
            "totally twisted d of the fiber and its reverse",
        ),
        ReferenceConstant(
            "three_torus",
            ("d_twisted", "dtilde_twisted", "dtilde_rank_1", "dtilde_rank_2"),
            (Fraction(1, 2), Fraction(2), Fraction(0), Fraction(0)),
            "same values for both orientations",
        ),
        ReferenceConstant(
            "three_torus_mapping_torus",
            ("dtilde_plus", "dtilde_minus"),
            _q(2, 2),
            "homology S^1 x S^3 fibered by T^3; admits no d-symmetric cross-section",
        ),
        ReferenceConstant(
            "poincare_sphere",
            ("d",),
            _q(2),
            "-1 surgery on the left trefoil",
        ),
    )
}


def reference_names() -> List[str]:
    return sorted(REFERENCE_CONSTANTS)


def reference_constant(name: str) -> ReferenceConstant:
    if name not in REFERENCE_CONSTANTS:
        raise UsageError(f"unknown reference constant '{name}'; known: {', '.join(reference_names())}")
    return REFERENCE_CONSTANTS[name]


def reference_quadruple(name: str) -> TwoKnotInvariants:
    constant = reference_constant(name)
    if not constant.is_quadruple:
        raise UsageError(f"reference constant '{name}' is not a 2-knot quadruple")
    return TwoKnotInvariants.of(*constant.values)
