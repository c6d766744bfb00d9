"""
Surgery engine - усечённые комплексы, mapping cone нулевой хирургии,
градуированные гомологии, V_s и поправочные члены.
"""

from .truncated import (
    TruncatedComplex,
    a_region,
    auto_truncation,
    b_region,
    build_A_plus,
    build_B_plus,
    check_truncation,
    safe_floor,
)
from .maps import maps_v_h
from .cone import OFFSET_A, OFFSET_B, ConeComplex, build_cone
from .homology import (
    GradedChainData,
    GradedModuleSummary,
    GradingHomology,
    cone_chain_data,
    cone_homology,
    grading_homology,
    homology_rank_profile,
    lowest_tower_grading,
    tower_bottoms,
    tower_present,
    tower_rank,
    truncated_chain_data,
)
from .raw import (
    BUILTIN_PREFIX,
    RawTerm,
    RawTwistedComplex,
    builtin_names,
    builtin_not_equal,
    parse_raw_twisted,
    raw_auto_truncation,
    raw_chain_data,
    raw_safe_floor,
    raw_to_dict,
    raw_violations,
    read_raw_twisted_file,
    resolve_raw,
    serialize_raw_twisted,
)
from .engine import (
    StabilityCertificate,
    StabilityResult,
    compute_V,
    compute_V_certified,
    d_totally_twisted_zero_surgery,
    d_twisted_certified,
    stability_run,
    twisted_certified,
    twisted_complex_d,
    untwisted_bottoms_certified,
    untwisted_tower_bottoms,
)

__all__ = [
    "TruncatedComplex",
    "a_region",
    "auto_truncation",
    "b_region",
    "build_A_plus",
    "build_B_plus",
    "check_truncation",
    "safe_floor",
    "maps_v_h",
    "OFFSET_A",
    "OFFSET_B",
    "ConeComplex",
    "build_cone",
    "GradedChainData",
    "GradedModuleSummary",
    "GradingHomology",
    "cone_chain_data",
    "cone_homology",
    "grading_homology",
    "homology_rank_profile",
    "lowest_tower_grading",
    "tower_bottoms",
    "tower_present",
    "tower_rank",
    "truncated_chain_data",
    "BUILTIN_PREFIX",
    "RawTerm",
    "RawTwistedComplex",
    "builtin_names",
    "builtin_not_equal",
    "parse_raw_twisted",
    "raw_auto_truncation",
    "raw_chain_data",
    "raw_safe_floor",
    "raw_to_dict",
    "raw_violations",
    "read_raw_twisted_file",
    "resolve_raw",
    "serialize_raw_twisted",
    "StabilityCertificate",
    "StabilityResult",
    "compute_V",
    "compute_V_certified",
    "d_totally_twisted_zero_surgery",
    "d_twisted_certified",
    "stability_run",
    "twisted_certified",
    "twisted_complex_d",
    "untwisted_bottoms_certified",
    "untwisted_tower_bottoms",
]
