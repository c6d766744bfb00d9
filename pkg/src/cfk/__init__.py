"""
CFK model - комплексы CFK∞, их формат, проверка и конструкции.
"""

from .model import CfkComplex, DiffTerm, FlipInvolution, Generator
from .validate import ValidationReport, u_inverted_homology, validate
from .io import (
    cfk_to_dict,
    format_rational,
    load_cfk,
    parse_cfk,
    parse_rational,
    read_cfk_file,
    serialize_cfk,
)
from .constructions import (
    acyclic_square,
    direct_sum,
    isomorphic,
    knot_floer_ranks,
    mirror,
    staircase,
    tensor,
)
from .catalog import CATALOG_PREFIX, catalog_get, catalog_names, corpus_files, resolve_input

__all__ = [
    "CfkComplex",
    "DiffTerm",
    "FlipInvolution",
    "Generator",
    "ValidationReport",
    "u_inverted_homology",
    "validate",
    "cfk_to_dict",
    "format_rational",
    "load_cfk",
    "parse_cfk",
    "parse_rational",
    "read_cfk_file",
    "serialize_cfk",
    "acyclic_square",
    "direct_sum",
    "isomorphic",
    "knot_floer_ranks",
    "mirror",
    "staircase",
    "tensor",
    "CATALOG_PREFIX",
    "catalog_get",
    "catalog_names",
    "corpus_files",
    "resolve_input",
]
