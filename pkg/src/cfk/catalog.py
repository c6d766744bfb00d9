"""
Catalog - встроенные комплексы и пользовательский корпус.
"""

from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Union

from ..errors import UsageError
from ..logger import trace
from .constructions import acyclic_square, direct_sum, mirror, staircase
from .io import read_cfk_file
from .model import CfkComplex, DiffTerm, FlipInvolution, Generator

CATALOG_PREFIX = "catalog:"


def _unknot() -> CfkComplex:
    return CfkComplex("unknot", (Generator("u", 0, 0),))


def _trefoil_right() -> CfkComplex:
    # ∂b = U·a + c, σ: a <-> c
    return CfkComplex(
        "trefoil_right",
        (Generator("a", 0, 1), Generator("b", -1, 0), Generator("c", -2, -1)),
        (DiffTerm("b", "a", 1), DiffTerm("b", "c", 0)),
        FlipInvolution((("a", "c"),)),
    )


def _trefoil_left() -> CfkComplex:
    return mirror(_trefoil_right()).with_name("trefoil_left")


def _figure8() -> CfkComplex:
    square = CfkComplex(
        "figure8_square",
        (
            Generator("a", 0, 0),
            Generator("b", -1, -1),
            Generator("c", 1, 1),
            Generator("e", 0, 0),
        ),
        (
            DiffTerm("a", "b", 0),
            DiffTerm("a", "c", 1),
            DiffTerm("c", "e", 0),
            DiffTerm("b", "e", 1),
        ),
        FlipInvolution((("b", "c"),)),
    )
    return direct_sum(_unknot(), square, name="figure8")


def _whitehead_double_trefoil_model() -> CfkComplex:
    return direct_sum(_trefoil_right(), acyclic_square(0), name="whitehead_double_trefoil_model")


def _torus_2_5() -> CfkComplex:
    return staircase([1, 1, 1, 1]).with_name("torus_2_5")


_BUILDERS: Dict[str, Callable[[], CfkComplex]] = {
    "unknot": _unknot,
    "trefoil_right": _trefoil_right,
    "trefoil_left": _trefoil_left,
    "figure8": _figure8,
    "whitehead_double_trefoil_model": _whitehead_double_trefoil_model,
    "torus_2_5": _torus_2_5,
}


def catalog_names() -> List[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def catalog_get(name: str) -> CfkComplex:
    """Встроенный комплекс по имени"""
    if name.startswith(CATALOG_PREFIX):
        name = name[len(CATALOG_PREFIX):]
    builder = _BUILDERS.get(name)
    if builder is None:
        raise UsageError(f"unknown catalog entry '{name}' (known: {', '.join(_BUILDERS)})")
    trace("Catalog", f"building {name}")
    return builder()


def resolve_input(label: str, check: bool = True) -> CfkComplex:
    """'catalog:<name>' или путь к CFK-файлу"""
    if label.startswith(CATALOG_PREFIX):
        return catalog_get(label)
    return read_cfk_file(label, check)


def corpus_files(directory: Union[str, Path]) -> List[Path]:
    """Файлы .cfk/.json пользовательского корпуса в детерминированном порядке"""
    root = Path(directory)
    if not root.is_dir():
        raise UsageError(f"catalog directory '{directory}' does not exist")
    return sorted(p for p in root.iterdir() if p.suffix in (".cfk", ".json") and p.is_file())
