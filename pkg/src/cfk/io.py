"""
CFK file format - JSON-кодек комплексов.

Схема файла описана pydantic-моделями; parse_cfk проверяет синтаксис,
схему и затем validate(). serialize_cfk выдаёт канонический JSON
(отсортированные id и слагаемые, неподвижные точки σ опущены).
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import CfkFormatError, CfkValidationError
from .model import CfkComplex, DiffTerm, FlipInvolution, Generator
from .validate import validate


# ============================================================
# Pydantic-схема файла
# ============================================================

class GeneratorModel(BaseModel):
    """Генератор в файле"""
    model_config = ConfigDict(extra="forbid")

    id: str = Field(min_length=1, description="Уникальный id генератора")
    maslov: Union[int, str] = Field(description="Градуировка Маслова: целое или строка 'p/2'")
    alexander: int = Field(description="Градуировка Александера")


class DiffTermModel(BaseModel):
    """Слагаемое дифференциала в файле"""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    source: str = Field(alias="from", description="id источника")
    to: str = Field(description="id цели")
    upower: int = Field(default=0, description="Степень U")


class CfkFileModel(BaseModel):
    """CFK-файл целиком"""
    model_config = ConfigDict(extra="forbid")

    name: str = Field(description="Имя комплекса")
    generators: List[GeneratorModel] = Field(description="Генераторы")
    differential: List[DiffTermModel] = Field(default_factory=list, description="Слагаемые ∂")
    flip: List[Tuple[str, str]] = Field(default_factory=list, description="Пары σ")


def parse_rational(value: Union[int, str], what: str = "value") -> Fraction:
    """'p/q', '-3/2', целое или строка целого -> Fraction"""
    if isinstance(value, bool):
        raise CfkFormatError(f"{what}: boolean is not a rational")
    try:
        return Fraction(str(value).strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError):
        raise CfkFormatError(f"{what}: malformed rational '{value}'")


def format_rational(value: Fraction) -> str:
    """Fraction -> 'p/q' в несократимом виде, целые как 'n'"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _from_model(model: CfkFileModel) -> CfkComplex:
    generators = []
    for g in model.generators:
        maslov = parse_rational(g.maslov, f"maslov of '{g.id}'")
        if (2 * maslov).denominator != 1:
            raise CfkFormatError(f"maslov of '{g.id}' must have denominator dividing 2, got {maslov}")
        generators.append(Generator(g.id, maslov, g.alexander))
    terms = [DiffTerm(t.source, t.to, t.upower) for t in model.differential]
    return CfkComplex(model.name, tuple(generators), tuple(terms), FlipInvolution.from_pairs(model.flip))


def load_cfk(text: str) -> CfkComplex:
    """Разбор без validate(): синтаксис и схема"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise CfkFormatError(f"invalid JSON: {e.msg}", e.lineno, e.colno)
    try:
        model = CfkFileModel.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise CfkFormatError(f"schema error at '{where}': {first['msg']}")
    return _from_model(model)


def parse_cfk(text: str) -> CfkComplex:
    """Текст CFK-файла -> проверенный комплекс"""
    c = load_cfk(text)
    report = validate(c)
    if not report.ok:
        raise CfkValidationError(list(report.violations))
    return c


def read_cfk_file(path: Union[str, Path], check: bool = True) -> CfkComplex:
    """check=False - только синтаксис и схема (для команды validate)"""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CfkFormatError(f"cannot read {path}: {e}")
    return parse_cfk(text) if check else load_cfk(text)


def cfk_to_dict(c: CfkComplex) -> dict:
    """Каноническое представление для JSON"""
    generators = sorted(c.generators, key=lambda g: g.id)
    terms = sorted(c.differential, key=lambda t: (t.source, t.target, t.upower))
    return {
        "name": c.name,
        "generators": [
            {
                "id": g.id,
                "maslov": g.maslov.numerator if g.maslov.denominator == 1 else format_rational(g.maslov),
                "alexander": g.alexander,
            }
            for g in generators
        ],
        "differential": [{"from": t.source, "to": t.target, "upower": t.upower} for t in terms],
        "flip": [list(p) for p in c.flip.canonical_pairs()],
    }


def serialize_cfk(c: CfkComplex) -> str:
    """Канонический JSON; serialize_cfk(parse_cfk(x)) - неподвижная точка"""
    return json.dumps(cfk_to_dict(c), ensure_ascii=False, indent=2) + "\n"
