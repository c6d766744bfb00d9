"""
Errors - иерархия исключений cfklab.
Библиотека бросает исключения, CLI/пайплайн ловит их по одному входу
и превращает в код выхода (2 - ошибка входа, 1 - провал проверки).
"""

from dataclasses import dataclass
from typing import List, Optional


class CfkLabError(Exception):
    """Базовое исключение пакета"""

    exit_code: int = 2


class UsageError(CfkLabError):
    """Некорректные аргументы CLI или рациональные числа"""


class DimensionError(CfkLabError):
    """Несогласованные размеры матрицы и вектора"""


class CfkFormatError(CfkLabError):
    """Синтаксическая ошибка или нарушение схемы CFK-файла"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Violation:
    """Одно нарушенное свойство комплекса"""
    kind: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.subject}: {self.message}"


class CfkValidationError(CfkLabError):
    """Комплекс не проходит validate()"""

    def __init__(self, violations: List[Violation]):
        self.violations = list(violations)
        kinds = ", ".join(sorted({v.kind for v in self.violations}))
        first = str(self.violations[0]) if self.violations else "unknown violation"
        super().__init__(f"invalid complex [{kinds}]: {first}")


class TruncationError(CfkLabError):
    """Уровень усечения N ниже безопасного порога"""


class StabilityError(CfkLabError):
    """Результат меняется при удвоении N в последнем раунде"""

    exit_code = 1

    def __init__(self, message: str, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class InvariantError(CfkLabError):
    """Значение нарушает инвариант своего типа"""
