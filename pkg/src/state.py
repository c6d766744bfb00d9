"""
State - перечисления, конфигурация запуска и модели отчётов.
Всё, что уходит в stdout или лог сессии, описано здесь pydantic-моделями
с фиксированным порядком полей.
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


# ============================================================
# Enums
# ============================================================

class CoefficientMode(str, Enum):
    """Коэффициенты конуса"""
    UNTWISTED = "untwisted"  # t = 1, над F2
    TWISTED = "twisted"  # над F2[t, t^-1]


class OutputFormat(str, Enum):
    JSON = "json"
    TABLE = "table"


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class OpTag(str, Enum):
    """Операции, которые умеет сертифицировать stability_run"""
    COMPUTE_V = "compute_V"
    D_TWISTED = "d_totally_twisted"
    UNTWISTED_BOTTOMS = "untwisted_bottoms"
    TWISTED_COMPLEX_D = "twisted_complex_d"


class InputStatus(str, Enum):
    """Итог обработки одного входа; порядок совпадает с кодами выхода"""
    OK = "ok"
    CHECK_FAILED = "check_failed"
    ERROR = "error"


# ============================================================
# Конфигурация запуска
# ============================================================

class RunConfig(BaseModel):
    """Настройки одного запуска CLI (env + флаги)"""
    truncation: Optional[int] = Field(default=None, ge=1, description="Переопределение уровня усечения N")
    stability_rounds: int = Field(default=2, ge=2, description="Число раундов удвоения N")
    output_format: OutputFormat = Field(default=OutputFormat.JSON, description="Формат вывода")
    input_paths: List[str] = Field(default_factory=list, description="Файлы или catalog:<name>")
    max_workers: int = Field(default=4, ge=1, description="Размер пула потоков")
    catalog_dir: Optional[str] = Field(default=None, description="Каталог пользовательских комплексов")
    out: Optional[str] = Field(default=None, description="Файл для отчёта вместо stdout")
    logs_dir: str = Field(default="logs", description="Каталог логов сессий")
    log_session: Optional[str] = Field(default=None, description="Тег лога сессии")
    debug: bool = Field(default=False, description="Диагностика в stderr")


# ============================================================
# Модели отчётов
# ============================================================

class CertificateModel(BaseModel):
    """Сертификат устойчивости к удвоению N"""
    op: OpTag
    subject: str
    truncations: List[int]
    values: List[str]
    stable: bool


class ViolationModel(BaseModel):
    kind: str
    subject: str
    message: str


class ValidationModel(BaseModel):
    name: str
    valid: bool
    homology_rank: int
    violations: List[ViolationModel]


class ProfileModel(BaseModel):
    """Поправочные члены нулевой хирургии, рациональные числа как 'p/q'"""
    v0: int
    v0_mirror: int
    d_untwisted_plus: str
    d_twisted_plus: str
    d_untwisted_minus: str
    d_twisted_minus: str
    dtilde_untwisted_plus: str
    dtilde_twisted_plus: str
    dtilde_untwisted_minus: str
    dtilde_twisted_minus: str


class CheckModel(BaseModel):
    name: str
    status: CheckStatus
    lhs: str
    rhs: str


class TwoKnotModel(BaseModel):
    d_sigma: str
    d_sigma_r: str
    d_sigma_bar: str
    d_sigma_bar_r: str


class ObstructionFlagModel(BaseModel):
    obstructed: bool
    identity: Optional[str] = None
    values: Optional[List[str]] = None


class ObstructionsModel(BaseModel):
    reversible: ObstructionFlagModel
    positive_amphichiral: ObstructionFlagModel
    negative_amphichiral: ObstructionFlagModel
    ribbon: ObstructionFlagModel
    d_symmetric_seifert: ObstructionFlagModel
    qhs_seifert: ObstructionFlagModel


class InputReport(BaseModel):
    """Отчёт по одному входу пакетной команды"""
    input: str
    status: InputStatus
    name: Optional[str] = None
    validation: Optional[ValidationModel] = None
    profile: Optional[ProfileModel] = None
    checks: List[CheckModel] = Field(default_factory=list)
    d_symmetric: Optional[bool] = None
    v0: Optional[int] = None
    v0_mirror: Optional[int] = None
    d_twisted: Optional[str] = None
    untwisted_bottoms: Optional[List[str]] = None
    d: Optional[str] = None
    certificates: List[CertificateModel] = Field(default_factory=list)
    error: Optional[str] = None
    error_kind: Optional[str] = None


class TwoKnotReport(BaseModel):
    two_knot: TwoKnotModel
    obstructions: ObstructionsModel


class BatchReport(BaseModel):
    """Все отчёты одного запуска в порядке входов"""
    command: str
    reports: List[InputReport]
    exit_code: int
    summary: dict = Field(default_factory=dict)


