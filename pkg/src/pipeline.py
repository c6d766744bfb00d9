"""
Batch pipeline - обработка входов CLI в пуле потоков.

Каждый вход (catalog:<name>, builtin:<name> или путь к файлу) обрабатывается
независимо: ошибка одного входа превращается в запись отчёта и не
прерывает пакет. Отчёты выдаются в порядке входов.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional, Sequence

from .cfk import CATALOG_PREFIX, catalog_names, corpus_files, mirror, resolve_input, validate
from .cfk.io import format_rational
from .errors import CfkLabError, CfkValidationError, StabilityError
from .invariants import (
    certificates_to_models,
    checks_to_models,
    crosscheck_profile,
    is_d_symmetric_zero_surgery,
    profile_to_model,
    validation_to_model,
    zero_surgery_profile,
)
from .logger import SessionLogger, trace, warn
from .state import BatchReport, InputReport, InputStatus, RunConfig, ValidationModel, ViolationModel
from .surgery import (
    BUILTIN_PREFIX,
    builtin_names,
    compute_V_certified,
    d_twisted_certified,
    resolve_raw,
    twisted_certified,
    untwisted_bottoms_certified,
)

Task = Callable[[str, RunConfig], InputReport]

EXIT_CODES: Dict[InputStatus, int] = {
    InputStatus.OK: 0,
    InputStatus.CHECK_FAILED: 1,
    InputStatus.ERROR: 2,
}


# ============================================================
# Задачи на один вход
# ============================================================

def _invalid_model(e: CfkValidationError, name: str) -> ValidationModel:
    return ValidationModel(
        name=name,
        valid=False,
        homology_rank=-1,
        violations=[ViolationModel(kind=v.kind, subject=v.subject, message=v.message) for v in e.violations],
    )


def error_report(label: str, error: Exception) -> InputReport:
    """Исключение -> отчёт со статусом по коду выхода исключения"""
    exit_code = getattr(error, "exit_code", 2)
    status = InputStatus.CHECK_FAILED if exit_code == 1 else InputStatus.ERROR
    report = InputReport(input=label, status=status, error=str(error), error_kind=type(error).__name__)
    if isinstance(error, CfkValidationError):
        report.validation = _invalid_model(error, label)
    if isinstance(error, StabilityError) and error.certificate is not None:
        report.certificates = [error.certificate.to_model()]
    return report


def validate_task(label: str, config: RunConfig) -> InputReport:
    c = resolve_input(label, check=False)
    result = validate(c)
    report = InputReport(
        input=label,
        status=InputStatus.OK if result.ok else InputStatus.ERROR,
        name=c.name,
        validation=validation_to_model(result),
    )
    if not result.ok:
        report.error = f"invalid complex [{', '.join(result.kinds())}]"
        report.error_kind = CfkValidationError.__name__
    return report


def profile_task(label: str, config: RunConfig) -> InputReport:
    c = resolve_input(label)
    profile = zero_surgery_profile(c, config.truncation, config.stability_rounds)
    checks = crosscheck_profile(c, config.truncation, config.stability_rounds, profile)
    return InputReport(
        input=label,
        status=InputStatus.OK if checks.passed else InputStatus.CHECK_FAILED,
        name=c.name,
        profile=profile_to_model(profile),
        checks=checks_to_models(checks),
        d_symmetric=is_d_symmetric_zero_surgery(c, profile=profile),
        certificates=certificates_to_models(checks.certificates),
    )


def v0_task(label: str, config: RunConfig) -> InputReport:
    c = resolve_input(label)
    plus = compute_V_certified(c, 0, config.truncation, config.stability_rounds)
    minus = compute_V_certified(mirror(c), 0, config.truncation, config.stability_rounds)
    return InputReport(
        input=label,
        status=InputStatus.OK,
        name=c.name,
        v0=plus.value,
        v0_mirror=minus.value,
        certificates=[plus.certificate.to_model(), minus.certificate.to_model()],
    )


def cone_d_task(label: str, config: RunConfig) -> InputReport:
    c = resolve_input(label)
    twisted = d_twisted_certified(c, config.truncation, config.stability_rounds)
    bottoms = untwisted_bottoms_certified(c, config.truncation, config.stability_rounds)
    return InputReport(
        input=label,
        status=InputStatus.OK,
        name=c.name,
        d_twisted=format_rational(twisted.value),
        untwisted_bottoms=[format_rational(b) for b in bottoms.value],
        certificates=[twisted.certificate.to_model(), bottoms.certificate.to_model()],
    )


def twisted_d_task(label: str, config: RunConfig) -> InputReport:
    raw = resolve_raw(label)
    result = twisted_certified(raw, config.truncation, config.stability_rounds)
    return InputReport(
        input=label,
        status=InputStatus.OK,
        name=raw.name,
        d=format_rational(result.value),
        certificates=[result.certificate.to_model()],
    )


def check_all_task(label: str, config: RunConfig) -> InputReport:
    """validate + profile + crosscheck + d-симметричность; builtin:* - только d"""
    if label.startswith(BUILTIN_PREFIX):
        return twisted_d_task(label, config)
    checked = validate_task(label, config)
    if checked.status != InputStatus.OK:
        return checked
    report = profile_task(label, config)
    report.validation = checked.validation
    return report


TASKS: Dict[str, Task] = {
    "validate": validate_task,
    "profile": profile_task,
    "v0": v0_task,
    "cone-d": cone_d_task,
    "twisted-d": twisted_d_task,
    "check-all": check_all_task,
}


# ============================================================
# Пакетный запуск
# ============================================================

def _run_one(task: Task, label: str, config: RunConfig) -> InputReport:
    try:
        return task(label, config)
    except CfkLabError as e:
        trace("Pipeline", f"{label}: {type(e).__name__}: {e}")
        return error_report(label, e)
    except Exception as e:
        warn("Pipeline", f"{label}: unexpected {type(e).__name__}: {e}")
        return error_report(label, e)


def check_all_inputs(config: RunConfig) -> List[str]:
    """Весь каталог, встроенные сырые комплексы и пользовательский корпус"""
    labels = [f"{CATALOG_PREFIX}{name}" for name in catalog_names()]
    labels += [f"{BUILTIN_PREFIX}{name}" for name in builtin_names()]
    if config.catalog_dir:
        labels += [str(p) for p in corpus_files(config.catalog_dir)]
    return labels


def summarize(reports: Sequence[InputReport]) -> Dict[str, int]:
    counts = {status.value: 0 for status in InputStatus}
    for r in reports:
        counts[r.status.value] += 1
    counts["inputs"] = len(reports)
    return counts


def run_batch(
    command: str,
    labels: Sequence[str],
    config: RunConfig,
    session: Optional[SessionLogger] = None,
) -> BatchReport:
    """
    Запускает задачу команды на всех входах параллельно.
    Код выхода - максимум по входам (0 < 1 < 2).
    """
    task = TASKS[command]
    reports: List[Optional[InputReport]] = [None] * len(labels)
    trace("Pipeline", f"{command}: {len(labels)} input(s), {config.max_workers} worker(s)")

    with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
        futures = {
            executor.submit(_run_one, task, label, config): index
            for index, label in enumerate(labels)
        }
        for future in as_completed(futures):
            index = futures[future]
            report = future.result()
            reports[index] = report
            trace("Pipeline", f"{labels[index]} -> {report.status.value}")
            if session is not None:
                if report.status == InputStatus.ERROR:
                    session.log_entry(labels[index], error=report.error)
                else:
                    session.log_entry(labels[index], report=report.model_dump(mode="json", exclude_none=True))

    exit_code = max((EXIT_CODES[r.status] for r in reports), default=0)
    counts = summarize(reports)
    if session is not None:
        session.log_summary(exit_code, counts)
    return BatchReport(command=command, reports=list(reports), exit_code=exit_code, summary=counts)
