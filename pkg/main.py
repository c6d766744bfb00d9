#!/usr/bin/env python3
"""
cfklab - CLI

Поправочные члены нулевой и ±1-хирургий на узлах по комплексам CFK∞,
инварианты 2-узлов и препятствия к симметриям.

Команды:
    validate   FILE|catalog:<name> ...   проверка комплексов
    profile    FILE|catalog:<name> ...   профиль Y_0(K) + перекрёстные проверки
    v0         FILE|catalog:<name> ...   V_0(K) и V_0(mirror K)
    cone-d     FILE|catalog:<name> ...   d по скрученному конусу и низы башен
    twisted-d  FILE|builtin:<name> ...   d(·; Λ) сырого скрученного комплекса
    two-knot   --qhs-d | --fiber-d-plus/--fiber-d-minus/--b1 | --quadruple | --reference | --surgery-fiber
    catalog    list | show <name>
    check-all  весь каталог, builtin:not_equal и CFKLAB_CATALOG_DIR

Запуск:
    python main.py profile catalog:trefoil_right
    python main.py two-knot --qhs-d 2 --format table
    python main.py check-all --debug --log-session nightly

Коды выхода: 0 - успех, 1 - провал математической проверки, 2 - ошибка входа.
"""

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Iterator, List, Optional, Sequence

# Загружаем переменные окружения
from dotenv import load_dotenv
load_dotenv()

from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.table import Table

from src.cfk import catalog_get, catalog_names, cfk_to_dict, mirror, parse_rational, resolve_input
from src.config import get_settings
from src.errors import CfkLabError, UsageError
from src.invariants import (
    fibered_two_knot,
    obstruction_report,
    pm_one_surgery_d,
    qhs_fiber_two_knot,
    reference_quadruple,
    two_knot_report,
)
from src.invariants.two_knot import TwoKnotInvariants
from src.logger import SessionLogger, set_debug, trace
from src.pipeline import TASKS, check_all_inputs, run_batch
from src.state import BatchReport, InputReport, InputStatus, OutputFormat, RunConfig, TwoKnotReport
from src.tools import get_computation_logger

_error_console = Console(stderr=True, highlight=False)


# ============================================================
# Аргументы
# ============================================================

def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--truncation", type=int, help="Уровень усечения N (не ниже безопасного порога)")
    parent.add_argument("--stability-rounds", type=int, help="Число раундов удвоения N (>= 2)")
    parent.add_argument("--format", choices=[f.value for f in OutputFormat], help="json (по умолчанию) или table")
    parent.add_argument("--out", help="Записать отчёт в файл вместо stdout")
    parent.add_argument("--debug", action="store_true", help="Диагностика [Component] в stderr")
    parent.add_argument("--log-session", metavar="TAG", help="JSON-лог сессии logs/cfklab_session_<TAG>.json")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="cfklab",
        description="Correction terms of zero-surgeries and 2-knot invariants from CFK complexes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("validate", "Проверить комплексы"),
        ("profile", "Профиль нулевой хирургии и проверки"),
        ("v0", "V_0 узла и зеркального узла"),
        ("cone-d", "d по скрученному конусу и низы нескрученных башен"),
        ("twisted-d", "d(·; Λ) сырого скрученного комплекса"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("inputs", nargs="+", help="Файл, catalog:<name> или builtin:<name>")

    two_knot = sub.add_parser("two-knot", parents=[common], help="Инварианты 2-узла и препятствия")
    two_knot.add_argument("--qhs-d", help="d слоя - рациональной гомологической сферы, 'p/q'")
    two_knot.add_argument("--fiber-d-plus", help="d(Y; Λ) слоя")
    two_knot.add_argument("--fiber-d-minus", help="d(-Y; Λ) слоя")
    two_knot.add_argument("--b1", type=int, help="b1(Y) слоя")
    two_knot.add_argument("--quadruple", nargs=4, metavar="D", help="d(Σ) d(Σ^r) d(Σ̄) d(Σ̄^r)")
    two_knot.add_argument("--reference", help="Четвёрка из таблицы констант")
    two_knot.add_argument("--surgery-fiber", metavar="INPUT", help="Слой - ±1-хирургия на узле (FILE|catalog:<name>)")
    two_knot.add_argument("--sign", type=int, choices=[1, -1], default=-1, help="Знак хирургии для --surgery-fiber")

    catalog = sub.add_parser("catalog", parents=[common], help="Встроенный каталог")
    catalog.add_argument("action", choices=["list", "show"])
    catalog.add_argument("name", nargs="?", help="Имя для show")

    check_all = sub.add_parser("check-all", parents=[common], help="Полный набор проверок")
    check_all.add_argument("--catalog-dir", help="Каталог пользовательских комплексов (иначе CFKLAB_CATALOG_DIR)")
    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    """Settings из окружения + флаги CLI -> RunConfig"""
    settings = get_settings()
    try:
        return RunConfig(
            truncation=args.truncation if args.truncation is not None else settings.truncation,
            stability_rounds=args.stability_rounds if args.stability_rounds is not None else settings.stability_rounds,
            output_format=args.format or settings.output_format,
            input_paths=list(getattr(args, "inputs", None) or []),
            max_workers=settings.max_workers,
            catalog_dir=getattr(args, "catalog_dir", None) or settings.catalog_dir,
            out=args.out,
            logs_dir=settings.logs_dir,
            log_session=args.log_session,
            debug=args.debug or settings.debug,
        )
    except ValidationError as e:
        first = e.errors()[0]
        raise UsageError(f"invalid option {'.'.join(str(p) for p in first['loc'])}: {first['msg']}")


# ============================================================
# Вывод
# ============================================================

@contextmanager
def _output(config: RunConfig) -> Iterator:
    if config.out:
        try:
            handle = open(config.out, "w", encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot write {config.out}: {e}")
        with handle:
            yield handle
    else:
        yield sys.stdout


def emit_json(model: BaseModel, config: RunConfig) -> None:
    text = json.dumps(model.model_dump(mode="json", exclude_none=True), ensure_ascii=False, indent=2)
    with _output(config) as handle:
        handle.write(text + "\n")


def emit_table(table: Table, config: RunConfig) -> None:
    with _output(config) as handle:
        Console(file=handle, width=160, highlight=False).print(table)


def _status_cell(status: InputStatus) -> str:
    style = {InputStatus.OK: "green", InputStatus.CHECK_FAILED: "yellow", InputStatus.ERROR: "red"}[status]
    return f"[{style}]{status.value}[/{style}]"


def batch_table(batch: BatchReport) -> Table:
    """Таблица по входам; колонки зависят от команды"""
    table = Table(title=f"cfklab {batch.command} (exit {batch.exit_code})")
    table.add_column("input")
    table.add_column("status")
    table.add_column("name")
    table.add_column("result")

    def result_of(r: InputReport) -> str:
        if r.error and r.status == InputStatus.ERROR:
            return f"{r.error_kind}: {r.error}"
        parts = []
        if r.profile:
            p = r.profile
            parts.append(f"V0={p.v0} V0(m)={p.v0_mirror}")
            parts.append(f"d=({p.d_untwisted_plus}, {p.d_twisted_plus}, {p.d_untwisted_minus}, {p.d_twisted_minus})")
            parts.append(f"d~=({p.dtilde_untwisted_plus}, {p.dtilde_twisted_plus}, "
                         f"{p.dtilde_untwisted_minus}, {p.dtilde_twisted_minus})")
        elif r.validation:
            parts.append(f"valid={r.validation.valid} rank={r.validation.homology_rank}")
        if r.v0 is not None:
            parts.append(f"V0={r.v0} V0(m)={r.v0_mirror}")
        if r.d_twisted is not None:
            parts.append(f"d(Λ)={r.d_twisted} bottoms={r.untwisted_bottoms}")
        if r.d is not None:
            parts.append(f"d={r.d}")
        failed = [c.name for c in r.checks if c.status.value == "fail"]
        if r.checks:
            parts.append(f"checks {len(r.checks) - len(failed)}/{len(r.checks)}" + (f" failed {failed}" if failed else ""))
        if r.d_symmetric is not None:
            parts.append(f"d-symmetric={r.d_symmetric}")
        if r.error and r.status == InputStatus.CHECK_FAILED:
            parts.append(r.error)
        return "\n".join(parts)

    for r in batch.reports:
        table.add_row(r.input, _status_cell(r.status), r.name or "", result_of(r))
    return table


def two_knot_table(report: TwoKnotReport) -> Table:
    table = Table(title="2-knot invariants")
    table.add_column("quantity")
    table.add_column("value")
    q = report.two_knot
    for label, value in (("d(Σ)", q.d_sigma), ("d(Σ^r)", q.d_sigma_r), ("d(Σ̄)", q.d_sigma_bar), ("d(Σ̄^r)", q.d_sigma_bar_r)):
        table.add_row(label, value)
    for name, flag in report.obstructions:
        value = "[red]obstructed[/red]" if flag.obstructed else "-"
        if flag.obstructed:
            value += f"  {flag.identity}: {', '.join(flag.values or [])}"
        table.add_row(name, value)
    return table


# ============================================================
# Команды
# ============================================================

def _start_session(config: RunConfig, command: str) -> Optional[SessionLogger]:
    if not config.log_session:
        return None
    session = SessionLogger(config.logs_dir)
    path = session.start_session(config.log_session, command, config.model_dump(mode="json"))
    trace("CLI", f"session log {path}")
    return session


def cmd_batch(command: str, config: RunConfig, labels: Sequence[str]) -> int:
    session = _start_session(config, command)
    batch = run_batch(command, labels, config, session)
    if config.output_format == OutputFormat.TABLE:
        emit_table(batch_table(batch), config)
    else:
        emit_json(batch, config)
    return batch.exit_code


def cmd_profile(paths: Sequence[str], config: RunConfig) -> int:
    """Профиль + перекрёстные проверки по каждому входу"""
    return cmd_batch("profile", config, paths)


def cmd_check_all(config: RunConfig) -> int:
    """Каталог, встроенные сырые комплексы и пользовательский корпус"""
    return cmd_batch("check-all", config, check_all_inputs(config))


def _two_knot_invariants(args: argparse.Namespace, config: RunConfig) -> TwoKnotInvariants:
    chosen = [
        flag for flag, present in (
            ("--qhs-d", args.qhs_d is not None),
            ("--fiber-d-plus", args.fiber_d_plus is not None or args.fiber_d_minus is not None or args.b1 is not None),
            ("--quadruple", args.quadruple is not None),
            ("--reference", args.reference is not None),
            ("--surgery-fiber", args.surgery_fiber is not None),
        ) if present
    ]
    if len(chosen) != 1:
        raise UsageError("two-knot needs exactly one of --qhs-d, --fiber-d-plus/--fiber-d-minus/--b1, "
                         "--quadruple, --reference, --surgery-fiber")
    if args.qhs_d is not None:
        return qhs_fiber_two_knot(_rational(args.qhs_d, "--qhs-d"))
    if args.quadruple is not None:
        return TwoKnotInvariants.of(*(_rational(v, "--quadruple") for v in args.quadruple))
    if args.reference is not None:
        return reference_quadruple(args.reference)
    if args.surgery_fiber is not None:
        c = resolve_input(args.surgery_fiber)
        return qhs_fiber_two_knot(pm_one_surgery_d(c, args.sign, config.truncation, config.stability_rounds))
    if args.fiber_d_plus is None or args.fiber_d_minus is None or args.b1 is None:
        raise UsageError("fibered 2-knot needs --fiber-d-plus, --fiber-d-minus and --b1")
    return fibered_two_knot(
        _rational(args.fiber_d_plus, "--fiber-d-plus"),
        _rational(args.fiber_d_minus, "--fiber-d-minus"),
        args.b1,
    )


def _rational(text: str, what: str):
    try:
        return parse_rational(text, what)
    except CfkLabError as e:
        raise UsageError(str(e))


def cmd_two_knot(args: argparse.Namespace, config: RunConfig) -> int:
    session = _start_session(config, "two-knot")
    q = _two_knot_invariants(args, config)
    report = two_knot_report(q, obstruction_report(q))
    if session is not None:
        session.log_entry("two-knot", report=report.model_dump(mode="json", exclude_none=True))
        session.log_summary(0, {"inputs": 1})
    if config.output_format == OutputFormat.TABLE:
        emit_table(two_knot_table(report), config)
    else:
        emit_json(report, config)
    return 0


class CatalogListing(BaseModel):
    names: List[str]


def cmd_catalog(args: argparse.Namespace, config: RunConfig) -> int:
    if args.action == "list":
        if config.output_format == OutputFormat.TABLE:
            table = Table(title="catalog")
            for column in ("name", "generators", "terms", "genus bound"):
                table.add_column(column)
            for name in catalog_names():
                c = catalog_get(name)
                table.add_row(name, str(len(c.generators)), str(len(c.differential)), str(c.genus_bound))
            emit_table(table, config)
        else:
            emit_json(CatalogListing(names=catalog_names()), config)
        return 0

    if not args.name:
        raise UsageError("catalog show needs a name")
    c = catalog_get(args.name)
    if config.output_format == OutputFormat.TABLE:
        table = Table(title=f"{c.name} (mirror: {mirror(c).name})")
        for column in ("id", "maslov", "alexander", "∂", "σ"):
            table.add_column(column)
        data = cfk_to_dict(c)
        for g in data["generators"]:
            terms = [f"U^{t['upower']}·{t['to']}" for t in data["differential"] if t["from"] == g["id"]]
            table.add_row(g["id"], str(g["maslov"]), str(g["alexander"]), " + ".join(terms), c.sigma[g["id"]])
        emit_table(table, config)
    else:
        with _output(config) as handle:
            handle.write(json.dumps(cfk_to_dict(c), ensure_ascii=False, indent=2) + "\n")
    return 0


def run(args: argparse.Namespace) -> int:
    config = build_config(args)
    set_debug(config.debug)
    trace("CLI", f"command {args.command}, truncation={config.truncation}, rounds={config.stability_rounds}")

    if args.command == "check-all":
        code = cmd_check_all(config)
    elif args.command == "profile":
        code = cmd_profile(config.input_paths, config)
    elif args.command in TASKS:
        code = cmd_batch(args.command, config, config.input_paths)
    elif args.command == "two-knot":
        code = cmd_two_knot(args, config)
    else:
        code = cmd_catalog(args, config)

    for operation, stats in get_computation_logger().get_summary().items():
        trace("Computation", f"{operation}: {stats['calls']} call(s), {stats['failures']} failed, {stats['total_ms']} ms")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; возвращает код выхода"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return run(args)
    except CfkLabError as e:
        _error_console.print(f"[CLI] {type(e).__name__}: {e}", markup=False, style="bold red")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
