"""
Session Logger - диагностика и JSON-логи сессий cfklab.

Диагностика: строки вида "[Component] сообщение" в stderr через rich,
только в режиме отладки (stdout остаётся детерминированным JSON).
Сессия: один JSON-файл на запуск CLI, дописывается после каждой записи.
"""

import json
import threading
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

from rich.console import Console

_stderr_console = Console(stderr=True, highlight=False)
_debug_enabled = False


def set_debug(enabled: bool) -> None:
    """Включает/выключает диагностику в stderr"""
    global _debug_enabled
    _debug_enabled = bool(enabled)


def trace(component: str, message: str) -> None:
    """Печатает "[Component] message" в stderr, если включена отладка"""
    if _debug_enabled:
        _stderr_console.print(f"[{component}] {message}", markup=False, style="dim")


def warn(component: str, message: str) -> None:
    """Предупреждения печатаются всегда"""
    _stderr_console.print(f"[{component}] {message}", markup=False, style="yellow")


class SessionLogger:
    """
    Логгер сессии CLI.
    Формат: command, config, entries (отчёт или ошибка на каждый вход), summary.
    """

    def __init__(self, logs_dir: str = "logs"):
        self.logs_dir = Path(logs_dir)
        self.current_session: Dict[str, Any] = {}
        self.session_file: Optional[Path] = None
        self._lock = threading.Lock()

    def start_session(self, tag: str, command: str, config: Dict[str, Any]) -> str:
        """Начинает новую сессию и сразу пишет заготовку файла"""
        self.logs_dir.mkdir(parents=True, exist_ok=True)
        self.session_file = self.logs_dir / f"cfklab_session_{tag}.json"
        self.current_session = {
            "tag": tag,
            "command": command,
            "started_at": datetime.now().isoformat(timespec="seconds"),
            "config": config,
            "entries": [],
            "summary": None,
        }
        self._save()
        trace("Session", f"log file {self.session_file}")
        return str(self.session_file)

    def log_entry(self, input_label: str, report: Optional[dict] = None, error: Optional[str] = None) -> None:
        """Логирует результат одного входа"""
        entry = {"input": input_label}
        if error is not None:
            entry["error"] = error
        else:
            entry["report"] = report
        with self._lock:
            self.current_session.setdefault("entries", []).append(entry)
            self._save()

    def log_summary(self, exit_code: int, counts: Dict[str, int]) -> None:
        """Финальная сводка сессии"""
        with self._lock:
            self.current_session["summary"] = {"exit_code": exit_code, **counts}
            self._save()

    def _save(self) -> None:
        if self.session_file:
            with open(self.session_file, "w", encoding="utf-8") as f:
                json.dump(self.current_session, f, ensure_ascii=False, indent=2)
