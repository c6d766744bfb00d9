"""
Computation Logger - учёт вызовов тяжёлых вычислений движка.
Каждая точка входа (compute_V, d по конусу, stability_run, сырые комплексы)
записывает один вызов; отчёт используется CLI в режиме отладки и в логе сессии.
"""

import threading
import time
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import datetime
from typing import Dict, Iterator, List, Optional

from ..logger import trace


@dataclass
class ComputationCall:
    """Запись о вызове вычисления"""
    operation: str
    input_data: str
    output_data: str
    timestamp: datetime
    success: bool
    duration_ms: float = 0.0


class ComputationLogger:
    """
    Централизованный журнал вычислений.
    Thread-safe: пайплайн считает входы параллельно.
    """

    def __init__(self):
        self._calls: List[ComputationCall] = []
        self._lock = threading.Lock()

    def log_call(
        self,
        operation: str,
        input_data: str,
        output_data: str,
        success: bool = True,
        duration_ms: float = 0.0
    ) -> None:
        """
        Логирует вызов вычисления.

        Args:
            operation: Имя операции движка
            input_data: Краткое описание входа
            output_data: Краткое описание результата
            success: Успешен ли вызов
            duration_ms: Время выполнения в миллисекундах
        """
        call = ComputationCall(
            operation=operation,
            input_data=input_data[:200],
            output_data=output_data[:200],
            timestamp=datetime.now(),
            success=success,
            duration_ms=duration_ms,
        )
        with self._lock:
            self._calls.append(call)
        status = "ok" if success else "failed"
        trace("Computation", f"{status} {operation}({input_data[:60]}) -> {output_data[:60]} [{duration_ms:.1f} ms]")

    @contextmanager
    def track(self, operation: str, input_data: str) -> Iterator[Dict[str, str]]:
        """
        Контекст для замера: вызывающий кладёт результат в slot["output"].
        Исключение записывается как неуспешный вызов и пробрасывается дальше.
        """
        slot = {"output": ""}
        started = time.perf_counter()
        try:
            yield slot
        except Exception as e:
            self.log_call(operation, input_data, f"{type(e).__name__}: {e}", False, (time.perf_counter() - started) * 1000)
            raise
        self.log_call(operation, input_data, slot["output"], True, (time.perf_counter() - started) * 1000)

    def get_summary(self) -> Dict[str, Dict[str, float]]:
        """Число вызовов, ошибок и суммарное время по операциям"""
        with self._lock:
            summary: Dict[str, Dict[str, float]] = {}
            for call in self._calls:
                item = summary.setdefault(call.operation, {"calls": 0, "failures": 0, "total_ms": 0.0})
                item["calls"] += 1
                item["failures"] += 0 if call.success else 1
                item["total_ms"] = round(item["total_ms"] + call.duration_ms, 3)
            return summary

    def get_calls(self) -> List[ComputationCall]:
        with self._lock:
            return list(self._calls)

    def clear(self) -> None:
        with self._lock:
            self._calls.clear()


# Глобальный инстанс логгера
_logger_instance: Optional[ComputationLogger] = None
_instance_lock = threading.Lock()


def get_computation_logger() -> ComputationLogger:
    """Возвращает глобальный инстанс логгера"""
    global _logger_instance
    with _instance_lock:
        if _logger_instance is None:
            _logger_instance = ComputationLogger()
        return _logger_instance
