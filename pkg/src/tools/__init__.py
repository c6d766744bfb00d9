"""
Tools - вспомогательные сервисы движка.
"""

from .tool_logger import (
    ComputationCall,
    ComputationLogger,
    get_computation_logger,
)


__all__ = [
    "ComputationCall",
    "ComputationLogger",
    "get_computation_logger",
]
