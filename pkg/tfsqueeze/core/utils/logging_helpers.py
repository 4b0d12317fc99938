"""
Logging Helpers Module - Standardized logging utilities

StandardLogger formats every message with a request id so one run of the
transform pipeline can be followed through the log. Arrays are never
dumped; they are summarized by shape and dtype.
"""

import functools
import logging
import time
import uuid
from typing import Any, Callable, Optional

import numpy as np

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def new_request_id() -> str:
    """Short request id used to correlate log lines of one operation."""
    return uuid.uuid4().hex[:8]


def describe_value(value: Any) -> str:
    """Render a parameter for a log line, summarizing arrays."""
    if isinstance(value, np.ndarray):
        return f"ndarray{value.shape}:{value.dtype}"
    shape = getattr(value, "shape", None)
    if shape is not None and not isinstance(shape, (int, float)):
        return f"{type(value).__name__}{tuple(shape)}"
    text = str(value)
    return text if len(text) < 120 else text[:117] + "..."


def _join(items: dict) -> str:
    return ', '.join(f"{k}={describe_value(v)}" for k, v in items.items())


class StandardLogger:
    """Uniform log lines: '[request_id] operation <event> - details'."""

    @staticmethod
    def log_operation_start(operation: str, request_id: str, **params):
        message = f"[{request_id}] {operation} started"
        if params:
            message += f" with {_join(params)}"
        logger.info(message)

    @staticmethod
    def log_operation_success(operation: str, request_id: str, duration: Optional[float] = None, **metadata):
        message = f"[{request_id}] {operation} completed"
        if duration is not None:
            message += f" in {duration:.3f}s"
        if metadata:
            message += f" - {_join(metadata)}"
        logger.info(message)

    @staticmethod
    def log_operation_error(operation: str, request_id: str, error: Exception, **context):
        message = f"[{request_id}] {operation} failed: {error}"
        if context:
            message += f" - Context: {_join(context)}"
        logger.error(message, exc_info=True)

    @staticmethod
    def log_data_operation(operation: str, request_id: str, data_type: str, count: int, **details):
        """
        Log a numeric data step with the number of items it touched.

        Args:
            operation: Name of the step
            request_id: Correlation id
            data_type: What was counted ('samples', 'cells', 'rows')
            count: How many
            **details: Extra fields appended to the line
        """
        message = f"[{request_id}] {operation}: processed {count} {data_type}"
        if details:
            message += f" - {_join(details)}"
        logger.info(message)

    @staticmethod
    def log_file_operation(operation: str, request_id: str, file_path: str, file_size: Optional[int] = None, **details):
        message = f"[{request_id}] {operation}: {file_path}"
        if file_size is not None:
            message += f" ({file_size} bytes)"
        if details:
            message += f" - {_join(details)}"
        logger.info(message)


def log_operation(operation_name: str, log_params: bool = True, log_duration: bool = True):
    """
    Decorator for automatic operation logging with timing.

    Keyword arguments are logged (arrays summarized); positional arguments
    are not, since they are usually large signals or matrices.
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            request_id = new_request_id()
            start = time.perf_counter()
            StandardLogger.log_operation_start(operation_name, request_id, **(kwargs if log_params else {}))
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                StandardLogger.log_operation_error(operation_name, request_id, e)
                raise
            duration = time.perf_counter() - start if log_duration else None
            StandardLogger.log_operation_success(operation_name, request_id, duration)
            return result
        return wrapper
    return decorator


class OperationTimer:
    """Context manager for timing a block with start/finish log lines."""

    def __init__(self, operation_name: str, request_id: Optional[str] = None, **context):
        self.operation_name = operation_name
        self.request_id = request_id or new_request_id()
        self.context = context
        self.start_time: Optional[float] = None
        self.end_time: Optional[float] = None

    def __enter__(self):
        self.start_time = time.perf_counter()
        StandardLogger.log_operation_start(self.operation_name, self.request_id, **self.context)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.end_time = time.perf_counter()
        if exc_type is None:
            StandardLogger.log_operation_success(self.operation_name, self.request_id, self.get_duration())
        else:
            StandardLogger.log_operation_error(self.operation_name, self.request_id, exc_val)
        return False

    def get_duration(self) -> float:
        if self.start_time is not None and self.end_time is not None:
            return self.end_time - self.start_time
        return 0.0


def configure_logging(level: str = "WARNING") -> None:
    """Configure the root logger once for command-line runs (stderr)."""
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format=LOG_FORMAT,
        force=True,
    )
