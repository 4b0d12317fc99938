"""
Response Types Module - Standardized response formats and error handling

Adapters that touch the filesystem return a StandardResponse instead of
raising, so the command line can map failures to exit codes in one place.
Numerical workflows raise the errors in frameworks.errors directly.
"""

import logging
import uuid
from dataclasses import dataclass, field
from datetime import datetime
from functools import wraps
from typing import Any, Dict, Optional

from tfsqueeze.core.infrastructure.frameworks.errors import TfSqueezeError
from tfsqueeze.core.utils.constants import ExitCodes

logger = logging.getLogger(__name__)


@dataclass
class StandardResponse:
    """Result envelope for file operations."""
    success: bool
    data: Any = None
    error: Optional[str] = None
    request_id: Optional[str] = None
    metadata: Dict[str, Any] = field(default_factory=dict)
    timestamp: Optional[str] = None

    def __post_init__(self):
        if self.request_id is None:
            self.request_id = uuid.uuid4().hex[:8]
        if self.timestamp is None:
            self.timestamp = datetime.now().isoformat()
        if self.metadata is None:
            self.metadata = {}

    @classmethod
    def success_response(cls, data: Any = None, request_id: Optional[str] = None, **metadata) -> 'StandardResponse':
        return cls(success=True, data=data, request_id=request_id, metadata=metadata)

    @classmethod
    def error_response(cls, error: str, request_id: Optional[str] = None, **metadata) -> 'StandardResponse':
        return cls(success=False, error=error, request_id=request_id, metadata=metadata)

    def is_success(self) -> bool:
        return self.success

    def is_error(self) -> bool:
        return not self.success

    def get_error_message(self) -> str:
        return self.error or ""

    def get_data(self) -> Any:
        return self.data if self.success else None

    @property
    def exit_code(self) -> int:
        """Exit code this response maps to on the command line."""
        if self.success:
            return ExitCodes.OK
        return int(self.metadata.get('exit_code', ExitCodes.DATA_ERROR))


def handle_file_operations(operation_name: str):
    """
    Wrap a file operation so that failures become error responses.

    error_type in the metadata names the exception class; exit_code holds
    the command-line code (1 for I/O and data errors, the error's own code
    for tfsqueeze validation errors).
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            request_id = uuid.uuid4().hex[:8]
            try:
                result = func(*args, **kwargs)
            except FileNotFoundError as e:
                error_msg = f"File not found: {e.filename or e}"
                error_type, exit_code = "FileNotFoundError", ExitCodes.DATA_ERROR
            except PermissionError as e:
                error_msg = f"Permission denied: {e.filename or e}"
                error_type, exit_code = "PermissionError", ExitCodes.DATA_ERROR
            except TfSqueezeError as e:
                error_msg = str(e)
                error_type, exit_code = type(e).__name__, e.exit_code
            except (OSError, ValueError) as e:
                error_msg = f"{operation_name}: {e}"
                error_type, exit_code = type(e).__name__, ExitCodes.DATA_ERROR
            else:
                if isinstance(result, StandardResponse):
                    return result
                return StandardResponse.success_response(
                    data=result, request_id=request_id, operation=operation_name
                )
            logger.error(f"[{request_id}] {operation_name} failed: {error_msg}")
            return StandardResponse.error_response(
                error=error_msg,
                request_id=request_id,
                operation=operation_name,
                error_type=error_type,
                exit_code=exit_code,
            )
        return wrapper
    return decorator
