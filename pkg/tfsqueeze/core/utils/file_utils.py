"""
Utility functions for atomic file writes.

Outputs are written to a temporary file in the target directory, fsynced
and moved into place with os.replace, so a failed run never leaves a
half-written TFR1 or CSV behind.
"""

import json
import logging
import os
import tempfile
from typing import Any, Callable, Dict, IO

from tfsqueeze.core.infrastructure.frameworks.response_types import StandardResponse, handle_file_operations
from .constants import ErrorMessages
from .logging_helpers import StandardLogger, new_request_id

logger = logging.getLogger(__name__)


def atomic_write(output_path: str, writer: Callable[[IO], None], binary: bool = True) -> int:
    """
    Write a file atomically through writer(handle); returns the file size.

    Raises OSError on failure; the temporary file is removed.
    """
    directory = os.path.dirname(os.path.abspath(output_path))
    os.makedirs(directory, exist_ok=True)
    prefix = f".{os.path.basename(output_path)}.tmp"
    mode = 'wb' if binary else 'w'
    kwargs = {} if binary else {'encoding': 'utf-8', 'newline': '\n'}

    with tempfile.NamedTemporaryFile(mode=mode, dir=directory, prefix=prefix, delete=False, **kwargs) as handle:
        temp_path = handle.name
        try:
            writer(handle)
            handle.flush()
            os.fsync(handle.fileno())
        except BaseException:
            handle.close()
            os.unlink(temp_path)
            raise
    os.replace(temp_path, output_path)
    return os.path.getsize(output_path)


@handle_file_operations("atomic_write_json")
def atomic_write_json(data: Dict[str, Any], output_path: str) -> StandardResponse:
    """Atomically write JSON data to file."""
    request_id = new_request_id()
    file_size = atomic_write(output_path, lambda f: json.dump(data, f, indent=2, sort_keys=True), binary=False)
    StandardLogger.log_file_operation("atomic_write_json", request_id, output_path, file_size)
    return StandardResponse.success_response(
        data={"file_path": output_path, "file_size": file_size},
        request_id=request_id,
    )


@handle_file_operations("atomic_read_json")
def atomic_read_json(input_path: str) -> StandardResponse:
    """Read a JSON file written by atomic_write_json."""
    request_id = new_request_id()
    if not os.path.exists(input_path):
        return StandardResponse.error_response(
            error=ErrorMessages.FILE_NOT_FOUND.format(path=input_path),
            request_id=request_id,
            file_path=input_path,
            error_type="FileNotFoundError",
        )
    with open(input_path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    StandardLogger.log_file_operation("atomic_read_json", request_id, input_path, os.path.getsize(input_path))
    return StandardResponse.success_response(data=data, request_id=request_id, file_path=input_path)
