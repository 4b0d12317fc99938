"""
Environment configuration loader.
Reads the project .env file (python-dotenv) and overlays the process environment.
"""

import logging
import os
from typing import Dict, Optional

import psutil
from dotenv import dotenv_values

from tfsqueeze.core.utils.constants import Defaults, EnvKeys

logger = logging.getLogger(__name__)


class EnvLoader:
    """Loads and resolves tfsqueeze configuration values."""

    def __init__(self, project_root: Optional[str] = None):
        if project_root is None:
            project_root = os.getcwd()
        self.project_root = project_root
        self.env_file_path = os.path.join(project_root, '.env')

    def load_env_vars(self) -> Dict[str, str]:
        """Merged view: .env values overridden by the process environment."""
        env_vars: Dict[str, str] = {}
        if os.path.exists(self.env_file_path):
            try:
                env_vars.update({k: v for k, v in dotenv_values(self.env_file_path).items() if v is not None})
            except Exception as e:
                logger.warning(f"Could not load .env file: {e}")
        env_vars.update({k: v for k, v in os.environ.items() if k.startswith("TFSQUEEZE_")})
        return env_vars

    def _get_float(self, key: str, default: float) -> float:
        raw = self.load_env_vars().get(key)
        if raw is None or raw == "":
            return default
        try:
            return float(raw)
        except ValueError:
            logger.warning(f"Ignoring non-numeric {key}={raw!r}")
            return default

    def resolve_threads(self, flag: Optional[int] = None) -> int:
        """
        Worker count: --threads flag, then TFSQUEEZE_THREADS, then the number
        of physical cores.
        """
        if flag is not None:
            return max(1, int(flag))
        raw = self.load_env_vars().get(EnvKeys.THREADS)
        if raw:
            try:
                return max(1, int(raw))
            except ValueError:
                logger.warning(f"Ignoring non-integer {EnvKeys.THREADS}={raw!r}")
        return psutil.cpu_count(logical=False) or 1

    def default_omega0(self) -> float:
        return self._get_float(EnvKeys.OMEGA0, Defaults.OMEGA0)

    def default_sigma(self) -> float:
        return self._get_float(EnvKeys.SIGMA, Defaults.SIGMA)

    def default_upsilon(self) -> float:
        return self._get_float(EnvKeys.UPSILON, Defaults.UPSILON)

    def log_level(self) -> str:
        return self.load_env_vars().get(EnvKeys.LOG_LEVEL, "WARNING")
