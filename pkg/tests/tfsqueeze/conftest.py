"""
Shared fixtures for tfsqueeze tests.

Every test runs in its own temporary working directory with the TFSQUEEZE_*
environment cleared, so a developer's .env never leaks into a run.
"""
import os

import pytest

from reference_signals import (
    CHIRP_BAND,
    CHIRP_BETA,
    CHIRP_FS,
    CHIRP_K_MAX,
    CHIRP_K_MIN,
    CHIRP_L,
    DIRAC_FS,
    DIRAC_K_MAX,
    DIRAC_K_MIN,
    DIRAC_L,
    DIRAC_T0,
    gaussian_pair,
)
from tfsqueeze.cli.dependencies import reset_analysis_service
from tfsqueeze.cli.main import main
from tfsqueeze.core.models.frame import WaveletSpec
from tfsqueeze.core.models.signal import ChirpModel
from tfsqueeze.core.workflows import signal_lab
from tfsqueeze.core.workflows.wavelet_frame import make_scale_grid


@pytest.fixture(autouse=True)
def isolated_env(tmp_path, monkeypatch):
    """Run inside tmp_path with no TFSQUEEZE_* variables and a fresh service."""
    for key in list(os.environ):
        if key.startswith("TFSQUEEZE_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    reset_analysis_service()
    yield tmp_path
    reset_analysis_service()


@pytest.fixture
def spec():
    return WaveletSpec()


@pytest.fixture(scope="session")
def dirac_signal():
    return signal_lab.synth_dirac(DIRAC_T0, DIRAC_L, DIRAC_FS)


@pytest.fixture(scope="session")
def dirac_grid():
    return make_scale_grid(DIRAC_L, DIRAC_FS, WaveletSpec(), k_min=DIRAC_K_MIN, k_max=DIRAC_K_MAX)


@pytest.fixture(scope="session")
def chirp_model():
    return ChirpModel(beta=CHIRP_BETA, band=CHIRP_BAND)


@pytest.fixture(scope="session")
def chirp_signal(chirp_model):
    return signal_lab.synth_gd_chirp(chirp_model, CHIRP_L, CHIRP_FS)


@pytest.fixture(scope="session")
def chirp_grid():
    return make_scale_grid(CHIRP_L, CHIRP_FS, WaveletSpec(), k_min=CHIRP_K_MIN, k_max=CHIRP_K_MAX)


@pytest.fixture(scope="session")
def pulse_pair():
    return gaussian_pair()


@pytest.fixture
def cli(capsys):
    """Run the command line in-process; returns (exit_code, stdout, stderr)."""
    def run(*argv):
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run
