"""
Test Suite: Analysis Service

Transform dispatch, argument checks and the entropy sweep frame.
"""
import numpy as np
import pytest

from tfsqueeze.core.infrastructure.config.env_loader import EnvLoader
from tfsqueeze.core.infrastructure.frameworks.errors import ArgumentError
from tfsqueeze.core.models.tfr import ThresholdConfig
from tfsqueeze.core.services.analysis_service import AnalysisService
from tfsqueeze.core.workflows.signal_lab import synth_two_mode


@pytest.fixture
def service():
    return AnalysisService(EnvLoader())


@pytest.fixture(scope="module")
def two_mode():
    return synth_two_mode(256, 64.0)


class TestFrame:

    def test_environment_defaults(self, isolated_env, monkeypatch, two_mode):
        monkeypatch.setenv("TFSQUEEZE_OMEGA0", "5")
        spec, grid = AnalysisService(EnvLoader()).build_frame(two_mode, k_min=4)
        assert spec.omega0 == 5.0
        assert grid.bins[0] == 4 and grid.bins[-1] == 128

    def test_flags_override_environment(self, monkeypatch, service, two_mode):
        monkeypatch.setenv("TFSQUEEZE_SIGMA", "2")
        spec, _ = service.build_frame(two_mode, sigma=0.5)
        assert spec.sigma == 0.5


class TestTransform:

    def test_mwt_has_no_squeeze(self, service, two_mode):
        spec, grid = service.build_frame(two_mode)
        report = service.transform(two_mode, spec, grid)
        assert report.squeeze is None and report.method is None
        assert report.output is report.matrix

    def test_wtmsst_report(self, service, two_mode):
        spec, grid = service.build_frame(two_mode)
        report = service.transform(two_mode, spec, grid, method="wtmsst", iterations=4,
                                   mode="exp", reconstruct=True, threads=2)
        assert report.method.label() == "wtmsst(N=4,exponential)"
        assert report.residual <= 1e-10 * np.max(np.abs(report.matrix.coeffs).sum(axis=1))
        assert report.reconstruction.is_real
        assert report.error.rel_l2 < 0.1

    def test_wtsst_matches_wtmsst_one(self, service, two_mode):
        spec, grid = service.build_frame(two_mode)
        single = service.transform(two_mode, spec, grid, method="wtsst").output.coeffs
        one = service.transform(two_mode, spec, grid, method="wtmsst", iterations=1).output.coeffs
        assert np.array_equal(single, one)

    def test_rm_output_is_energy(self, service, two_mode):
        spec, grid = service.build_frame(two_mode)
        report = service.transform(two_mode, spec, grid, method="rm")
        assert not report.squeeze.invertible
        assert np.all(report.output.coeffs >= 0)

    @pytest.mark.parametrize("kwargs", [
        {"method": "stft"},
        {"method": "wtmsst", "iterations": 10, "mode": "exponential"},
        {"method": "wtmsst", "iterations": 0},
        {"method": "rm", "reconstruct": True},
        {"method": "wtsst", "mode": "cubic"},
    ])
    def test_rejected_arguments(self, service, two_mode, kwargs):
        spec, grid = service.build_frame(two_mode)
        with pytest.raises(ArgumentError):
            service.transform(two_mode, spec, grid, **kwargs)


class TestEntropySweep:

    def test_frame_layout(self, service, two_mode):
        frame = service.entropy_sweep(two_mode, [0.0, 20.0], trials=2, iterations=2,
                                      threshold=ThresholdConfig(), threads=1)
        assert list(frame.columns) == ["method", "snr_db", "trial", "alpha", "entropy"]
        assert len(frame) == 2 * 2 * 3
        means = service.sweep_means(frame)
        assert means["method"].tolist() == ["mwt"] * 2 + ["wtsst"] * 2 + ["wtmsst"] * 2
        assert means["snr_db"].tolist() == [0.0, 20.0] * 3

    def test_sweep_is_reproducible(self, service, two_mode):
        first = service.entropy_sweep(two_mode, [5.0], trials=1, iterations=2, threads=1)
        second = service.entropy_sweep(two_mode, [5.0], trials=1, iterations=2, threads=4)
        assert first["entropy"].tolist() == second["entropy"].tolist()

    def test_needs_a_trial(self, service, two_mode):
        with pytest.raises(ArgumentError):
            service.entropy_sweep(two_mode, [5.0], trials=0)
