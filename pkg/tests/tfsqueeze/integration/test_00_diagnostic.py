"""
Test Suite 00: Diagnostic Tests

Diagnostic tests to verify the package is in a working state.
These tests verify:
- The package and its layers import
- The command line starts and answers --help and --version
- Usage errors map to exit code 2
"""
import importlib

import pytest

import tfsqueeze


class Test01_Imports:
    """Test that every layer of the package imports."""

    def test_1_1_version(self):
        """Test 1.1: Package exposes a version string."""
        assert tfsqueeze.__version__.count(".") == 2

    @pytest.mark.parametrize("module", [
        "tfsqueeze.core.workflows.mwt_engine",
        "tfsqueeze.core.workflows.gd_estimator",
        "tfsqueeze.core.workflows.squeezer",
        "tfsqueeze.core.workflows.tf_metrics",
        "tfsqueeze.core.services.analysis_service",
        "tfsqueeze.core.infrastructure.adapters.tfr_codec",
        "tfsqueeze.core.infrastructure.generators.heatmap_renderer",
        "tfsqueeze.cli.main",
    ])
    def test_1_2_modules_import(self, module):
        """Test 1.2: Core modules import without side effects."""
        assert importlib.import_module(module) is not None


class Test02_CommandLine:
    """Test the command-line surface responds."""

    def test_2_1_help(self, cli):
        """Test 2.1: --help lists every command and the defaults."""
        code, out, _ = cli("--help")
        assert code == 0
        for command in ("gen", "transform", "metrics", "render"):
            assert command in out
        assert "omega0=6" in out and "upsilon=0.001" in out

    def test_2_2_version(self, cli):
        """Test 2.2: --version prints the package version."""
        code, out, _ = cli("--version")
        assert code == 0
        assert tfsqueeze.__version__ in out

    @pytest.mark.parametrize("argv", [[], ["fft"], ["transform"], ["metrics"], ["gen", "dirac"]])
    def test_2_3_usage_errors(self, cli, argv):
        """Test 2.3: Missing or unknown commands exit with code 2."""
        code, _, err = cli(*argv)
        assert code == 2
        assert "usage" in err

    def test_2_4_metric_help(self, cli):
        """Test 2.4: Metric subcommands are listed."""
        code, out, _ = cli("metrics", "--help")
        assert code == 0
        for metric in ("entropy", "tfes", "recon-error"):
            assert metric in out
