"""
Test Suite: Heatmap Renderer
"""
import matplotlib.pyplot as plt
import numpy as np
import pytest

from tfsqueeze.core.infrastructure.frameworks.errors import ArgumentError
from tfsqueeze.core.infrastructure.generators.heatmap_renderer import (
    axis_metadata,
    check_colormap,
    heatmap_values,
    render_heatmap,
)
from tfsqueeze.core.models.tfr import SignalMeta, TFMatrix
from tfsqueeze.core.utils.constants import ExitCodes


def matrix_on(grid, coeffs):
    return TFMatrix(coeffs, grid, SignalMeta(grid.length, grid.sample_rate_hz), weight=None)


class TestValues:

    def test_linear_scale(self):
        values = heatmap_values(np.array([[0.0, -2.0], [1.0, 4.0]]), "linear")
        assert values.tolist() == [[0.0, 0.5], [0.25, 1.0]]

    def test_log_scale_clamps(self):
        values = heatmap_values(np.array([[1.0, 1e-4, 1e-12, 0.0]]), "log", clamp=1e-8)
        assert values[0].tolist() == pytest.approx([1.0, 0.5, 0.0, 0.0])

    def test_zero_matrix(self):
        assert not np.any(heatmap_values(np.zeros((2, 3)), "log"))

    def test_unknown_scale(self):
        with pytest.raises(ArgumentError):
            heatmap_values(np.ones((2, 2)), "sqrt")

    def test_unknown_colormap(self):
        assert check_colormap("gray") == "gray"
        with pytest.raises(ArgumentError):
            check_colormap("not-a-map")


class TestRender:

    def test_image_orientation(self, tmp_path, dirac_grid):
        coeffs = np.zeros((dirac_grid.K, dirac_grid.length))
        coeffs[-1, 10] = 1.0
        path = str(tmp_path / "t.png")
        response = render_heatmap(matrix_on(dirac_grid, coeffs), path, scale="linear", cmap="gray")
        assert response.data["shape"] == [dirac_grid.K, dirac_grid.length]
        image = plt.imread(path)
        assert image.shape[:2] == (dirac_grid.K, dirac_grid.length)
        # highest frequency is drawn on the top row
        brightest = np.unravel_index(np.argmax(image[..., 0]), image.shape[:2])
        assert brightest == (0, 10)

    def test_metadata_in_png(self, tmp_path, dirac_grid):
        matrix = matrix_on(dirac_grid, np.ones((dirac_grid.K, dirac_grid.length)))
        path = tmp_path / "m.png"
        render_heatmap(matrix, str(path), method="wtsst")
        blob = path.read_bytes()
        assert b"Description" in blob and b"Hz" in blob
        meta = axis_metadata(matrix, "log", "wtsst")
        assert meta["Title"] == "tfsqueeze wtsst"
        assert "12..53 Hz" in meta["Description"]

    def test_bad_colormap_response(self, tmp_path, dirac_grid):
        matrix = matrix_on(dirac_grid, np.ones((dirac_grid.K, dirac_grid.length)))
        response = render_heatmap(matrix, str(tmp_path / "x.png"), cmap="nope")
        assert response.is_error()
        assert response.exit_code == ExitCodes.USAGE_ERROR
        assert not (tmp_path / "x.png").exists()
