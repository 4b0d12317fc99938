"""
Test Suite: TFR1 Codec

Byte layout against hand-packed headers, sidecar handling and the field
named by every header failure.
"""
import json
import struct

import numpy as np
import pytest

from reference_signals import DIRAC_INDEX
from tfsqueeze.core.infrastructure.adapters.tfr_codec import (
    HEADER,
    decode_tfr,
    encode_tfr,
    read_tfr,
    sidecar_path,
    write_tfr,
)
from tfsqueeze.core.infrastructure.frameworks.errors import DataFormatError
from tfsqueeze.core.models.tfr import SqueezeKind, SqueezeMethod, ThresholdConfig
from tfsqueeze.core.utils.constants import ExitCodes
from tfsqueeze.core.workflows.mwt_engine import mwt

GOLDEN_VALUES = np.arange(16, dtype=float).reshape(2, 8) - 1j * np.arange(16).reshape(2, 8)


def golden_bytes(K=2, L=8, fs=100.0, t0=0.25, kind=0, payload=None):
    header = struct.pack("<4sIIddB", b"TFR1", K, L, fs, t0, kind)
    if payload is None:
        payload = b"".join(struct.pack("<dd", v.real, v.imag) for v in GOLDEN_VALUES.ravel())
    return header + payload


class TestLayout:

    def test_header_is_29_bytes(self):
        assert HEADER.size == 29

    def test_encode_matches_hand_packed(self):
        assert encode_tfr(GOLDEN_VALUES, 100.0, 0.25) == golden_bytes()

    def test_real_payload(self):
        values = np.linspace(0, 1, 16).reshape(2, 8)
        blob = encode_tfr(values, 50.0, 0.0)
        assert blob[28] == 1
        assert blob[29:] == struct.pack("<16d", *values.ravel())

    def test_decode_golden(self):
        coeffs, fs, t0, kind = decode_tfr(golden_bytes())
        assert (fs, t0, kind) == (100.0, 0.25, 0)
        assert np.array_equal(coeffs, GOLDEN_VALUES)


class TestCorruptHeaders:

    @pytest.mark.parametrize("blob,field", [
        (b"", "magic"),
        (b"TFR2" + golden_bytes()[4:], "magic"),
        (golden_bytes()[:10], "L"),
        (golden_bytes()[:25], "t0"),
        (golden_bytes(K=0, payload=b""), "K"),
        (golden_bytes(L=4), "L"),
        (golden_bytes(fs=0.0), "fs"),
        (golden_bytes(fs=float("nan")), "fs"),
        (golden_bytes(t0=float("inf")), "t0"),
        (golden_bytes(kind=7), "kind"),
        (golden_bytes()[:-3], "payload"),
        (golden_bytes() + b"\x00", "payload"),
        (golden_bytes(payload=struct.pack("<d", float("nan")) * 32), "payload"),
    ])
    def test_failure_names_field(self, blob, field):
        with pytest.raises(DataFormatError) as info:
            decode_tfr(blob)
        assert info.value.field == field
        assert f"'{field}'" in str(info.value)


class TestFiles:

    def test_write_read_with_sidecar(self, tmp_path, dirac_signal, dirac_grid, spec):
        W = mwt(dirac_signal, dirac_grid, spec)
        path = str(tmp_path / "w.tfr")
        method = SqueezeMethod(SqueezeKind.WTMSST, 4)
        assert write_tfr(W, path, spec, method, ThresholdConfig()).is_success()

        sidecar = json.loads((tmp_path / "w.tfr.json").read_text())
        assert sidecar["method"] == "wtmsst(N=4,linear)"
        assert (sidecar["k_min"], sidecar["k_max"]) == (dirac_grid.k_min, dirac_grid.k_max)

        document = read_tfr(path).data
        assert document.method == "wtmsst(N=4,linear)"
        assert document.matrix.grid.k_min == dirac_grid.k_min
        assert np.array_equal(document.matrix.coeffs, W.coeffs)
        assert np.argmax(np.abs(document.matrix.coeffs[0])) == DIRAC_INDEX

    def test_grid_inferred_without_sidecar(self, tmp_path):
        path = tmp_path / "golden.tfr"
        path.write_bytes(golden_bytes())
        document = read_tfr(str(path)).data
        assert document.method == "unknown"
        assert document.matrix.grid.bins.tolist() == [3, 4]
        assert document.matrix.meta.t0 == 0.25

    def test_unreadable_sidecar_is_ignored(self, tmp_path):
        path = tmp_path / "golden.tfr"
        path.write_bytes(golden_bytes())
        (tmp_path / "golden.tfr.json").write_text("{not json")
        assert read_tfr(str(path)).is_success()

    def test_corrupt_file_response(self, tmp_path):
        path = tmp_path / "bad.tfr"
        path.write_bytes(golden_bytes(kind=3))
        response = read_tfr(str(path))
        assert response.is_error()
        assert response.exit_code == ExitCodes.DATA_ERROR
        assert "kind" in response.get_error_message()

    def test_sidecar_path(self):
        assert sidecar_path("out/s.tfr") == "out/s.tfr.json"
