"""
render - magnitude heatmap of a TFR1 file as PNG.
"""

import argparse

from tfsqueeze.cli.commands.common import emit, unwrap
from tfsqueeze.cli.models import RenderConfig
from tfsqueeze.core.infrastructure.adapters.tfr_codec import read_tfr
from tfsqueeze.core.infrastructure.generators.heatmap_renderer import check_colormap, render_heatmap
from tfsqueeze.core.utils.constants import Defaults, ExitCodes


def register(subparsers) -> None:
    parser = subparsers.add_parser("render", help="render a TFR1 file as a PNG heatmap",
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("input", help="TFR1 file")
    parser.add_argument("-o", "--out", required=True, help="output PNG path")
    parser.add_argument("--scale", choices=["linear", "log"], default=Defaults.RENDER_SCALE,
                        help=f"log clamps at {Defaults.LOG_CLAMP:g} of the maximum")
    parser.add_argument("--cmap", default=Defaults.RENDER_CMAP, help="matplotlib colormap name")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cfg = RenderConfig(input=args.input, out=args.out, scale=args.scale, cmap=args.cmap)
    check_colormap(cfg.cmap)
    document = unwrap(read_tfr(cfg.input))
    written = unwrap(render_heatmap(document.matrix, cfg.out, cfg.scale, cfg.cmap, document.method))
    K, L = document.matrix.shape
    emit(f"render {document.method}: {K}x{L} {cfg.scale} '{cfg.cmap}' -> {written['file_path']}")
    return ExitCodes.OK
