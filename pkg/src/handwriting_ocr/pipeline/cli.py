"""Command line entry point: `recognize`, `render` and `check-templates`."""

import sys
import json
import argparse
import logging

from .. import recognition
from ..common import names as N
from ..common import utils
from ..common.errors import HandwritingOCRError
from ..templates import load_templates
from .config import PipelineConfig, RenderSpec
from .render import render_page, to_gray
from .runner import run_pipeline


Logger = logging.getLogger(__name__)



def _templates_argument(parser: argparse.ArgumentParser):
    default = utils.env_value(N.ENV_TEMPLATES, None)
    parser.add_argument(
        "--templates",
        default=default,
        required=default is None,
        help=f"TSV manifest of the 62 templates (default: ${N.ENV_TEMPLATES})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="handwriting-ocr", description="Template-correlation handwriting recognizer.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log per-line and per-glyph detail")
    commands = parser.add_subparsers(dest="command", required=True)

    recognize = commands.add_parser("recognize", help="convert a scanned page into a text file")
    recognize.add_argument("--input", required=True, help="page image, 8-bit PNG or BMP")
    _templates_argument(recognize)
    recognize.add_argument("--output", required=True, help="destination text file")
    recognize.add_argument("--min-component", type=int, default=None, help=f"remove objects below this size (default {N.MIN_COMPONENT_SIZE})")
    recognize.add_argument("--space-ratio", type=float, default=None, help=f"word-break ratio of the widest gap (default {N.SPACE_RATIO})")
    recognize.add_argument("--connectivity", type=int, choices=(4, 8), default=None, help=f"object adjacency (default {N.CONNECTIVITY})")
    recognize.add_argument("--blank-threshold", type=int, default=None, help=f"ink sum at or below which a row/column is blank (default {N.BLANK_THRESHOLD})")
    recognize.add_argument("--debug-dump", default=None, help="directory for glyph crops and their sidecar")
    recognize.add_argument("--diagnostics", default=None, help="JSON lines file with per-glyph scores")

    render = commands.add_parser("render", help="draw text with the templates as a synthetic page")
    render.add_argument("--text", required=True, help="text to draw; '\\n' starts a new line")
    _templates_argument(render)
    render.add_argument("--output", required=True, help="destination PNG")
    render.add_argument("--glyph-gap", type=int, default=N.RENDER_GLYPH_GAP)
    render.add_argument("--word-gap", type=int, default=N.RENDER_WORD_GAP)
    render.add_argument("--line-gap", type=int, default=N.RENDER_LINE_GAP)
    render.add_argument("--margin", type=int, default=N.RENDER_MARGIN)

    check = commands.add_parser("check-templates", help="validate a manifest and list the most similar template pairs")
    _templates_argument(check)
    check.add_argument("--top", type=int, default=10, help="number of pairs to list")

    return parser


def cmd_recognize(args) -> int:
    cfg = PipelineConfig.build(
        input_path=args.input,
        templates_manifest=args.templates,
        output_path=args.output,
        min_component_size=args.min_component,
        space_ratio=args.space_ratio,
        connectivity=args.connectivity,
        blank_threshold=args.blank_threshold,
        debug_dump=args.debug_dump,
        diagnostics=args.diagnostics,
    )
    return run_pipeline(cfg)


def cmd_render(args) -> int:
    spec = RenderSpec.build(
        text=args.text.replace("\\n", "\n"),
        glyph_gap=args.glyph_gap,
        word_gap=args.word_gap,
        line_gap=args.line_gap,
        margin=args.margin,
    )
    page = render_page(spec, load_templates(args.templates))
    utils.write_png(args.output, to_gray(page))
    Logger.info(f"Rendered {page.height}x{page.width} page → {args.output}")
    return N.EXIT_OK


def cmd_check_templates(args) -> int:
    store = load_templates(args.templates)
    print(f"{len(store)} templates, digest {store.digest()}")
    for first, second, score in recognition.confusable_pairs(store, args.top):
        print(f"{first}\t{second}\t{score:.4f}")
    return N.EXIT_OK


_COMMANDS = {
    "recognize": cmd_recognize,
    "render": cmd_render,
    "check-templates": cmd_check_templates,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    utils.setup_logging("DEBUG" if args.verbose else None)
    try:
        return _COMMANDS[args.command](args)
    except HandwritingOCRError as err:
        Logger.error(err.message)
        Logger.error(json.dumps(err.as_dict))
        return err.exit_code
    except OSError as err:
        Logger.error(f"I/O error: {err}")
        return N.EXIT_IO_ERROR


if __name__ == "__main__":
    sys.exit(main())
