import os
import json
import logging
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict

from .. import imaging, recognition, segmentation
from ..common import names as N
from ..common import utils
from ..common.base_models import BinaryImage, GrayImage, Glyph, LineTranscript
from ..common.errors import ConstantImage, HandwritingOCRError
from ..templates import TemplateStore, load_templates
from . import debug
from .config import PipelineConfig


Logger = logging.getLogger(__name__)



class PageTranscript(BaseModel):
    """Recognized lines of a page, with the glyphs they came from."""
    model_config = ConfigDict(frozen=True)

    lines: Tuple[LineTranscript, ...] = ()
    glyphs: Tuple[Tuple[Glyph, ...], ...] = ()
    text: str = ""

    @property
    def glyph_count(self) -> int:
        return sum(len(line_glyphs) for line_glyphs in self.glyphs)


class PageRecognizer:
    """
    Binds a template store to the preprocessing and assembly parameters and
    turns grayscale pages into text.
    """

    def __init__(
        self,
        store: TemplateStore,
        min_component_size: int = N.MIN_COMPONENT_SIZE,
        space_ratio: float = N.SPACE_RATIO,
        connectivity: int = N.CONNECTIVITY,
        blank_threshold: int = N.BLANK_THRESHOLD,
    ):
        self.store = store
        self.min_component_size = min_component_size
        self.space_ratio = space_ratio
        self.connectivity = connectivity
        self.blank_threshold = blank_threshold

    @classmethod
    def from_config(cls, cfg: PipelineConfig) -> "PageRecognizer":
        return cls(
            store=load_templates(cfg.templates_manifest),
            min_component_size=cfg.min_component_size,
            space_ratio=cfg.space_ratio,
            connectivity=cfg.connectivity,
            blank_threshold=cfg.blank_threshold,
        )

    def recognize(self, gray: GrayImage) -> PageTranscript:
        """
        Preprocess, segment, classify and assemble one page.

        Raises:
            ConstantImage: the page has a single intensity.
        """
        page = imaging.preprocess(gray, self.min_component_size, self.connectivity)
        return self.recognize_binary(page)

    def recognize_binary(self, page: BinaryImage) -> PageTranscript:
        """Segment, classify and assemble an already denoised page."""
        transcripts: List[LineTranscript] = []
        line_glyphs: List[Tuple[Glyph, ...]] = []
        for line_index, (line, glyphs) in enumerate(segmentation.segment_page(page, self.blank_threshold)):
            results = [(recognition.classify(glyph, self.store), glyph.space_before) for glyph in glyphs]
            transcript = recognition.assemble_line(results, self.space_ratio)
            Logger.debug(f"Line {line_index} at row {line.row_offset}: {transcript.text!r}")
            transcripts.append(transcript)
            line_glyphs.append(tuple(glyphs))

        return PageTranscript(
            lines=tuple(transcripts),
            glyphs=tuple(line_glyphs),
            text=recognition.assemble_page(transcripts),
        )


def recognize_page(gray: GrayImage, store: TemplateStore, **params) -> PageTranscript:
    """Recognize a grayscale page without touching the filesystem."""
    return PageRecognizer(store, **params).recognize(gray)


def write_text(path, text: str):
    os.makedirs(utils.justpath(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as output:
        output.write(text)


def run_pipeline(cfg: PipelineConfig) -> int:
    """
    Run decode → preprocess → segment → classify → assemble → write.

    Returns:
        int: process exit status (0 success, 1 I/O, 2 config/manifest, 3 degenerate image).
    """
    try:
        recognizer = PageRecognizer.from_config(cfg)
        gray = imaging.load_page(cfg.input_path)
        try:
            page = recognizer.recognize(gray)
        except ConstantImage as err:
            # DOC: no threshold can be computed, the output is empty either way
            write_text(cfg.output_path, "")
            if err.intensity > N.BLANK_PAGE_INTENSITY:
                Logger.warning(f"{cfg.input_path}: blank page, wrote empty output")
                return N.EXIT_OK
            raise

        write_text(cfg.output_path, page.text)
        Logger.info(f"Recognized {len(page.lines)} lines, {page.glyph_count} glyphs → {cfg.output_path}")

        # DOC: the transcript is already written, debug outputs cannot change the exit status
        try:
            if cfg.debug_dump is not None:
                debug.dump_glyphs(cfg.debug_dump, page.glyphs)
            if cfg.diagnostics is not None:
                debug.write_diagnostics(cfg.diagnostics, page.lines)
        except OSError as err:
            Logger.warning(f"Could not write debug outputs: {err}")

    except HandwritingOCRError as err:
        Logger.error(f"{err.message}")
        Logger.error(json.dumps(err.as_dict))
        return err.exit_code
    except OSError as err:
        Logger.error(f"I/O error: {err}")
        return N.EXIT_IO_ERROR

    return N.EXIT_OK
