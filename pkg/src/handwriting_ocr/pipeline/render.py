# DOC: synthetic pages drawn with the template store as handwriting font, the inverse of the recognizer

import logging
from typing import List, Tuple

import numpy as np

from ..common import names as N
from ..common.base_models import BinaryImage
from ..common.errors import UnrenderableCharacter
from ..templates import TemplateStore
from .config import RenderSpec


Logger = logging.getLogger(__name__)



def layout_line(line: str, spec: RenderSpec) -> Tuple[List[Tuple[int, str]], int]:
    """
    Place the characters of one line.

    Returns:
        tuple: ([(column, character), ...], line width). A glyph follows the
        previous one after `glyph_gap` columns, or `word_gap` columns per space.
    """
    placements = []
    cursor = 0
    pending_spaces = 0
    for character in line:
        if character == " ":
            pending_spaces += 1
            continue
        if pending_spaces:
            cursor += spec.word_gap * pending_spaces
        elif placements:
            cursor += spec.glyph_gap
        placements.append((cursor, character))
        cursor += N.TEMPLATE_COLS
        pending_spaces = 0
    cursor += spec.word_gap * pending_spaces
    return placements, cursor


def render_page(spec: RenderSpec, store: TemplateStore) -> BinaryImage:
    """
    Paste each character's template left to right, lines stacked top to bottom.

    Raises:
        UnrenderableCharacter: a character has no template in the store.
    """
    for character in spec.text:
        if character not in ("\n", " ") and character not in store.labels:
            raise UnrenderableCharacter(character)

    lines = spec.text.split("\n") if spec.text else []
    layouts = [layout_line(line, spec) for line in lines]

    height = 2 * spec.margin + len(lines) * N.TEMPLATE_ROWS + max(len(lines) - 1, 0) * spec.line_gap
    width = 2 * spec.margin + max((line_width for _, line_width in layouts), default=0)
    page = np.zeros((height, width), dtype=np.uint8)

    for index, (placements, _) in enumerate(layouts):
        top = spec.margin + index * (N.TEMPLATE_ROWS + spec.line_gap)
        for column, character in placements:
            left = spec.margin + column
            page[top:top + N.TEMPLATE_ROWS, left:left + N.TEMPLATE_COLS] = store[character].data

    Logger.debug(f"Rendered {len(lines)} lines on a {height}x{width} page")
    return BinaryImage(data=page)


def to_gray(page: BinaryImage) -> np.ndarray:
    """Ink dark on light paper, the way a scan looks."""
    return np.where(page.data == 1, N.INK_INTENSITY, N.PAPER_INTENSITY).astype(np.uint8)
