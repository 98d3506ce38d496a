"""Projection-profile segmentation of a binary page into lines and glyphs."""

import logging
from typing import List, Tuple

import numpy as np

from .common import names as N
from .common.base_models import BBox, BinaryImage, Glyph, LineSegment
from .common.errors import NothingToClip


Logger = logging.getLogger(__name__)



def clip(img: BinaryImage) -> Tuple[BinaryImage, BBox]:
    """
    Crop an image to the bounding box of its ink.

    Raises:
        NothingToClip: the image holds no ink.
    """
    rows = np.flatnonzero(img.data.any(axis=1))
    if rows.size == 0:
        raise NothingToClip()
    cols = np.flatnonzero(img.data.any(axis=0))
    bbox = BBox(
        row_min=int(rows[0]),
        row_max=int(rows[-1]),
        col_min=int(cols[0]),
        col_max=int(cols[-1]),
    )
    return BinaryImage(data=img.data[bbox.slices()]), bbox


def ink_runs(profile: np.ndarray, blank_threshold: int = N.BLANK_THRESHOLD) -> List[Tuple[int, int]]:
    """
    Maximal runs of profile entries above `blank_threshold`.

    Returns:
        list[tuple[int, int]]: half-open (start, stop) index pairs, in order.
    """
    inked = np.concatenate(([False], np.asarray(profile) > blank_threshold, [False]))
    edges = np.flatnonzero(np.diff(inked.astype(np.int8)))
    return [(int(start), int(stop)) for start, stop in zip(edges[0::2], edges[1::2])]


def split_lines(page: BinaryImage, blank_threshold: int = N.BLANK_THRESHOLD) -> List[LineSegment]:
    """Cut the page at blank rows; each line comes back clipped, top to bottom."""
    lines = []
    row_profile = page.data.sum(axis=1, dtype=np.int64)
    for start, stop in ink_runs(row_profile, blank_threshold):
        image, bbox = clip(BinaryImage(data=page.data[start:stop]))
        lines.append(LineSegment(image=image, row_offset=start + bbox.row_min, col_offset=bbox.col_min))
    Logger.debug(f"Extracted {len(lines)} lines")
    return lines


def split_glyphs(line: LineSegment, blank_threshold: int = N.BLANK_THRESHOLD) -> List[Glyph]:
    """
    Cut a clipped line at blank columns.

    Each glyph is clipped on all four sides. `space_before` counts the blank
    columns separating it from the previous glyph (0 for the first one).
    """
    glyphs = []
    col_profile = line.image.data.sum(axis=0, dtype=np.int64)
    previous_stop = None
    for start, stop in ink_runs(col_profile, blank_threshold):
        image, bbox = clip(BinaryImage(data=line.image.data[:, start:stop]))
        glyphs.append(Glyph(
            image=image,
            space_before=0 if previous_stop is None else start - previous_stop,
            col_offset=start + bbox.col_min,
            row_offset=bbox.row_min,
        ))
        previous_stop = stop
    return glyphs


def segment_page(page: BinaryImage, blank_threshold: int = N.BLANK_THRESHOLD) -> List[Tuple[LineSegment, List[Glyph]]]:
    """Lines of the page, each paired with its glyphs."""
    segmented = [(line, split_glyphs(line, blank_threshold)) for line in split_lines(page, blank_threshold)]
    Logger.info(f"Segmented {len(segmented)} lines, {sum(len(glyphs) for _, glyphs in segmented)} glyphs")
    return segmented


def reassemble(shape: Tuple[int, int], segmented: List[Tuple[LineSegment, List[Glyph]]]) -> BinaryImage:
    """Paste every glyph back at its page position."""
    page = np.zeros(shape, dtype=np.uint8)
    for line, glyphs in segmented:
        for glyph in glyphs:
            top = line.row_offset + glyph.row_offset
            left = line.col_offset + glyph.col_offset
            page[top:top + glyph.image.height, left:left + glyph.image.width] |= glyph.image.data
    return BinaryImage(data=page)
