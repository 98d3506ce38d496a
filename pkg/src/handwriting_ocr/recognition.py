"""Template correlation matching and assembly of glyph labels into text."""

import math
import logging
from typing import List, NamedTuple, Sequence, Tuple, Union

import numpy as np

from .common import names as N
from .common.base_models import BinaryImage, Classification, Glyph, LineTranscript
from .common.errors import DimensionMismatch
from .templates import TemplateStore, normalize_glyph


Logger = logging.getLogger(__name__)

NO_BREAK = math.inf



# REGION: [Correlation]

class PreparedImage(NamedTuple):
    """Flattened mean-removed pixels, their sum of squares, and the first pixel (for constant images)."""
    centered: np.ndarray
    sum_squares: float
    first: float


def prepare_image(image: Union[BinaryImage, np.ndarray]) -> PreparedImage:
    pixels = np.asarray(image.data if isinstance(image, BinaryImage) else image, dtype=np.float64).ravel()
    centered = pixels - pixels.mean()
    return PreparedImage(centered, float(np.sum(centered * centered)), float(pixels[0]))


def correlate(a: PreparedImage, b: PreparedImage) -> float:
    """Pearson coefficient of two prepared images of equal size."""
    if a.sum_squares == 0.0 or b.sum_squares == 0.0:
        # DOC: zero variance, Pearson is undefined
        return 1.0 if a.sum_squares == b.sum_squares and a.first == b.first else 0.0
    value = float(np.sum(a.centered * b.centered)) / math.sqrt(a.sum_squares * b.sum_squares)
    return min(1.0, max(-1.0, value))


def corr2(a: Union[BinaryImage, np.ndarray], b: Union[BinaryImage, np.ndarray]) -> float:
    """
    2-D Pearson correlation coefficient between two same-shape images.

    Returns 1.0 for two equal constant images and 0.0 whenever any other
    zero-variance image is involved.

    Raises:
        DimensionMismatch: shapes differ.
    """
    a_shape = a.shape if isinstance(a, BinaryImage) else np.shape(a)
    b_shape = b.shape if isinstance(b, BinaryImage) else np.shape(b)
    if tuple(a_shape) != tuple(b_shape):
        raise DimensionMismatch(tuple(a_shape), tuple(b_shape))
    return correlate(prepare_image(a), prepare_image(b))

# ENDREGION: [Correlation]



# REGION: [Classification]

def classify(glyph: Union[Glyph, BinaryImage], store: TemplateStore) -> Classification:
    """
    Best matching template for a glyph.

    The glyph is normalized to 42x24 and correlated with every template in store
    order; the first label reaching the highest score wins.
    """
    image = glyph.image if isinstance(glyph, Glyph) else glyph
    prepared_glyph = prepare_image(normalize_glyph(image))
    scores = tuple(correlate(prepared_glyph, template) for template in store.prepared(prepare_image))

    best = max(scores)
    return Classification(
        label=store.labels[scores.index(best)],
        score=best,
        labels=store.labels,
        scores=scores,
    )


def confusable_pairs(store: TemplateStore, limit: int = 10) -> List[Tuple[str, str, float]]:
    """Template pairs ranked by mutual correlation, most similar first."""
    prepared = store.prepared(prepare_image)
    pairs = [
        (store.labels[i], store.labels[j], correlate(prepared[i], prepared[j]))
        for i in range(len(store))
        for j in range(i + 1, len(store))
    ]
    pairs.sort(key=lambda pair: -pair[2])
    return pairs[:limit]

# ENDREGION: [Classification]



# REGION: [Assembly]

def word_break_threshold(spaces: Sequence[int], space_ratio: float = N.SPACE_RATIO) -> float:
    """
    Gap size from which a space becomes a word break: `space_ratio` of the widest gap.

    Returns `NO_BREAK` (+inf) for no gaps or only zero gaps.
    """
    widest = max(spaces, default=0)
    if widest <= 0:
        return NO_BREAK
    return space_ratio * widest


def assemble_line(results: Sequence[Tuple[Classification, int]], space_ratio: float = N.SPACE_RATIO) -> LineTranscript:
    """Join glyph labels, inserting one space before every glyph whose gap reaches the threshold."""
    results = tuple((classification, int(space)) for classification, space in results)
    threshold = word_break_threshold([space for _, space in results[1:]], space_ratio)

    characters = []
    for index, (classification, space_before) in enumerate(results):
        if index > 0 and space_before >= threshold:
            characters.append(" ")
        characters.append(classification.label)
    return LineTranscript(glyph_results=results, text="".join(characters))


def assemble_page(lines: Sequence[LineTranscript]) -> str:
    """Line texts joined by newlines, with a trailing newline unless empty."""
    return "".join(f"{line.text}\n" for line in lines)

# ENDREGION: [Assembly]
