import os

import numpy as np
import pytest

from handwriting_ocr.common import names as N
from handwriting_ocr.common import utils
from handwriting_ocr.common.base_models import BinaryImage
from handwriting_ocr.templates import TemplateStore, load_templates


BLOCK = 6
BLOCK_ROWS = (6, 18, 30)
BLOCK_COLS = (5, 13)


def make_template(code: int) -> np.ndarray:
    """
    42x24 test glyph: a 2-pixel frame (so the template is tight, has no blank
    row or column and is one object) plus up to six 6x6 blocks spelling `code`
    in binary. Every code gives a different image.
    """
    template = np.zeros(N.TEMPLATE_SHAPE, dtype=np.uint8)
    template[:2, :] = template[-2:, :] = 1
    template[:, :2] = template[:, -2:] = 1
    bit = 0
    for top in BLOCK_ROWS:
        for left in BLOCK_COLS:
            if code >> bit & 1:
                template[top:top + BLOCK, left:left + BLOCK] = 1
            bit += 1
    return template


def ink_on_paper(binary: np.ndarray) -> np.ndarray:
    return np.where(binary == 1, N.INK_INTENSITY, N.PAPER_INTENSITY).astype(np.uint8)


def write_template_set(directory, templates: dict, skip=(), scale: dict | None = None) -> str:
    """Write one PNG per label plus a manifest; returns the manifest path."""
    scale = scale or dict()
    os.makedirs(directory / "glyphs", exist_ok=True)
    lines = ["# label\tpath"]
    for index, (label, template) in enumerate(templates.items()):
        if label in skip:
            continue
        factor = scale.get(label, 1)
        image = np.kron(template, np.ones((factor, factor), dtype=np.uint8))
        # DOC: numbered file names, "A.png" and "a.png" collide on case-insensitive filesystems
        relpath = f"glyphs/{index:02d}.png"
        utils.write_png(str(directory / relpath), ink_on_paper(image))
        lines.append(f"{label}\t{relpath}")
    manifest = directory / "templates.tsv"
    manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(manifest)


@pytest.fixture(scope="session")
def template_arrays() -> dict:
    return {label: make_template(code) for code, label in enumerate(N.TEMPLATE_LABELS)}


@pytest.fixture(scope="session")
def store(template_arrays) -> TemplateStore:
    return TemplateStore.from_mapping({label: BinaryImage(data=t) for label, t in template_arrays.items()})


@pytest.fixture(scope="session")
def manifest_path(tmp_path_factory, template_arrays) -> str:
    return write_template_set(tmp_path_factory.mktemp("templates"), template_arrays)


@pytest.fixture(scope="session")
def loaded_store(manifest_path) -> TemplateStore:
    return load_templates(manifest_path)
