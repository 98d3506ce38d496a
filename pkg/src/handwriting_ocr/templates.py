"""Template database: manifest loading, validation and 42x24 normalization."""

import os
import logging
from typing import Callable, Dict, Iterable, List, Mapping, Tuple

import numpy as np

from . import imaging
from . import segmentation
from .common import names as N
from .common import utils
from .common.base_models import BinaryImage
from .common.errors import (
    BlankTemplate,
    ConstantImage,
    DuplicateLabel,
    EmptyGlyph,
    IdenticalTemplates,
    InvalidManifest,
    MissingLabel,
)


Logger = logging.getLogger(__name__)



# REGION: [Normalization]

def normalize_glyph(img: BinaryImage, target: Tuple[int, int] = N.TEMPLATE_SHAPE) -> BinaryImage:
    """
    Stretch a glyph to `target` (rows, cols) by nearest-neighbor sampling.

    Aspect ratio is not preserved. Output pixel (r, c) samples input
    (r·h // rows, c·w // cols), so an exact 2x image decimates to its even
    pixels. When down-scaling misses every ink pixel, ink is forward-mapped
    into the target grid instead so the result is never blank.

    Raises:
        EmptyGlyph: the glyph holds no ink.
    """
    if img.is_empty():
        raise EmptyGlyph()
    rows_out, cols_out = target
    if img.shape == (rows_out, cols_out):
        return img

    rows = (np.arange(rows_out) * img.height) // rows_out
    cols = (np.arange(cols_out) * img.width) // cols_out
    out = img.data[np.ix_(rows, cols)]
    if not out.any():
        ink_rows, ink_cols = np.nonzero(img.data)
        out[(ink_rows * rows_out) // img.height, (ink_cols * cols_out) // img.width] = 1
    return BinaryImage(data=out)

# ENDREGION: [Normalization]



# REGION: [Template store]

class TemplateStore:
    """
    Immutable label → 42x24 template map.

    A strict store holds exactly the 62 labels in A–Z, a–z, 0–9 order, which is
    also the classifier's tie-break order. Non-strict stores may repeat labels
    and are meant for experiments only.
    """

    def __init__(self, labels: Iterable[str], templates: Iterable, strict: bool = True):
        labels = tuple(labels)
        stack = np.array([
            t.data if isinstance(t, BinaryImage) else np.asarray(t, dtype=np.uint8)
            for t in templates
        ], dtype=np.uint8)

        if len(labels) != len(stack):
            raise InvalidManifest(f"{len(labels)} labels for {len(stack)} templates")
        if stack.ndim != 3 or stack.shape[1:] != N.TEMPLATE_SHAPE:
            raise InvalidManifest(f"templates must all be {N.TEMPLATE_ROWS}x{N.TEMPLATE_COLS}, got {stack.shape[1:]}")
        if not np.isin(stack, (0, 1)).all():
            raise InvalidManifest("templates must be binary")
        for label, template in zip(labels, stack):
            if not template.any():
                raise BlankTemplate(label, "<in memory>")

        if strict:
            if len(set(labels)) != len(labels):
                duplicated = next(label for label in labels if labels.count(label) > 1)
                raise DuplicateLabel(duplicated)
            missing = [label for label in N.TEMPLATE_LABELS if label not in labels]
            if missing:
                raise MissingLabel(missing)
            if labels != tuple(N.TEMPLATE_LABELS):
                raise InvalidManifest("template labels must follow A-Z, a-z, 0-9 order")

        stack.setflags(write=False)
        self._labels = labels
        self._stack = stack
        self._prepared: Dict[Callable, tuple] = dict()

    @classmethod
    def from_mapping(cls, entries: Mapping[str, BinaryImage]) -> "TemplateStore":
        """Build a strict store, reordering `entries` into store order."""
        unknown = sorted(set(entries) - set(N.TEMPLATE_LABELS))
        if unknown:
            raise InvalidManifest(f"unknown labels {unknown}")
        missing = [label for label in N.TEMPLATE_LABELS if label not in entries]
        if missing:
            raise MissingLabel(missing)
        return cls(N.TEMPLATE_LABELS, [entries[label] for label in N.TEMPLATE_LABELS])

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def stack(self) -> np.ndarray:
        """(n, 42, 24) read-only array of templates."""
        return self._stack

    def __len__(self):
        return len(self._labels)

    def __getitem__(self, label: str) -> BinaryImage:
        return BinaryImage(data=self._stack[self._labels.index(label)])

    def prepared(self, prepare: Callable) -> tuple:
        """`prepare` applied to every template, computed once per store."""
        if prepare not in self._prepared:
            self._prepared[prepare] = tuple(prepare(template) for template in self._stack)
        return self._prepared[prepare]

    def digest(self) -> str:
        return utils.hash_bytes("".join(self._labels).encode("utf-8"), self._stack.tobytes())

    def identical_pairs(self) -> List[Tuple[str, str]]:
        seen: Dict[bytes, str] = dict()
        pairs = []
        for label, template in zip(self._labels, self._stack):
            key = template.tobytes()
            if key in seen:
                pairs.append((seen[key], label))
            else:
                seen[key] = label
        return pairs

# ENDREGION: [Template store]



# REGION: [Manifest]

def read_manifest(manifest_path) -> List[Tuple[str, str]]:
    """
    Parse a `label<TAB>relative/path.png` manifest.

    Returns:
        list[tuple[str, str]]: (label, absolute path) records in file order.
    """
    base_dir = utils.justpath(os.path.abspath(manifest_path))
    try:
        with open(manifest_path, encoding="utf-8") as manifest:
            lines = manifest.read().splitlines()
    except OSError as err:
        raise InvalidManifest(f"Cannot read template manifest {manifest_path}: {err}", {"path": str(manifest_path)}) from err

    records = []
    seen = set()
    for line_number, line in enumerate(lines, start=1):
        if not line.strip() or line.startswith(N.MANIFEST_COMMENT):
            continue
        label, sep, relpath = line.partition(N.MANIFEST_SEPARATOR)
        if not sep or not relpath.strip():
            raise InvalidManifest(f"{manifest_path}:{line_number}: expected 'label<TAB>path'", {"line": line_number})
        if len(label) != 1 or label not in N.TEMPLATE_LABELS:
            raise InvalidManifest(f"{manifest_path}:{line_number}: invalid label {label!r}", {"line": line_number, "label": label})
        if label in seen:
            raise DuplicateLabel(label, line_number)
        seen.add(label)
        records.append((label, utils.normpath(os.path.join(base_dir, relpath.strip()))))

    missing = [label for label in N.TEMPLATE_LABELS if label not in seen]
    if missing:
        raise MissingLabel(missing)
    return records


def load_template_image(label: str, path) -> BinaryImage:
    """Decode, binarize, clip and normalize one template file."""
    gray = imaging.load_page(path)
    try:
        t = imaging.otsu_threshold(gray)
    except ConstantImage as err:
        raise BlankTemplate(label, path) from err
    image, _ = segmentation.clip(imaging.binarize(gray, t))
    return normalize_glyph(image)


def load_templates(manifest_path, require_distinct: bool = True) -> TemplateStore:
    """
    Load the 62-class template store described by a TSV manifest.

    Raises:
        InvalidManifest: unreadable or malformed manifest (MissingLabel, DuplicateLabel, BlankTemplate, IdenticalTemplates).
        UndecodableImage: a referenced file is not an 8-bit PNG/BMP.
    """
    entries = {label: load_template_image(label, path) for label, path in read_manifest(manifest_path)}
    store = TemplateStore.from_mapping(entries)

    identical = store.identical_pairs()
    if identical:
        if require_distinct:
            raise IdenticalTemplates(*identical[0])
        Logger.warning(f"Identical templates, ties go to the earlier label: {identical}")

    Logger.info(f"Loaded {len(store)} templates from {manifest_path} (digest {store.digest()[:12]})")
    return store

# ENDREGION: [Manifest]
