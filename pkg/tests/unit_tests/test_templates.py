import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from handwriting_ocr import segmentation
from handwriting_ocr.common import names as N
from handwriting_ocr.common.base_models import BinaryImage
from handwriting_ocr.common.errors import (
    BlankTemplate,
    DuplicateLabel,
    EmptyGlyph,
    IdenticalTemplates,
    InvalidManifest,
    MissingLabel,
    UndecodableImage,
)
from handwriting_ocr.templates import TemplateStore, load_templates, normalize_glyph, read_manifest

from ..conftest import write_template_set


# REGION: [normalize_glyph]

def test_normalize_identity_on_template_shape():
    data = np.random.default_rng(0).integers(0, 2, size=N.TEMPLATE_SHAPE)
    data[0, 0] = 1
    img = BinaryImage(data=data)
    assert normalize_glyph(img) == img


def test_normalize_decimates_double_size():
    data = np.random.default_rng(1).integers(0, 2, size=(84, 48))
    data[0, 0] = 1
    out = normalize_glyph(BinaryImage(data=data))
    assert out.shape == N.TEMPLATE_SHAPE
    assert np.array_equal(out.data, data[0::2, 0::2])


def test_normalize_stretches_single_pixel():
    out = normalize_glyph(BinaryImage(data=np.ones((1, 1))))
    assert out.shape == N.TEMPLATE_SHAPE
    assert out.data.all()


def test_normalize_rejects_blank_glyph():
    with pytest.raises(EmptyGlyph):
        normalize_glyph(BinaryImage.blank(3, 3))


def test_normalize_never_blank_when_sampling_misses_ink():
    data = np.zeros((84, 48), dtype=np.uint8)
    data[0, 1] = data[1, 0] = data[83, 47] = 1
    out = normalize_glyph(BinaryImage(data=data))
    assert out.foreground > 0


@settings(max_examples=100, deadline=None)
@given(arrays(np.uint8, st.tuples(st.integers(1, 100), st.integers(1, 60)), elements=st.integers(0, 1)))
def test_normalize_properties(data):
    img = BinaryImage(data=data)
    if img.is_empty():
        return
    clipped, _ = segmentation.clip(img)
    out = normalize_glyph(clipped)
    assert out.shape == N.TEMPLATE_SHAPE
    assert out.foreground > 0
    assert normalize_glyph(out) == out

# ENDREGION: [normalize_glyph]


# REGION: [TemplateStore]

def test_store_order_and_size(store):
    assert len(store) == 62
    assert "".join(store.labels) == N.TEMPLATE_LABELS
    assert store.stack.shape == (62, *N.TEMPLATE_SHAPE)
    assert store["s"].shape == N.TEMPLATE_SHAPE


def test_store_is_read_only(store):
    with pytest.raises(ValueError):
        store.stack[0, 0, 0] = 0


def test_strict_store_requires_every_label(template_arrays):
    partial = {label: BinaryImage(data=t) for label, t in template_arrays.items() if label != "7"}
    with pytest.raises(MissingLabel) as err:
        TemplateStore.from_mapping(partial)
    assert err.value.missing == ["7"]


def test_store_rejects_wrong_shape():
    with pytest.raises(InvalidManifest):
        TemplateStore(["A"], [np.ones((10, 10))], strict=False)


def test_strict_store_checks_order_and_repeats(store):
    reordered = list(reversed(store.labels))
    with pytest.raises(InvalidManifest):
        TemplateStore(reordered, list(reversed(list(store.stack))))
    with pytest.raises(DuplicateLabel):
        TemplateStore(store.labels + ("A",), list(store.stack) + [store.stack[0]])


def test_non_strict_store_allows_repeats(store):
    doubled = TemplateStore(store.labels * 2, list(store.stack) * 2, strict=False)
    assert len(doubled) == 124
    assert len(doubled.identical_pairs()) == 62

# ENDREGION: [TemplateStore]


# REGION: [load_templates]

def test_load_full_manifest(loaded_store, store):
    assert loaded_store.labels == store.labels
    assert np.array_equal(loaded_store.stack, store.stack)


def test_load_is_deterministic(manifest_path, loaded_store):
    assert load_templates(manifest_path).digest() == loaded_store.digest()


def test_load_normalizes_large_template(tmp_path, template_arrays, store):
    manifest = write_template_set(tmp_path, template_arrays, scale={"Q": 2})
    assert load_templates(manifest)["Q"] == store["Q"]


def test_missing_digit(tmp_path, template_arrays):
    manifest = write_template_set(tmp_path, template_arrays, skip=("7",))
    with pytest.raises(MissingLabel) as err:
        load_templates(manifest)
    assert err.value.missing == ["7"]


def test_duplicate_label(tmp_path, template_arrays):
    manifest = write_template_set(tmp_path, template_arrays)
    with open(manifest, "a", encoding="utf-8") as f:
        f.write("A\tglyphs/01.png\n")
    with pytest.raises(DuplicateLabel):
        load_templates(manifest)


def test_malformed_record(tmp_path, template_arrays):
    manifest = write_template_set(tmp_path, template_arrays)
    with open(manifest, "a", encoding="utf-8") as f:
        f.write("AB\tglyphs/01.png\n")
    with pytest.raises(InvalidManifest):
        read_manifest(manifest)


def test_missing_manifest_file(tmp_path):
    with pytest.raises(InvalidManifest):
        load_templates(str(tmp_path / "absent.tsv"))


def test_undecodable_template(tmp_path, template_arrays):
    manifest = write_template_set(tmp_path, template_arrays)
    (tmp_path / "glyphs" / "00.png").write_bytes(b"not an image")
    with pytest.raises(UndecodableImage):
        load_templates(manifest)


def test_blank_template(tmp_path, template_arrays):
    arrays_ = dict(template_arrays)
    arrays_["A"] = np.zeros(N.TEMPLATE_SHAPE, dtype=np.uint8)
    manifest = write_template_set(tmp_path, arrays_)
    with pytest.raises(BlankTemplate):
        load_templates(manifest)


def test_identical_templates(tmp_path, template_arrays):
    arrays_ = dict(template_arrays)
    arrays_["o"] = arrays_["a"]
    manifest = write_template_set(tmp_path, arrays_)
    with pytest.raises(IdenticalTemplates):
        load_templates(manifest)
    assert load_templates(manifest, require_distinct=False)["o"] == load_templates(manifest, require_distinct=False)["a"]

# ENDREGION: [load_templates]
