import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from pydantic import ValidationError

from handwriting_ocr import recognition, segmentation
from handwriting_ocr.common import names as N
from handwriting_ocr.common.base_models import BinaryImage, Classification
from handwriting_ocr.common.errors import DimensionMismatch
from handwriting_ocr.templates import TemplateStore, normalize_glyph


def _result(label: str, space_before: int = 0):
    return Classification(label=label, score=1.0, labels=(label,), scores=(1.0,)), space_before


def _results(labels: str, spaces):
    return [_result(label, space) for label, space in zip(labels, spaces)]


# REGION: [corr2]

def test_corr2_identity_and_complement():
    a = np.array([[1, 0], [0, 1]], dtype=np.uint8)
    assert recognition.corr2(a, a) == 1.0
    assert recognition.corr2(a, 1 - a) == -1.0


def test_corr2_known_value():
    a = np.array([[1, 0], [0, 0]])
    b = np.array([[1, 1], [0, 0]])
    assert recognition.corr2(a, b) == pytest.approx(1 / math.sqrt(3), abs=1e-12)


@pytest.mark.parametrize("a, b, expected", [
    (np.zeros((3, 3)), np.zeros((3, 3)), 1.0),
    (np.ones((3, 3)), np.ones((3, 3)), 1.0),
    (np.zeros((3, 3)), np.ones((3, 3)), 0.0),
    (np.ones((3, 3)), np.eye(3), 0.0),
    (np.eye(3), np.zeros((3, 3)), 0.0),
])
def test_corr2_constant_images(a, b, expected):
    assert recognition.corr2(a, b) == expected


def test_corr2_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        recognition.corr2(np.ones((2, 3)), np.ones((3, 2)))


def test_corr2_accepts_binary_images():
    img = BinaryImage(data=np.eye(4))
    assert recognition.corr2(img, img.data) == 1.0


@settings(max_examples=200, deadline=None)
@given(
    arrays(np.int64, (6, 7), elements=st.integers(0, 255)),
    arrays(np.int64, (6, 7), elements=st.integers(0, 255)),
)
def test_corr2_symmetric_and_bounded(a, b):
    r = recognition.corr2(a, b)
    assert r == recognition.corr2(b, a)
    assert -1.0 <= r <= 1.0


@settings(max_examples=100, deadline=None)
@given(
    arrays(np.int64, (5, 5), elements=st.integers(0, 255)),
    st.integers(1, 5),
    st.integers(-100, 100),
)
def test_corr2_affine_invariance(a, scale, shift):
    assume(a.min() != a.max())
    assert recognition.corr2(a, scale * a + shift) == pytest.approx(1.0, abs=1e-9)
    assert recognition.corr2(a, -scale * a + shift) == pytest.approx(-1.0, abs=1e-9)


def test_corr2_matches_pearson_on_random_pairs():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        a = rng.integers(0, 2, size=N.TEMPLATE_SHAPE)
        b = rng.integers(0, 2, size=N.TEMPLATE_SHAPE)
        expected = np.corrcoef(a.ravel(), b.ravel())[0, 1]
        assert recognition.corr2(a, b) == pytest.approx(expected, abs=1e-12)

# ENDREGION: [corr2]


# REGION: [classify]

def test_every_template_recognizes_itself(store):
    for label in store.labels:
        result = recognition.classify(store[label], store)
        assert result.label == label
        assert result.score == pytest.approx(1.0, abs=1e-12)


def test_classify_ties_go_to_earlier_label(template_arrays):
    entries = {label: BinaryImage(data=t) for label, t in template_arrays.items()}
    entries["o"] = entries["a"]
    store = TemplateStore.from_mapping(entries)
    assert recognition.classify(entries["o"], store).label == "a"

    swapped = TemplateStore(["b", "a"], [template_arrays["a"], template_arrays["a"]], strict=False)
    assert recognition.classify(BinaryImage(data=template_arrays["a"]), swapped).label == "b"


def test_score_vector_matches_corr2(store):
    rng = np.random.default_rng(7)
    data = rng.integers(0, 2, size=(30, 20))
    data[0, 0] = data[-1, -1] = 1
    glyph, _ = segmentation.clip(BinaryImage(data=data))
    result = recognition.classify(glyph, store)
    normalized = normalize_glyph(glyph)
    assert result.labels == store.labels
    assert result.scores == tuple(recognition.corr2(normalized, template) for template in store.stack)
    assert result.score == max(result.scores)


def test_classify_normalizes_larger_glyph(store):
    big = BinaryImage(data=np.kron(store["R"].data, np.ones((2, 2), dtype=np.uint8)))
    assert recognition.classify(big, store).label == "R"


def test_confusable_pairs_finds_near_duplicates(template_arrays):
    entries = {label: BinaryImage(data=t) for label, t in template_arrays.items()}
    almost_a = template_arrays["a"].copy()
    almost_a[20, 12] = 1 - almost_a[20, 12]
    entries["o"] = BinaryImage(data=almost_a)
    store = TemplateStore.from_mapping(entries)

    first, second, score = recognition.confusable_pairs(store, 1)[0]
    assert (first, second) == ("a", "o")
    assert score > 0.9
    assert len(recognition.confusable_pairs(store, 5)) == 5


TAIL_ROWS, TAIL_COL = slice(20, 32), 19


@pytest.fixture
def tailed_o_store(template_arrays) -> TemplateStore:
    """'o' drawn as 'a' plus a 12 pixel stroke, the way a closed 'a' and an 'o' differ."""
    entries = {label: BinaryImage(data=t) for label, t in template_arrays.items()}
    o_template = template_arrays["a"].copy()
    o_template[TAIL_ROWS, TAIL_COL] = 1
    entries["o"] = BinaryImage(data=o_template)
    return TemplateStore.from_mapping(entries)


def test_sloppy_a_reads_as_o(template_arrays, tailed_o_store):
    # DOC: an intended 'a' with most of the stroke is nearer to 'o'
    glyph = template_arrays["a"].copy()
    glyph[20:28, TAIL_COL] = 1
    result = recognition.classify(BinaryImage(data=glyph), tailed_o_store)
    assert result.label == "o"
    assert result.runners_up(1)[0][0] == "a"
    assert result.scores[tailed_o_store.labels.index("a")] < result.score


def test_classification_checks_argmax():
    with pytest.raises(ValidationError):
        Classification(label="b", score=0.5, labels=("a", "b"), scores=(0.5, 0.5))


def test_runners_up_order():
    result = Classification(label="b", score=0.9, labels=tuple("abcd"), scores=(0.1, 0.9, 0.5, 0.5))
    assert result.runners_up(2) == [("c", 0.5), ("d", 0.5)]
    assert result.runners_up(10)[-1] == ("a", 0.1)

# ENDREGION: [classify]


# REGION: [assembly]

@pytest.mark.parametrize("spaces, expected", [
    ([3, 10, 2, 8], 7.5),
    ([4, 4, 4], 3.0),
    ([], recognition.NO_BREAK),
    ([0, 0], recognition.NO_BREAK),
])
def test_word_break_threshold(spaces, expected):
    assert recognition.word_break_threshold(spaces) == expected


def test_word_break_threshold_ratio():
    assert recognition.word_break_threshold([10], 0.5) == 5.0


@pytest.mark.parametrize("labels, spaces, expected", [
    ("cat", [0, 5, 1], "c at"),
    ("acat", [0, 6, 2, 2], "a cat"),
    ("x", [0], "x"),
    ("abcde", [0, 3, 10, 2, 8], "ab cd e"),
    ("ab", [0, 0], "ab"),
])
def test_assemble_line(labels, spaces, expected):
    line = recognition.assemble_line(_results(labels, spaces))
    assert line.text == expected
    assert len(line.glyph_results) == len(labels)


def test_equal_gaps_all_become_breaks():
    assert recognition.assemble_line(_results("abcd", [0, 3, 3, 3])).text == "a b c d"


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 50), min_size=1, max_size=12))
def test_spaces_match_qualifying_gaps(gaps):
    gaps = [0] + gaps
    line = recognition.assemble_line(_results("x" * len(gaps), gaps))
    widest = max(gaps)
    qualifying = sum(gap >= N.SPACE_RATIO * widest for gap in gaps[1:]) if widest > 0 else 0
    assert line.text.count(" ") == qualifying
    assert line.text.replace(" ", "") == "x" * len(gaps)
    assert not line.text.startswith(" ") and not line.text.endswith(" ")


def test_assemble_line_empty():
    assert recognition.assemble_line([]).text == ""


def test_assemble_page():
    lines = [recognition.assemble_line(_results("ab", [0, 0])), recognition.assemble_line(_results("cd", [0, 0]))]
    assert recognition.assemble_page(lines) == "ab\ncd\n"
    assert recognition.assemble_page([]) == ""
    assert recognition.assemble_page([recognition.assemble_line([_result("x")])]) == "x\n"

# ENDREGION: [assembly]
