from typing import List, Dict, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator



def _frozen_array(value, dtype) -> np.ndarray:
    array = np.array(value, dtype=dtype, copy=True)
    if array.ndim != 2:
        raise ValueError(f"expected a 2-D raster, got {array.ndim} dimensions")
    array.setflags(write=False)
    return array


class _Raster(BaseModel):
    """Row-major 2-D raster. `data[row, col]`, uint8."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    data: np.ndarray

    @property
    def height(self) -> int:
        return int(self.data.shape[0])

    @property
    def width(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.height, self.width)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return np.array_equal(self.data, other.data)

    __hash__ = None


class GrayImage(_Raster):
    """8-bit intensities, 0 = black."""

    @field_validator("data", mode="before")
    @classmethod
    def _check_data(cls, value):
        array = np.asarray(value)
        if array.size and (array.min() < 0 or array.max() > 255):
            raise ValueError("intensities must lie in [0, 255]")
        return _frozen_array(array, np.uint8)


class BinaryImage(_Raster):
    """
    Two-valued raster in the inverted convention:
    - `1` = ink (foreground)
    - `0` = background
    """

    @field_validator("data", mode="before")
    @classmethod
    def _check_data(cls, value):
        array = np.asarray(value)
        if array.dtype == bool:
            array = array.astype(np.uint8)
        if array.size and not np.isin(array, (0, 1)).all():
            raise ValueError("binary images hold only 0 and 1")
        return _frozen_array(array, np.uint8)

    @classmethod
    def blank(cls, height: int, width: int) -> "BinaryImage":
        return cls(data=np.zeros((height, width), dtype=np.uint8))

    @property
    def foreground(self) -> int:
        """Count of ink pixels."""
        return int(self.data.sum(dtype=np.int64))

    def is_empty(self) -> bool:
        return not self.data.any()


class ComponentLabeling(BaseModel):
    """Connected components of a BinaryImage, `labels[row, col]` is 0 on background."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    labels: np.ndarray
    component_sizes: Dict[int, int] = Field(default_factory=dict)
    connectivity: int = 8

    @field_validator("labels", mode="before")
    @classmethod
    def _check_labels(cls, value):
        array = np.asarray(value)
        if array.size and array.min() < 0:
            raise ValueError("labels must be non-negative")
        return _frozen_array(array, np.int32)

    @model_validator(mode="after")
    def _check_sizes(self):
        if sum(self.component_sizes.values()) != int(np.count_nonzero(self.labels)):
            raise ValueError("component sizes must sum to the foreground pixel count")
        return self

    @property
    def height(self) -> int:
        return int(self.labels.shape[0])

    @property
    def width(self) -> int:
        return int(self.labels.shape[1])

    @property
    def count(self) -> int:
        return len(self.component_sizes)


class BBox(BaseModel):
    """
    Inclusive pixel extent inside a source image.
    - `row_min`, `row_max` = first and last row
    - `col_min`, `col_max` = first and last column
    """
    model_config = ConfigDict(frozen=True)

    row_min: int = Field(..., ge=0, description="First row holding ink")
    row_max: int = Field(..., ge=0, description="Last row holding ink")
    col_min: int = Field(..., ge=0, description="First column holding ink")
    col_max: int = Field(..., ge=0, description="Last column holding ink")

    @model_validator(mode="after")
    def _check_order(self):
        if self.row_min > self.row_max or self.col_min > self.col_max:
            raise ValueError(f"empty box {self.to_list()}")
        return self

    def to_list(self) -> List[int]:
        """
        Convert the box to a list [row_min, row_max, col_min, col_max].
        """
        return [self.row_min, self.row_max, self.col_min, self.col_max]

    @property
    def height(self) -> int:
        return self.row_max - self.row_min + 1

    @property
    def width(self) -> int:
        return self.col_max - self.col_min + 1

    def slices(self) -> Tuple[slice, slice]:
        """Numpy index selecting the box."""
        return slice(self.row_min, self.row_max + 1), slice(self.col_min, self.col_max + 1)


class LineSegment(BaseModel):
    model_config = ConfigDict(frozen=True)

    image: BinaryImage
    row_offset: int = Field(..., ge=0, description="Page row of the line's first row")
    col_offset: int = Field(default=0, ge=0, description="Page column of the clipped line's first column")


class Glyph(BaseModel):
    model_config = ConfigDict(frozen=True)

    image: BinaryImage
    space_before: int = Field(default=0, ge=0, description="Blank columns between the previous glyph and this one")
    col_offset: int = Field(default=0, ge=0, description="Column of the glyph's first column inside its line")
    row_offset: int = Field(default=0, ge=0, description="Row of the glyph's first row inside its line")


class Classification(BaseModel):
    """Best template for a glyph, with the full score vector in store order."""
    model_config = ConfigDict(frozen=True)

    label: str
    score: float
    labels: Tuple[str, ...]
    scores: Tuple[float, ...]

    @model_validator(mode="after")
    def _check_argmax(self):
        if len(self.labels) != len(self.scores) or not self.scores:
            raise ValueError("labels and scores must be non-empty and aligned")
        best = max(self.scores)
        if self.score != best or self.label != self.labels[self.scores.index(best)]:
            raise ValueError("label must be the first label attaining the best score")
        return self

    def runners_up(self, k: int = 3) -> List[Tuple[str, float]]:
        """The `k` best (label, score) pairs after the winner, best first, store order on ties."""
        winner = self.scores.index(self.score)
        ranked = sorted(
            (i for i in range(len(self.scores)) if i != winner),
            key=lambda i: (-self.scores[i], i),
        )
        return [(self.labels[i], self.scores[i]) for i in ranked[:k]]


class LineTranscript(BaseModel):
    model_config = ConfigDict(frozen=True)

    glyph_results: Tuple[Tuple[Classification, int], ...] = ()
    text: str = ""

    @model_validator(mode="after")
    def _check_text(self):
        if len(self.text.replace(" ", "")) != len(self.glyph_results):
            raise ValueError("text must hold one character per recognized glyph")
        return self
