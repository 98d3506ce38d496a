from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..common import names as N
from ..common import utils
from ..common.errors import InvalidConfig



def _build(model_cls, **kwargs):
    # DOC: unset (None) arguments fall back to the model defaults, which read the environment
    try:
        return model_cls(**{key: value for key, value in kwargs.items() if value is not None})
    except ValidationError as err:
        raise InvalidConfig(
            f"Invalid {model_cls.__name__}: {err.error_count()} error(s)",
            {"errors": [{"field": ".".join(str(loc) for loc in e["loc"]), "reason": e["msg"]} for e in err.errors()]},
        ) from err
    except ValueError as err:
        # DOC: an HWOCR_* value that cannot be cast to the field type
        raise InvalidConfig(f"Invalid {model_cls.__name__}: {err}", {"errors": [{"field": None, "reason": str(err)}]}) from err


class PipelineConfig(BaseModel):
    """
    Settings of one `recognize` run.
    Recognition defaults (15 pixel objects, 75% word gap) are overridable
    through HWOCR_* environment variables or CLI flags.
    """
    model_config = ConfigDict(frozen=True, validate_default=True)

    input_path: Path = Field(..., description="Scanned page, 8-bit PNG or BMP")
    templates_manifest: Path = Field(..., description="TSV manifest of the 62 templates")
    output_path: Path = Field(..., description="Destination text file (UTF-8, LF)")

    min_component_size: int = Field(
        default_factory=lambda: utils.env_value(N.ENV_MIN_COMPONENT, N.MIN_COMPONENT_SIZE, int),
        ge=0,
        description="Objects with fewer pixels are removed as noise",
    )
    space_ratio: float = Field(
        default_factory=lambda: utils.env_value(N.ENV_SPACE_RATIO, N.SPACE_RATIO, float),
        gt=0,
        le=1,
        description="Fraction of the widest gap of a line from which a gap is a word break",
    )
    connectivity: Literal[4, 8] = Field(
        default_factory=lambda: utils.env_value(N.ENV_CONNECTIVITY, N.CONNECTIVITY, int),
        description="Pixel adjacency used to delimit objects",
    )
    blank_threshold: int = Field(
        default_factory=lambda: utils.env_value(N.ENV_BLANK_THRESHOLD, N.BLANK_THRESHOLD, int),
        ge=0,
        description="Rows/columns with at most this much ink count as blank",
    )

    debug_dump: Optional[Path] = Field(default=None, description="Directory for per-glyph crops and their sidecar")
    diagnostics: Optional[Path] = Field(default=None, description="JSON lines file with per-glyph scores")

    @classmethod
    def build(cls, **kwargs) -> "PipelineConfig":
        """Validate settings, raising InvalidConfig instead of pydantic's ValidationError."""
        return _build(cls, **kwargs)


class RenderSpec(BaseModel):
    """Layout of a synthetic page drawn with the templates themselves."""
    model_config = ConfigDict(frozen=True)

    text: str = Field(default="", description="Text over the 62 labels, spaces and newlines")
    glyph_gap: int = Field(default=N.RENDER_GLYPH_GAP, ge=0, description="Blank columns between letters of a word")
    word_gap: int = Field(default=N.RENDER_WORD_GAP, ge=0, description="Blank columns per space")
    line_gap: int = Field(default=N.RENDER_LINE_GAP, ge=1, description="Blank rows between lines")
    margin: int = Field(default=N.RENDER_MARGIN, ge=0, description="Blank border around the page")
    space_ratio: float = Field(default=N.SPACE_RATIO, gt=0, le=1, description="Word-break ratio the layout must clear")

    @model_validator(mode="after")
    def _check_word_gap(self):
        if self.word_gap < self.glyph_gap / self.space_ratio:
            raise ValueError(
                f"word_gap {self.word_gap} must be >= glyph_gap / space_ratio = {self.glyph_gap / self.space_ratio:g}"
            )
        return self

    @classmethod
    def build(cls, **kwargs) -> "RenderSpec":
        return _build(cls, **kwargs)
