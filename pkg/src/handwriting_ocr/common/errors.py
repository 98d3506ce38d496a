from typing import Optional

from . import names as N


# DOC: HandwritingOCRError is the root of every failure raised by the library. The CLI maps each subclass to an exit code.

class HandwritingOCRError(Exception):


    # DOC: ErrorType enumerates the error families, each one mapped to a process exit code
    class ErrorType():
        IO_ERROR = "IO_ERROR"
        INVALID_CONFIG = "INVALID_CONFIG"
        DEGENERATE_IMAGE = "DEGENERATE_IMAGE"

    error_type: str = ErrorType.INVALID_CONFIG
    exit_code: int = N.EXIT_INVALID_CONFIG

    # DOC: an error carries a human readable reason and optional structured data for the diagnostic
    def __init__(self, reason: str, data: Optional[dict] = None):
        super().__init__(reason)
        self.reason = reason
        self.data = data if data is not None else dict()

    @property
    def message(self):
        return self.reason

    @property
    def as_dict(self):
        return {
            "error": type(self).__name__,
            "error_type": self.error_type,
            "reason": self.reason,
            "data": self.data,
        }


# REGION: [I/O]

class IOFailure(HandwritingOCRError):
    error_type = HandwritingOCRError.ErrorType.IO_ERROR
    exit_code = N.EXIT_IO_ERROR


class UndecodableImage(IOFailure):
    """Raised when a raster cannot be read as an 8-bit PNG or BMP."""

    def __init__(self, path: str, detail: str):
        super().__init__(f"Cannot decode image {path}: {detail}", {"path": str(path), "detail": detail})

# ENDREGION: [I/O]


# REGION: [Configuration and manifest]

class InvalidConfig(HandwritingOCRError):
    pass


class InvalidManifest(HandwritingOCRError):
    pass


class MissingLabel(InvalidManifest):

    def __init__(self, missing: list[str]):
        super().__init__(f"Template manifest does not cover labels: {''.join(missing)}", {"missing": list(missing)})
        self.missing = list(missing)


class DuplicateLabel(InvalidManifest):

    def __init__(self, label: str, line_number: Optional[int] = None):
        super().__init__(f"Label {label!r} appears more than once in the template manifest", {"label": label, "line": line_number})
        self.label = label


class BlankTemplate(InvalidManifest):

    def __init__(self, label: str, path: str):
        super().__init__(f"Template for {label!r} has no ink after binarization ({path})", {"label": label, "path": str(path)})
        self.label = label


class IdenticalTemplates(InvalidManifest):

    def __init__(self, first: str, second: str):
        super().__init__(f"Templates {first!r} and {second!r} are identical after normalization", {"labels": [first, second]})
        self.labels = (first, second)


class UnrenderableCharacter(HandwritingOCRError):

    def __init__(self, character: str):
        super().__init__(f"Character {character!r} has no template to render with", {"character": character})
        self.character = character


class DimensionMismatch(HandwritingOCRError):

    def __init__(self, first: tuple, second: tuple):
        super().__init__(f"Images have different shapes: {first} vs {second}", {"shapes": [list(first), list(second)]})

# ENDREGION: [Configuration and manifest]


# REGION: [Degenerate images]

class DegenerateImage(HandwritingOCRError):
    error_type = HandwritingOCRError.ErrorType.DEGENERATE_IMAGE
    exit_code = N.EXIT_DEGENERATE_IMAGE


class EmptyImage(DegenerateImage):

    def __init__(self, shape: tuple):
        super().__init__(f"Image has a zero dimension: {shape}", {"shape": list(shape)})


class ConstantImage(DegenerateImage):
    """Raised when no threshold can separate ink from background."""

    def __init__(self, intensity: int):
        super().__init__(f"Image has constant intensity {intensity}, no threshold separates ink from paper", {"intensity": int(intensity)})
        self.intensity = int(intensity)


class NothingToClip(DegenerateImage):

    def __init__(self):
        super().__init__("Image has no foreground pixel to clip to")


class EmptyGlyph(DegenerateImage):

    def __init__(self):
        super().__init__("Glyph has no foreground pixel")

# ENDREGION: [Degenerate images]
