# DOC: Generic utils

import os
import sys
import hashlib
import logging
import warnings

import numpy as np

import rasterio
from rasterio.enums import ColorInterp
from rasterio.errors import NotGeoreferencedWarning, RasterioIOError

from . import names as N
from .errors import UndecodableImage


Logger = logging.getLogger(__name__)



# REGION: [Generic utils]

def normpath(pathname):
    """ normpath - normalizes the path to use forward slashes """
    if not pathname:
        return ""
    return os.path.normpath(str(pathname).replace("\\", "/")).replace("\\", "/")

def justpath(pathname, n=1):
    """ justpath - returns the path without the last n components """
    for _ in range(n):
        pathname, _ = os.path.split(normpath(pathname))
    if pathname == "":
        return "."
    return normpath(pathname)


def hash_bytes(*chunks: bytes, hash_method=hashlib.sha256) -> str:
    digest = hash_method()
    for chunk in chunks:
        digest.update(chunk)
    return digest.hexdigest()


def env_value(name: str, default, cast=str):
    """Read an environment variable, falling back to `default` when unset or empty."""
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return cast(value)

# ENDREGION: [Generic utils]



# REGION: [Logging]

def setup_logging(level: str | int | None = None):
    level = level if level is not None else env_value(N.ENV_LOG_LEVEL, "INFO")
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

# ENDREGION: [Logging]



# REGION: [Raster I/O]

def read_raster(path) -> np.ndarray:
    """
    Read an 8-bit PNG or BMP with rasterio.

    Returns:
        np.ndarray: (height, width) for single band rasters, (height, width, 3) for color rasters.
        Palette images are expanded to RGB, alpha bands are dropped.
    """
    try:
        with rasterio.open(path) as src:
            if src.driver not in N.SUPPORTED_DRIVERS:
                raise UndecodableImage(path, f"unsupported format {src.driver}")
            if any(dtype != "uint8" for dtype in src.dtypes):
                raise UndecodableImage(path, f"expected 8-bit samples, got {src.dtypes[0]}")
            bands = src.read()
            colorinterp = src.colorinterp
            colormap = src.colormap(1) if colorinterp[0] == ColorInterp.palette else None
    except RasterioIOError as err:
        raise UndecodableImage(path, str(err)) from err

    # DOC: indexed color → RGB through the palette
    if colormap is not None:
        lut = np.zeros((256, 3), dtype=np.uint8)
        for index, rgba in colormap.items():
            lut[index] = rgba[:3]
        return lut[bands[0]]

    if bands.shape[0] in (1, 2):
        # DOC: gray or gray+alpha
        return bands[0]
    if bands.shape[0] in (3, 4):
        return np.moveaxis(bands[:3], 0, -1)
    raise UndecodableImage(path, f"unexpected band count {bands.shape[0]}")


def write_png(path, array: np.ndarray):
    """Write a single band uint8 array as PNG."""
    array = np.asarray(array, dtype=np.uint8)
    os.makedirs(justpath(path), exist_ok=True)
    with warnings.catch_warnings():
        disable_warnings()
        with rasterio.open(
            path, "w",
            driver="PNG",
            height=array.shape[0],
            width=array.shape[1],
            count=1,
            dtype="uint8",
        ) as dst:
            dst.write(array, 1)

# ENDREGION: [Raster I/O]



# REGION: [Disable warnings]

def disable_warnings():
    # DOC: plain PNG and BMP files carry no georeferencing
    for warning in disable_rasterio_warnings():
        warnings.filterwarnings("ignore", category=warning)

def disable_rasterio_warnings():
    return [
        NotGeoreferencedWarning,
    ]

# ENDREGION: [Disable warnings]
