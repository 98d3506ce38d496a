"""Page preprocessing: decode, grayscale, threshold, binarize and denoise."""

import logging

import numpy as np
from scipy import ndimage

from .common import names as N
from .common import utils
from .common.base_models import BinaryImage, ComponentLabeling, GrayImage
from .common.errors import ConstantImage, EmptyImage


Logger = logging.getLogger(__name__)



# REGION: [Decode and grayscale]

def to_grayscale(rgb_image) -> GrayImage:
    """
    Convert an (height, width, 3) 8-bit image to luma with BT.601 weights.

    A 2-D input is taken as already gray.
    """
    rgb = np.asarray(rgb_image)
    if rgb.ndim < 2 or rgb.shape[0] == 0 or rgb.shape[1] == 0:
        raise EmptyImage(rgb.shape)
    if rgb.ndim == 2:
        return GrayImage(data=rgb)

    weights = np.asarray(N.GRAYSCALE_WEIGHTS, dtype=np.float64)
    luma = rgb[..., :3].astype(np.float64) @ weights
    return GrayImage(data=np.clip(np.rint(luma), 0, 255).astype(np.uint8))


def load_page(path) -> GrayImage:
    """Decode a PNG/BMP page and bring it to grayscale."""
    return to_grayscale(utils.read_raster(path))

# ENDREGION: [Decode and grayscale]



# REGION: [Threshold]

def otsu_threshold(img: GrayImage) -> int:
    """
    Otsu's threshold over the 256-bin histogram.

    Classes are {<= t} and {> t}. The between-class variance is compared in exact
    integer arithmetic, so equal variances really tie and the smallest `t` wins.

    Raises:
        EmptyImage: the image has no pixel.
        ConstantImage: a single intensity, nothing to separate.
    """
    if img.data.size == 0:
        raise EmptyImage(img.shape)

    histogram = np.bincount(img.data.ravel(), minlength=256)
    counts = [int(c) for c in histogram]
    total_count = sum(counts)
    total_sum = sum(i * c for i, c in enumerate(counts))

    # DOC: variance ∝ (n1·s0 - n0·s1)² / (n0·n1), kept as a fraction (num, den)
    best_t, best_num, best_den = None, 0, 1
    n0 = s0 = 0
    for t in range(256):
        n0 += counts[t]
        s0 += t * counts[t]
        n1, s1 = total_count - n0, total_sum - s0
        if n0 == 0 or n1 == 0:
            continue
        num = (n1 * s0 - n0 * s1) ** 2
        den = n0 * n1
        if num * best_den > best_num * den:
            best_t, best_num, best_den = t, num, den

    if best_t is None:
        raise ConstantImage(int(img.data.flat[0]))
    return best_t


def binarize(img: GrayImage, t: int) -> BinaryImage:
    """Ink (intensity <= t) becomes 1, paper becomes 0."""
    if not 0 <= t <= 255:
        raise ValueError(f"threshold must lie in [0, 255], got {t}")
    if img.data.size == 0:
        raise EmptyImage(img.shape)
    return BinaryImage(data=(img.data <= t).astype(np.uint8))

# ENDREGION: [Threshold]



# REGION: [Connected components]

def _structure(connectivity: int) -> np.ndarray:
    if connectivity == 8:
        return np.ones((3, 3), dtype=bool)
    if connectivity == 4:
        return ndimage.generate_binary_structure(2, 1)
    raise ValueError(f"connectivity must be 4 or 8, got {connectivity}")


def connected_components(img: BinaryImage, connectivity: int = N.CONNECTIVITY) -> ComponentLabeling:
    """Label ink regions; labels follow the raster order of each region's first pixel."""
    labels, count = ndimage.label(img.data, structure=_structure(connectivity))
    sizes = np.bincount(labels.ravel(), minlength=count + 1)[1:]
    return ComponentLabeling(
        labels=labels,
        component_sizes={label: int(size) for label, size in enumerate(sizes, start=1)},
        connectivity=connectivity,
    )


def remove_small_components(img: BinaryImage, min_size: int = N.MIN_COMPONENT_SIZE, connectivity: int = N.CONNECTIVITY) -> BinaryImage:
    """Drop every object with fewer than `min_size` pixels."""
    if min_size < 0:
        raise ValueError(f"min_size must be >= 0, got {min_size}")
    if min_size <= 1 or img.is_empty():
        return img

    labeling = connected_components(img, connectivity)
    keep = np.zeros(labeling.count + 1, dtype=bool)
    for label, size in labeling.component_sizes.items():
        keep[label] = size >= min_size

    removed = labeling.count - int(keep.sum())
    if removed:
        Logger.debug(f"Removed {removed} of {labeling.count} objects smaller than {min_size} pixels")
    return BinaryImage(data=keep[labeling.labels].astype(np.uint8))

# ENDREGION: [Connected components]



# REGION: [Preprocess]

def preprocess(gray: GrayImage, min_size: int = N.MIN_COMPONENT_SIZE, connectivity: int = N.CONNECTIVITY) -> BinaryImage:
    """Threshold, binarize and denoise a page. Propagates ConstantImage."""
    t = otsu_threshold(gray)
    binary = binarize(gray, t)
    denoised = remove_small_components(binary, min_size, connectivity)
    Logger.info(f"Threshold {t}: {binary.foreground} ink pixels, {denoised.foreground} after removing objects < {min_size} px")
    return denoised

# ENDREGION: [Preprocess]
