"""Centroid-distance signatures of binary shape images."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateShapeError, EmptyShapeError, InvalidInputError

DEFAULT_BINS = 360


class BinaryImage:
    """Immutable foreground mask; ``mask[y, x]`` is True for shape pixels."""

    __slots__ = ("_mask",)

    def __init__(self, mask):
        m = np.array(mask, dtype=bool, copy=True)
        if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
            raise InvalidInputError(f"image mask must be a nonempty 2-D array, got shape {m.shape}")
        m.setflags(write=False)
        self._mask = m

    @classmethod
    def from_pixels(cls, width: int, height: int, pixels) -> "BinaryImage":
        """Build from a row-major flat sequence of booleans."""
        flat = np.asarray(pixels, dtype=bool).ravel()
        if width < 1 or height < 1 or flat.size != width * height:
            raise InvalidInputError(
                f"expected {width}x{height}={width * height} pixels, got {flat.size}"
            )
        return cls(flat.reshape(height, width))

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    @property
    def width(self) -> int:
        return self._mask.shape[1]

    @property
    def height(self) -> int:
        return self._mask.shape[0]

    @property
    def pixels(self) -> np.ndarray:
        return self._mask.ravel()

    @property
    def foreground_count(self) -> int:
        return int(self._mask.sum())

    def __eq__(self, other):
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return np.array_equal(self._mask, other._mask)

    def __hash__(self):
        return hash((self._mask.shape, self._mask.tobytes()))

    def __repr__(self):
        return f"BinaryImage({self.width}x{self.height}, foreground={self.foreground_count})"


@dataclass(frozen=True)
class Centroid:
    x_c: float
    y_c: float


# One record per contour pixel: position, angle in [0, 2*pi), centroid distance.
CONTOUR_DTYPE = np.dtype([("x", np.int64), ("y", np.int64), ("angle", np.float64), ("distance", np.float64)])


@dataclass(frozen=True)
class ShapeSignature:
    samples: np.ndarray
    bin_width: float

    @property
    def bins(self) -> int:
        return self.samples.size


def _foreground(image: BinaryImage) -> tuple[np.ndarray, np.ndarray]:
    ys, xs = np.nonzero(image.mask)
    if xs.size == 0:
        raise EmptyShapeError("empty shape: image has no foreground pixels")
    return xs.astype(np.int64), ys.astype(np.int64)


def centroid(image: BinaryImage) -> Centroid:
    """Mean column and row index of the foreground pixels."""
    xs, ys = _foreground(image)
    n = xs.size
    return Centroid(int(xs.sum()) / n, int(ys.sum()) / n)


def extract_contour(image: BinaryImage) -> np.ndarray:
    """Foreground pixels touching background (or the frame) through a 4-neighbour.

    Returns an ``(m, 2)`` integer array of ``(x, y)`` pairs in row-major order.
    """
    _foreground(image)
    m = np.pad(image.mask, 1, constant_values=False)
    core = m[1:-1, 1:-1]
    interior = m[:-2, 1:-1] & m[2:, 1:-1] & m[1:-1, :-2] & m[1:-1, 2:]
    ys, xs = np.nonzero(core & ~interior)
    return np.column_stack((xs, ys)).astype(np.int64)


def contour_points(image: BinaryImage) -> np.ndarray:
    """Contour pixels with their angle and distance relative to the centroid."""
    fx, fy = _foreground(image)
    n = fx.size
    sx, sy = int(fx.sum()), int(fy.sum())
    pts = extract_contour(image)
    # (n*x - sum)/n is exact in the integer numerator, so translating the
    # shape by whole pixels leaves every offset bit-identical.
    dx = (n * pts[:, 0] - sx) / n
    dy = (n * pts[:, 1] - sy) / n
    out = np.empty(pts.shape[0], dtype=CONTOUR_DTYPE)
    out["x"], out["y"] = pts[:, 0], pts[:, 1]
    out["angle"] = np.mod(np.arctan2(dy, dx), 2 * np.pi)
    out["distance"] = np.hypot(dx, dy)
    return out


def _fill_circular(values: np.ndarray, filled: np.ndarray) -> np.ndarray:
    k = values.size
    known = np.flatnonzero(filled)
    # Unroll one period either side so interpolation wraps around.
    xp = np.concatenate((known - k, known, known + k))
    fp = np.tile(values[known], 3)
    return np.interp(np.arange(k), xp, fp)


def signature(image: BinaryImage, bins: int = DEFAULT_BINS) -> ShapeSignature:
    """Sample the centroid-distance function into ``bins`` angular bins.

    Each bin keeps the farthest contour point falling into it; empty bins are
    linearly interpolated from their nearest filled neighbours, wrapping
    around 2*pi.
    """
    if int(bins) != bins or bins < 4:
        raise InvalidInputError(f"bins must be an integer >= 4, got {bins!r}")
    bins = int(bins)
    pts = contour_points(image)
    width = 2 * math.pi / bins
    idx = np.minimum((pts["angle"] / width).astype(np.int64), bins - 1)
    values = np.full(bins, -np.inf)
    np.maximum.at(values, idx, pts["distance"])
    filled = np.isfinite(values)
    if filled.sum() < 3:
        raise DegenerateShapeError(
            f"degenerate shape: contour covers only {int(filled.sum())} of {bins} angular bins"
        )
    samples = values if filled.all() else _fill_circular(values, filled)
    return ShapeSignature(samples, width)


def rotate_image(image: BinaryImage, angle: float) -> BinaryImage:
    """Rotate by ``angle`` radians about the image centre, nearest-neighbour.

    The rotation acts on (x, y) pixel coordinates.  Pixels leaving the frame
    are dropped and uncovered pixels become background.
    """
    h, w = image.height, image.width
    cx, cy = (w - 1) / 2, (h - 1) / 2
    c, s = math.cos(angle), math.sin(angle)
    yy, xx = np.mgrid[0:h, 0:w]
    u, v = xx - cx, yy - cy
    # inverse map: destination -> source
    src_x = np.floor(c * u + s * v + cx + 0.5).astype(np.int64)
    src_y = np.floor(-s * u + c * v + cy + 0.5).astype(np.int64)
    inside = (src_x >= 0) & (src_x < w) & (src_y >= 0) & (src_y < h)
    out = np.zeros((h, w), dtype=bool)
    out[inside] = image.mask[src_y[inside], src_x[inside]]
    return BinaryImage(out)


def translate_image(image: BinaryImage, dx: int, dy: int) -> BinaryImage:
    """Shift by whole pixels; raises if any foreground would leave the frame."""
    xs, ys = _foreground(image)
    nx, ny = xs + dx, ys + dy
    if nx.min() < 0 or ny.min() < 0 or nx.max() >= image.width or ny.max() >= image.height:
        raise InvalidInputError(f"translation by ({dx}, {dy}) moves the shape out of frame")
    out = np.zeros_like(image.mask)
    out[ny, nx] = True
    return BinaryImage(out)
