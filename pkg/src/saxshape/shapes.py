"""Synthetic shape rasters used as fixtures and benchmark inputs."""
from __future__ import annotations

import math

import numpy as np

from .signature import BinaryImage


def _grid(size, center):
    w, h = (size, size) if np.isscalar(size) else size
    cx, cy = ((w - 1) / 2, (h - 1) / 2) if center is None else center
    yy, xx = np.mgrid[0:h, 0:w]
    return xx - cx, yy - cy


def disk(size, radius: float, center=None) -> BinaryImage:
    """Pixels whose centre lies within ``radius`` of ``center``."""
    u, v = _grid(size, center)
    return BinaryImage(u * u + v * v <= radius * radius)


def ellipse(size, a: float, b: float, rotation: float = 0.0, center=None) -> BinaryImage:
    u, v = _grid(size, center)
    c, s = math.cos(rotation), math.sin(rotation)
    p, q = c * u + s * v, -s * u + c * v
    return BinaryImage((p / a) ** 2 + (q / b) ** 2 <= 1.0)


def regular_polygon(size, sides: int, radius: float, rotation: float = 0.0, center=None) -> BinaryImage:
    """Convex regular polygon with circumradius ``radius``.

    With ``rotation == 0`` the first vertex points along +x.
    """
    if sides < 3:
        raise ValueError("a polygon needs at least 3 sides")
    u, v = _grid(size, center)
    apothem = radius * math.cos(math.pi / sides)
    inside = np.ones(u.shape, dtype=bool)
    for k in range(sides):
        # outward normal of the edge between vertices k and k+1
        phi = rotation + (2 * k + 1) * math.pi / sides
        inside &= u * math.cos(phi) + v * math.sin(phi) <= apothem
    return BinaryImage(inside)


def triangle(size, radius: float, rotation: float = 0.0, center=None) -> BinaryImage:
    return regular_polygon(size, 3, radius, rotation, center)


def octagon(size, radius: float, rotation: float = 0.0, center=None) -> BinaryImage:
    return regular_polygon(size, 8, radius, rotation, center)
