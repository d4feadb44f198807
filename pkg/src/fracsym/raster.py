"""Minimal scatter-plot rasteriser writing PNG files with the standard library."""

from __future__ import annotations

import struct
import zlib

import numpy as np

__all__ = ["PALETTE", "scatter_image", "write_png"]

# red, blue, green, black, magenta, then extras
PALETTE = [
    (220, 20, 20),
    (20, 40, 220),
    (20, 160, 40),
    (0, 0, 0),
    (200, 0, 200),
    (240, 140, 0),
    (0, 160, 170),
    (120, 80, 40),
]


def write_png(path, rgb: np.ndarray) -> None:
    """Write an ``(H, W, 3)`` uint8 array as an 8-bit RGB PNG."""
    rgb = np.ascontiguousarray(rgb, dtype=np.uint8)
    h, w, _ = rgb.shape
    raw = b"".join(b"\x00" + rgb[row].tobytes() for row in range(h))

    def chunk(tag: bytes, data: bytes) -> bytes:
        body = tag + data
        return struct.pack(">I", len(data)) + body + struct.pack(">I", zlib.crc32(body) & 0xFFFFFFFF)

    header = struct.pack(">IIBBBBB", w, h, 8, 2, 0, 0, 0)
    with open(path, "wb") as fh:
        fh.write(b"\x89PNG\r\n\x1a\n")
        fh.write(chunk(b"IHDR", header))
        fh.write(chunk(b"IDAT", zlib.compress(raw, 6)))
        fh.write(chunk(b"IEND", b""))


def scatter_image(series, size=(800, 800), bounds=None, margin: int = 10) -> np.ndarray:
    """Plot ``[(xs, ys, rgb), ...]`` as single pixels on a white canvas.

    ``bounds`` is ``(xmin, xmax, ymin, ymax)``; by default it covers all finite
    points.  Later series are drawn on top.
    """
    width, height = size
    img = np.full((height, width, 3), 255, dtype=np.uint8)
    cleaned = []
    for xs, ys, color in series:
        xs = np.asarray(xs, float)
        ys = np.asarray(ys, float)
        ok = np.isfinite(xs) & np.isfinite(ys)
        cleaned.append((xs[ok], ys[ok], color))
    if bounds is None:
        allx = np.concatenate([c[0] for c in cleaned]) if cleaned else np.empty(0)
        ally = np.concatenate([c[1] for c in cleaned]) if cleaned else np.empty(0)
        if len(allx) == 0:
            return img
        bounds = (allx.min(), allx.max(), ally.min(), ally.max())
    xmin, xmax, ymin, ymax = bounds
    xspan = (xmax - xmin) or 1.0
    yspan = (ymax - ymin) or 1.0
    for xs, ys, color in cleaned:
        col = np.round(margin + (xs - xmin) / xspan * (width - 1 - 2 * margin)).astype(int)
        row = np.round(height - 1 - margin - (ys - ymin) / yspan * (height - 1 - 2 * margin)).astype(int)
        ok = (col >= 0) & (col < width) & (row >= 0) & (row < height)
        img[row[ok], col[ok]] = color
    return img
