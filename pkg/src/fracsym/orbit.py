"""Orbits and integer-order iteration z(n) = f(z(n-1))."""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field

import numpy as np

from .maps import MapSpec, evaluate

__all__ = ["Orbit", "iterate_io", "DEFAULT_ESCAPE_RADIUS"]

DEFAULT_ESCAPE_RADIUS = 1e6


@dataclass
class Orbit:
    """A finite trajectory ``points[0..N]`` of a map.

    ``q`` is ``None`` for integer-order orbits and the fractional order
    otherwise.  When the orbit escaped, ``diverged_at`` is the index of the
    first point with ``|z| > escape_radius`` (that point is kept, iteration
    stops there).
    """

    points: np.ndarray
    spec: MapSpec
    q: float | None = None
    diverged_at: int | None = None
    discard: int = 0
    escape_radius: float = DEFAULT_ESCAPE_RADIUS
    memory: int | None = field(default=None, repr=False)

    @property
    def is_fractional(self) -> bool:
        return self.q is not None

    @property
    def diverged(self) -> bool:
        return self.diverged_at is not None

    @property
    def x(self) -> np.ndarray:
        return self.points.real

    @property
    def y(self) -> np.ndarray:
        return self.points.imag

    def __len__(self) -> int:
        return len(self.points)

    def post_transient(self, discard: int | None = None) -> np.ndarray:
        """Points after the transient, excluding an escaped final point."""
        start = self.discard if discard is None else discard
        stop = self.diverged_at if self.diverged_at is not None else len(self.points)
        return self.points[start:stop]

    def to_csv(self, path=None) -> str:
        """Write ``n,x,y`` rows (full float precision); returns the text."""
        buf = io.StringIO()
        if self.q is not None:
            buf.write(f"# q={self.q!r}\n")
        buf.write("n,x,y\n")
        for n, z in enumerate(self.points.tolist()):
            buf.write(f"{n},{z.real!r},{z.imag!r}\n")
        text = buf.getvalue()
        if path is not None:
            with open(os.fspath(path), "w", newline="") as fh:
                fh.write(text)
        return text

    @staticmethod
    def read_csv(path) -> tuple[np.ndarray, float | None]:
        """Load points (and q, if recorded) from :meth:`to_csv` output."""
        q = None
        with open(os.fspath(path)) as fh:
            first = fh.readline()
            if first.startswith("# q="):
                q = float(first[4:])
                fh.readline()
            data = np.loadtxt(fh, delimiter=",", ndmin=2)
        return data[:, 1] + 1j * data[:, 2], q


def _check_common(steps: int, escape_radius: float):
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    if not escape_radius > 0:
        raise ValueError(f"escape_radius must be > 0, got {escape_radius}")


def iterate_io(
    spec: MapSpec,
    z0: complex,
    steps: int,
    escape_radius: float = DEFAULT_ESCAPE_RADIUS,
    discard: int = 0,
) -> Orbit:
    """Iterate the map ``steps`` times from ``z0``."""
    _check_common(steps, escape_radius)
    z = complex(z0)
    points = np.empty(steps + 1, dtype=complex)
    points[0] = z
    diverged_at = None
    for n in range(1, steps + 1):
        z = evaluate(spec, z)
        points[n] = z
        if not abs(z) <= escape_radius:
            diverged_at = n
            points = points[: n + 1].copy()
            break
    return Orbit(points, spec, None, diverged_at, discard, escape_radius)
