"""Dihedral group D_m and its cyclic subgroup C_m acting on the complex plane.

Points are plain Python ``complex`` numbers (or numpy complex arrays for
vectorised use).  A group element is either a rotation ``R_k`` by ``2*pi*k/m``
or a reflection ``S_k = R_k S_0`` where ``S_0`` is complex conjugation.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "GroupElement",
    "elements",
    "rotations",
    "to_polar",
    "from_polar",
    "parse_element",
]


def _cos_sin(k: int, m: int) -> tuple[float, float]:
    # Quarter turns are returned exactly so that e.g. R_1 of D_4 is the
    # integer matrix [[0, -1], [1, 0]].
    if (4 * k) % m == 0:
        quarter = (4 * k // m) % 4
        return [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)][quarter]
    phi = 2.0 * math.pi * k / m
    return math.cos(phi), math.sin(phi)


@dataclass(frozen=True)
class GroupElement:
    """Element of D_m: rotation ``R_k`` or reflection ``S_k = R_k S_0``."""

    m: int
    k: int = 0
    reflect: bool = False

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"group order m must be >= 1, got {self.m}")
        if not 0 <= self.k < self.m:
            raise ValueError(f"rotation index k must lie in [0, {self.m - 1}], got {self.k}")

    @cached_property
    def _cs(self) -> tuple[float, float]:
        return _cos_sin(self.k, self.m)

    @property
    def angle(self) -> float:
        return 2.0 * math.pi * self.k / self.m

    @property
    def matrix(self) -> np.ndarray:
        c, s = self._cs
        if self.reflect:
            return np.array([[c, s], [s, -c]])
        return np.array([[c, -s], [s, c]])

    @property
    def label(self) -> str:
        return f"{'S' if self.reflect else 'R'}{self.k}"

    @property
    def is_identity(self) -> bool:
        return self.k == 0 and not self.reflect

    def __str__(self) -> str:
        return self.label

    def apply(self, z):
        """Apply the element to a complex scalar or a complex array."""
        c, s = self._cs
        if isinstance(z, np.ndarray):
            x, y = z.real, z.imag
        else:
            z = complex(z)
            x, y = z.real, z.imag
        if self.reflect:
            y = -y
        xr = c * x - s * y
        yr = s * x + c * y
        if isinstance(z, np.ndarray):
            return xr + 1j * yr
        return complex(xr, yr)

    __call__ = apply

    def compose(self, other: GroupElement) -> GroupElement:
        """Return ``self o other`` (apply ``other`` first)."""
        if self.m != other.m:
            raise ValueError("cannot compose elements of different groups")
        m = self.m
        # R_a R_b = R_{a+b};  R_a S_b = S_{a+b};  S_a R_b = S_{a-b};  S_a S_b = R_{a-b}
        if self.reflect:
            return GroupElement(m, (self.k - other.k) % m, not other.reflect)
        return GroupElement(m, (self.k + other.k) % m, other.reflect)

    def inverse(self) -> GroupElement:
        if self.reflect:
            return self
        return GroupElement(self.m, (-self.k) % self.m, False)


def elements(m: int) -> list[GroupElement]:
    """All 2m elements of D_m, rotations first in increasing k, then reflections."""
    if m < 1:
        raise ValueError(f"group order m must be >= 1, got {m}")
    return [GroupElement(m, k, False) for k in range(m)] + [
        GroupElement(m, k, True) for k in range(m)
    ]


def rotations(m: int) -> list[GroupElement]:
    """The cyclic subgroup C_m."""
    return elements(m)[:m]


def to_polar(z: complex) -> tuple[float, float]:
    """Modulus and argument in (-pi, pi]; the origin maps to (0, 0)."""
    z = complex(z)
    if z == 0:
        return 0.0, 0.0
    theta = math.atan2(z.imag, z.real)
    if theta == -math.pi:
        theta = math.pi
    return abs(z), theta


def from_polar(r: float, theta: float) -> complex:
    return cmath.rect(r, theta)


_LABEL = re.compile(r"^\s*([RrSs])\s*_?(\d+)\s*$")


def parse_element(label: str, m: int) -> GroupElement:
    """Parse ``'R1'``, ``'S0'``, ``'r_2'`` ... into an element of D_m."""
    match = _LABEL.match(label)
    if match is None:
        raise ValueError(f"cannot parse group element {label!r}; expected Rk or Sk")
    kind, k = match.groups()
    return GroupElement(m, int(k), kind.upper() == "S")
