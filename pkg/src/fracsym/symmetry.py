"""Numerical symmetry checks for maps, orbits and fractional solutions.

Three levels are checked:

* pointwise equivariance ``f(g z) = g f(z)`` of the map itself;
* symmetry of a computed attractor, as the mean distance from the
  transformed point cloud to the original one;
* the fractional solution formula ``z(n) = z0 + F_n(z)``: transforming the
  history while keeping the anchor ``z0`` versus transforming the state,
  ``z0 + F_n(g z)`` against ``g z0 + g F_n(z)``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .caputo import iterate_fo, weights
from .group import GroupElement, elements
from .maps import MapKind, MapSpec, evaluate
from .orbit import Orbit
from .settings import SYMMETRY

__all__ = [
    "EquivarianceReport",
    "OrbitSymmetryReport",
    "check_equivariance",
    "equivariance_suite",
    "expected_equivariant",
    "orbit_symmetry_defect",
    "point_membership_test",
    "fo_solution_defect",
    "orbit_covariance_defect",
    "reports_to_csv",
]


@dataclass(frozen=True)
class EquivarianceReport:
    element: GroupElement
    max_defect: float
    sample_count: int

    @property
    def defect(self) -> float:
        return self.max_defect

    @property
    def samples(self) -> int:
        return self.sample_count

    def passed(self, threshold: float = SYMMETRY.equivariance_pass) -> bool:
        return self.max_defect < threshold


@dataclass(frozen=True)
class OrbitSymmetryReport:
    element: GroupElement
    defect: float
    points_used: int

    @property
    def samples(self) -> int:
        return self.points_used

    def passed(self, threshold: float = SYMMETRY.cloud_pass) -> bool:
        return self.defect < threshold


def expected_equivariant(spec: MapSpec, g: GroupElement) -> bool:
    """Whether theory predicts ``f(g z) = g f(z)`` for this map and element."""
    if g.m != spec.m:
        # elements of another group are only checked, never predicted
        raise ValueError(f"element of D_{g.m} checked against a map with m = {spec.m}")
    if spec.kind is MapKind.DIHEDRAL:
        return True
    if spec.kind is MapKind.CYCLIC:
        return not g.reflect
    # Re(z^n) is invariant under R_k iff k n = 0 (mod m), always under S_0
    return (g.k * spec.n_power) % spec.m == 0


def _disk_samples(samples: int, radius: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.random(samples))
    theta = 2.0 * np.pi * rng.random(samples)
    return r * np.exp(1j * theta)


def check_equivariance(
    spec: MapSpec, g: GroupElement, samples: int = 1000, radius: float = 1.5, seed: int = 0
) -> EquivarianceReport:
    """Max of ``|f(g z) - g f(z)|`` over uniform samples of the disk."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    z = _disk_samples(samples, radius, seed)
    defect = np.abs(evaluate(spec, g.apply(z)) - g.apply(evaluate(spec, z)))
    return EquivarianceReport(g, float(defect.max()), samples)


def equivariance_suite(spec: MapSpec, samples: int = 1000, radius: float = 1.5, seed: int = 0):
    return [check_equivariance(spec, g, samples, radius, seed) for g in elements(spec.m)]


def _post_transient(orbit: Orbit, discard: int | None) -> np.ndarray:
    discard = orbit.discard if discard is None else discard
    if orbit.diverged_at is not None and orbit.diverged_at <= discard:
        raise ValueError(f"orbit diverged at step {orbit.diverged_at}, before the transient ends")
    pts = orbit.post_transient(discard)
    if len(pts) < 100:
        raise ValueError(
            f"orbit too short: {len(orbit)} points with discard {discard} leaves {len(pts)} (< 100)"
        )
    return pts


def orbit_symmetry_defect(orbit: Orbit, g: GroupElement, discard: int | None = None) -> OrbitSymmetryReport:
    """Mean nearest-neighbour distance from ``g(cloud)`` to ``cloud``."""
    pts = _post_transient(orbit, discard)
    tree = cKDTree(np.column_stack([pts.real, pts.imag]))
    moved = g.apply(pts)
    dist, _ = tree.query(np.column_stack([moved.real, moved.imag]))
    return OrbitSymmetryReport(g, float(dist.mean()), len(pts))


def point_membership_test(orbit: Orbit, p: complex, discard: int | None = None, tol: float = SYMMETRY.membership_tol) -> bool:
    """True iff some post-transient orbit point lies within ``tol`` of ``p``."""
    pts = _post_transient(orbit, discard)
    return bool(np.min(np.abs(pts - complex(p))) <= tol)


def fo_solution_defect(
    spec: MapSpec,
    z0: complex,
    q: float,
    g: GroupElement,
    steps: int,
    orbit: Orbit | None = None,
) -> np.ndarray:
    """Termwise defect ``|z0 + F_n(g z) - g z(n)|`` for n = 1..steps.

    ``F_n(h) = sum_k w[n-k] f(h(k-1))`` is the fractional memory sum applied
    to a history ``h``.  Because ``f`` commutes with ``g``, ``F_n(g z) =
    g F_n(z)`` and the defect reduces to ``|z0 - g z0|`` up to rounding: the
    solution keeps its untransformed anchor.  It vanishes for ``S_0`` when
    ``z0`` is real.
    """
    if orbit is None:
        orbit = iterate_fo(spec, z0, q, steps)
    pts = orbit.points[: steps + 1]
    if len(pts) < steps + 1:
        raise ValueError("orbit diverged before the requested number of steps")
    w = weights(q, steps).w
    forced = evaluate(spec, g.apply(pts[:-1]))
    anchored = complex(z0) + np.convolve(w, forced)[:steps]
    return np.abs(anchored - g.apply(pts[1:]))


def orbit_covariance_defect(spec: MapSpec, z0: complex, q: float, g: GroupElement, steps: int) -> np.ndarray:
    """Termwise ``|orbit(g z0)[n] - g orbit(z0)[n]|``.

    For an equivariant map this is zero in exact arithmetic at every order q:
    the family of fractional orbits is mapped onto itself by ``g``.  Nonzero
    values are rounding amplified by the dynamics.
    """
    a = iterate_fo(spec, g.apply(complex(z0)), q, steps).points
    b = g.apply(iterate_fo(spec, z0, q, steps).points)
    n = min(len(a), len(b))
    return np.abs(a[:n] - b[:n])


def reports_to_csv(reports, path=None) -> str:
    """``element,kind,defect,samples`` rows."""
    buf = io.StringIO()
    buf.write("element,kind,defect,samples\n")
    for rep in reports:
        kind = "reflection" if rep.element.reflect else "rotation"
        buf.write(f"{rep.element.label},{kind},{rep.defect!r},{rep.samples}\n")
    text = buf.getvalue()
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text
