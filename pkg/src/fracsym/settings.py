"""Numerical thresholds used by the analysis modules, collected in one place.

The defect and classifier thresholds are choices made for this library; the
dynamics literature states the corresponding properties only qualitatively.
"""

from dataclasses import dataclass

__all__ = ["SymmetryThresholds", "ClassifierSettings", "ScanDefaults", "SYMMETRY", "CLASSIFIER", "SCAN"]


@dataclass(frozen=True)
class SymmetryThresholds:
    # pointwise |f(g z) - g f(z)|
    equivariance_pass: float = 1e-10
    equivariance_fail: float = 1e-3
    # mean nearest-neighbour distance from g(cloud) to cloud
    cloud_pass: float = 0.02
    # FO cloud defect must exceed this multiple of the IO one
    cloud_break_ratio: float = 10.0
    # termwise defect of the fractional solution formula
    fo_break: float = 1e-3
    fo_keep: float = 1e-12
    membership_tol: float = 0.01


@dataclass(frozen=True)
class ClassifierSettings:
    recurrence_eps: float = 1e-6
    max_period: int = 64
    max_peaks: int = 12
    peak_floor_db: float = 20.0
    # bins on either side of a peak counted as belonging to it (Hann main lobe)
    peak_halfwidth: int = 3
    # fraction of spectral energy carried by the retained peaks
    concentration: float = 0.9
    min_length: int = 512


@dataclass(frozen=True)
class ScanDefaults:
    io_discard: int = 2000
    io_keep: int = 200
    fo_discard: int = 500
    fo_keep: int = 200
    # slices closer than this (symmetric mean NN distance) are the same attractor
    cluster_tol: float = 0.02
    y0_interval: tuple = (-1.0, 1.0)


SYMMETRY = SymmetryThresholds()
CLASSIFIER = ClassifierSettings()
SCAN = ScanDefaults()
