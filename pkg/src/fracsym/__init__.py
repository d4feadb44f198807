"""Integer- and Caputo fractional-order maps of the plane with D_m / C_m symmetry."""

__version__ = "0.1.0"

from .bifurcation import (
    FO_INITIAL_CONDITIONS,
    IO_INITIAL_CONDITIONS,
    BifurcativeSet,
    ScanAxis,
    ScanConfig,
    cluster_slices,
    distinctness,
    poincare_section,
    run_scan,
    slice_distance,
    slice_spread,
)
from .caputo import CaputoWeights, iterate_fo, iterate_fo_real, weights
from .group import GroupElement, elements, from_polar, parse_element, rotations, to_polar
from .maps import (
    MapKind,
    MapSpec,
    cartesian_terms,
    cyclic_c4,
    dihedral_d3,
    dihedral_re_d6,
    evaluate,
    evaluate_cartesian,
)
from .orbit import Orbit, iterate_io
from .spectral import AttractorLabel, Label, Spectrum, classify, classify_series, psd
from .symmetry import (
    check_equivariance,
    equivariance_suite,
    expected_equivariant,
    fo_solution_defect,
    orbit_covariance_defect,
    orbit_symmetry_defect,
    point_membership_test,
)
