"""Bifurcation diagrams built from per-initial-condition bifurcative sets.

A scan sweeps one axis (the linear coefficient ``a``, the fractional order
``q`` or the first initial-condition component ``x0``) over a uniform grid.
Every (initial condition, grid value) cell is an independent orbit; the
``x`` components left after the transient form that cell's sample.  The
samples of one initial condition across the grid are its bifurcative set.
A vertical slice through all sets at one grid value is a Poincare-like
section.
"""

from __future__ import annotations

import enum
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .caputo import iterate_fo
from .maps import MapSpec
from .orbit import DEFAULT_ESCAPE_RADIUS, iterate_io
from .settings import SCAN

__all__ = [
    "ScanAxis",
    "ScanConfig",
    "BifurcativeSet",
    "run_scan",
    "poincare_section",
    "distinctness",
    "slice_distance",
    "slice_spread",
    "cluster_slices",
    "scan_to_csv",
    "IO_INITIAL_CONDITIONS",
    "FO_INITIAL_CONDITIONS",
]

# five initial conditions used for the integer-order diagrams
IO_INITIAL_CONDITIONS = (0.05 + 0.1j, 0.01 + 0.01j, 0.001 + 0.9667j, -0.477 + 0.4965j, 0.5 + 0.0001j)
# and for the fractional-order ones
FO_INITIAL_CONDITIONS = (0.001 + 0.9667j, -0.477 - 0.4965j, 0.5 + 0.0001j, -0.1 - 0.1j, 0.00001 + 0.1j)


class ScanAxis(str, enum.Enum):
    PARAM_A = "a"
    ORDER_Q = "q"
    INIT_X0 = "x0"


@dataclass(frozen=True)
class ScanConfig:
    """Everything that determines a scan; equal configs give equal results.

    ``steps``/``discard`` default to 2200/2000 for integer-order scans and
    700/500 for fractional ones (the fractional kernel costs O(N^2)).
    """

    spec_template: MapSpec
    scan_axis: ScanAxis
    axis_min: float
    axis_max: float
    axis_steps: int
    initial_conditions: tuple = ((0.05 + 0.1j),)
    q_fixed: float | None = None
    steps: int | None = None
    discard: int | None = None
    randomize_y0: bool = False
    y0_interval: tuple = SCAN.y0_interval
    seed: int = 0
    escape_radius: float = DEFAULT_ESCAPE_RADIUS
    memory: int | None = None

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "scan_axis", ScanAxis(self.scan_axis))
        set_(self, "initial_conditions", tuple(complex(z) for z in self.initial_conditions))
        if self.steps is None:
            keep = SCAN.fo_keep if self.fractional else SCAN.io_keep
            disc = self.discard if self.discard is not None else (
                SCAN.fo_discard if self.fractional else SCAN.io_discard
            )
            set_(self, "steps", disc + keep)
        if self.discard is None:
            set_(self, "discard", min(SCAN.fo_discard if self.fractional else SCAN.io_discard, self.steps - 1))
        self.validate()

    @property
    def fractional(self) -> bool:
        return self.scan_axis is ScanAxis.ORDER_Q or self.q_fixed is not None

    def validate(self):
        if not self.axis_min < self.axis_max:
            raise ValueError(f"axis_min ({self.axis_min}) must be < axis_max ({self.axis_max})")
        if self.axis_steps < 2:
            raise ValueError(f"axis_steps must be >= 2, got {self.axis_steps}")
        if not 0 <= self.discard < self.steps:
            raise ValueError(f"need 0 <= discard < steps, got discard={self.discard}, steps={self.steps}")
        if not self.initial_conditions:
            raise ValueError("at least one initial condition is required")
        if self.randomize_y0 and self.scan_axis is not ScanAxis.INIT_X0:
            raise ValueError("randomize_y0 is only meaningful for an x0 scan")
        lo, hi = self.y0_interval
        if self.randomize_y0 and not lo < hi:
            raise ValueError(f"invalid y0 interval {self.y0_interval}")
        if self.scan_axis is ScanAxis.ORDER_Q:
            if self.q_fixed is not None:
                raise ValueError("q_fixed conflicts with a scan over q")
            if not (0.0 < self.axis_min and self.axis_max < 1.0):
                raise ValueError("a scan over q must stay inside (0, 1)")
        if self.q_fixed is not None and not 0.0 < self.q_fixed < 1.0:
            raise ValueError(f"q_fixed must lie in (0, 1), got {self.q_fixed}")
        if not self.escape_radius > 0:
            raise ValueError("escape_radius must be > 0")

    def axis_values(self) -> np.ndarray:
        return np.linspace(self.axis_min, self.axis_max, self.axis_steps)


@dataclass
class BifurcativeSet:
    """Post-transient ``x`` samples of one initial condition along the axis."""

    ic_index: int
    axis: np.ndarray
    samples: dict = field(default_factory=dict)
    diverged: set = field(default_factory=set)

    def nearest_value(self, axis_value: float) -> float:
        lo, hi = self.axis[0], self.axis[-1]
        if not lo <= axis_value <= hi:
            raise ValueError(f"axis value {axis_value} outside the scanned range [{lo}, {hi}]")
        return float(self.axis[np.argmin(np.abs(self.axis - axis_value))])

    def slice(self, axis_value: float) -> np.ndarray:
        """Samples at the grid value nearest ``axis_value`` (empty if diverged)."""
        return self.samples.get(self.nearest_value(axis_value), np.empty(0))


def _cell_seed(seed: int, ic_index: int, cell_index: int) -> np.random.Generator:
    # keyed by cell, so the draw does not depend on evaluation order
    return np.random.default_rng([seed, ic_index, cell_index])


def _run_cell(cfg: ScanConfig, ic_index: int, cell_index: int, value: float):
    z0 = cfg.initial_conditions[ic_index]
    spec = cfg.spec_template
    q = cfg.q_fixed
    if cfg.scan_axis is ScanAxis.PARAM_A:
        spec = spec.replace(a=value)
    elif cfg.scan_axis is ScanAxis.ORDER_Q:
        q = value
    else:
        y0 = z0.imag
        if cfg.randomize_y0:
            y0 = _cell_seed(cfg.seed, ic_index, cell_index).uniform(*cfg.y0_interval)
        z0 = complex(value, y0)
    if q is None:
        orbit = iterate_io(spec, z0, cfg.steps, cfg.escape_radius)
    else:
        orbit = iterate_fo(spec, z0, q, cfg.steps, cfg.escape_radius, memory=cfg.memory)
    if orbit.diverged:
        return None
    return orbit.x[cfg.discard + 1 :].copy()


def _run_cells(cfg: ScanConfig, cells):
    return [_run_cell(cfg, *cell) for cell in cells]


def run_scan(cfg: ScanConfig, workers: int = 1) -> list[BifurcativeSet]:
    """Compute one :class:`BifurcativeSet` per initial condition.

    With ``workers > 1`` cells are farmed out to a process pool; results are
    placed by cell index so the output does not depend on scheduling.
    """
    cfg.validate()
    axis = cfg.axis_values()
    cells = [(i, j, float(v)) for i in range(len(cfg.initial_conditions)) for j, v in enumerate(axis)]
    if workers > 1:
        chunks = [cells[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_cells, [cfg] * workers, chunks))
        results = {}
        for chunk, part in zip(chunks, parts):
            results.update(zip(chunk, part))
        values = [results[c] for c in cells]
    else:
        values = _run_cells(cfg, cells)

    sets = [BifurcativeSet(i, axis) for i in range(len(cfg.initial_conditions))]
    for (i, _, v), x in zip(cells, values):
        if x is None:
            sets[i].diverged.add(v)
        else:
            sets[i].samples[v] = x
    return sets


def poincare_section(sets: list[BifurcativeSet], axis_value: float) -> list[tuple[int, np.ndarray]]:
    return [(s.ic_index, s.slice(axis_value)) for s in sets]


def _one_sided(u: np.ndarray, v: np.ndarray) -> float:
    v = np.sort(v)
    idx = np.searchsorted(v, u)
    left = v[np.clip(idx - 1, 0, len(v) - 1)]
    right = v[np.clip(idx, 0, len(v) - 1)]
    return float(np.minimum(np.abs(u - left), np.abs(u - right)).mean())


def slice_distance(u, v) -> float:
    """Symmetric mean nearest-neighbour distance between two 1-D samples."""
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    if len(u) == 0 or len(v) == 0:
        return float("nan")
    return 0.5 * (_one_sided(u, v) + _one_sided(v, u))


def slice_spread(u) -> float:
    """Self-consistency of a slice: distance between its first and second half.

    This is the resolution of :func:`slice_distance` for samples of one
    attractor; two slices are told apart only when their distance exceeds it.
    """
    u = np.asarray(u, float)
    if len(u) < 4:
        return float("nan")
    h = len(u) // 2
    return slice_distance(u[:h], u[h:])


def distinctness(sets: list[BifurcativeSet], axis_value: float) -> np.ndarray:
    """Pairwise :func:`slice_distance` matrix of the section at ``axis_value``."""
    if len(sets) < 2:
        raise ValueError("distinctness needs at least two bifurcative sets")
    slices = [x for _, x in poincare_section(sets, axis_value)]
    n = len(slices)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            out[i, j] = out[j, i] = slice_distance(slices[i], slices[j])
    return out


def cluster_slices(slices, tol: float = SCAN.cluster_tol) -> np.ndarray:
    """Single-linkage groups of slices: linked when their distance is below ``tol``.

    Empty (diverged) slices get label -1.
    """
    slices = [np.asarray(s, float) for s in slices]
    live = [i for i, s in enumerate(slices) if len(s)]
    n = len(live)
    rows, cols = [], []
    for a in range(n):
        for b in range(a + 1, n):
            if slice_distance(slices[live[a]], slices[live[b]]) < tol:
                rows.append(a)
                cols.append(b)
    graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=False)
    out = np.full(len(slices), -1)
    out[live] = labels
    return out


def scan_to_csv(bs: BifurcativeSet, path=None) -> str:
    """``axis_value,ic_index,x`` rows, one per kept sample."""
    buf = io.StringIO()
    buf.write("axis_value,ic_index,x\n")
    for value in bs.axis:
        value = float(value)
        for x in bs.samples.get(value, ()):
            buf.write(f"{value!r},{bs.ic_index},{float(x)!r}\n")
    text = buf.getvalue()
    if path is not None:
        with open(os.fspath(path), "w", newline="") as fh:
            fh.write(text)
    return text
