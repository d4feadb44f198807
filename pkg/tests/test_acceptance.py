"""The nine acceptance criteria, each at its stated tolerance.

Every test records a one-line PASS/FAIL verdict that is printed in the
terminal summary.  Criterion 6 is known to fail as stated (the first point
is not on the computed cyclic attractor); it is marked as an expected
failure so that the verdict is shown without hiding it.
"""

import os
import time

import numpy as np
import pytest
from scipy.special import gammaln

from conftest import record_criterion
from fracsym import GroupElement, iterate_fo, iterate_fo_real, iterate_io, weights
from fracsym.bifurcation import FO_INITIAL_CONDITIONS, ScanConfig, cluster_slices, distinctness, poincare_section, run_scan, slice_spread
from fracsym.settings import SCAN, SYMMETRY
from fracsym.spectral import Label, classify, classify_series, psd
from fracsym.symmetry import equivariance_suite, fo_solution_defect, orbit_symmetry_defect

WORKERS = os.cpu_count() or 1


def test_criterion_1_equivariance(d3, c4):
    t = time.perf_counter()
    d3_reports = equivariance_suite(d3, samples=1000, radius=1.5, seed=0)
    c4_reports = equivariance_suite(c4, samples=1000, radius=1.5, seed=0)
    elapsed = time.perf_counter() - t
    d3_ok = len(d3_reports) == 6 and all(r.defect < 1e-10 for r in d3_reports)
    rot = [r.defect for r in c4_reports if not r.element.reflect]
    ref = [r.defect for r in c4_reports if r.element.reflect]
    c4_ok = len(rot) == len(ref) == 4 and max(rot) < 1e-10 and min(ref) > 1e-3
    ok = d3_ok and c4_ok and elapsed < 1
    record_criterion(1, ok, f"D3 max {max(r.defect for r in d3_reports):.1e}; C4 rotations max {max(rot):.1e}, "
                     f"reflections min {min(ref):.3f}; {elapsed:.3f} s")
    assert ok


def test_criterion_2_printed_expansions(d3, c4, d6):
    from test_maps import disk, printed_c4, printed_d3, printed_d6

    t = time.perf_counter()
    z = disk(10_000, 1.5, 2024)
    worst = 0.0
    for spec, printed in ((d3, printed_d3), (c4, printed_c4), (d6, printed_d6)):
        f = spec(z)
        p1, p2 = printed(z.real, z.imag)
        worst = max(worst, np.max(np.abs(f.real - p1)), np.max(np.abs(f.imag - p2)))
    elapsed = time.perf_counter() - t
    ok = worst < 1e-10 and elapsed < 1 and d6.n_power == 6
    record_criterion(2, ok, f"max deviation {worst:.1e} over 3 x 10^4 points; {elapsed:.3f} s")
    assert ok


def test_criterion_3_caputo_weights():
    worst = 0.0
    monotone = True
    for q in (0.03, 0.057, 0.5, 0.97):
        j = np.arange(171)
        direct = np.exp(gammaln(j + q) - gammaln(q) - gammaln(j + 1))
        worst = max(worst, np.max(np.abs(weights(q, 171).w - direct) / direct))
        w = weights(q, 100_001).w
        monotone &= bool(np.all(np.isfinite(w)) and np.all(w > 0) and np.all(np.diff(w) < 0))
    ok = worst < 1e-12 and monotone
    record_criterion(3, ok, f"max relative error vs log-Gamma {worst:.1e}; finite and decreasing to 1e5: {monotone}")
    assert ok


def test_criterion_4_real_axis(d3):
    orbit = iterate_fo(d3, 0.37 + 0j, 0.03, 10_000)
    u = iterate_fo_real(lambda v: (d3.a + d3.b * (v * v)) * v + d3.d * (v * v), 0.37, 0.03, 10_000)
    exact_zero = bool(np.all(orbit.y == 0.0))
    dev = float(np.max(np.abs(orbit.x - u)))
    ok = not orbit.diverged and exact_zero and dev < 1e-12
    record_criterion(4, ok, f"y identically 0: {exact_zero}; max |x - scalar| {dev:.1e}")
    assert ok


def test_criterion_5_symmetry_breaking(d3, d3_io_orbit, d3_fo_orbit):
    z0 = 0.05 + 0.1j
    termwise = {}
    for q in (0.03, 0.057):
        for g in (GroupElement(3, 1), GroupElement(3, 0, True)):
            termwise[q, g.label] = float(fo_solution_defect(d3, z0, q, g, 50).max())
    r1 = GroupElement(3, 1)
    io = orbit_symmetry_defect(d3_io_orbit, r1).defect
    fo = orbit_symmetry_defect(d3_fo_orbit, r1).defect
    ok = (
        min(termwise.values()) > SYMMETRY.fo_break
        and io < SYMMETRY.cloud_pass
        and fo > SYMMETRY.cloud_break_ratio * io
    )
    record_criterion(5, ok, f"termwise min {min(termwise.values()):.3f} by step 50; "
                     f"cloud R1 IO {io:.4f} vs FO {fo:.3f} (ratio {fo / io:.0f})")
    assert ok


@pytest.mark.xfail(strict=True, reason="R1(A) for the stated A lies about 0.04 from the computed cyclic attractor")
def test_criterion_6_point_experiments(c4_io_orbit, d3_io_orbit):
    pts_c4 = c4_io_orbit.post_transient()
    pts_d3 = d3_io_orbit.post_transient()
    a = 0.38431 - 0.1119j
    r1a = GroupElement(4, 1)(a)
    s0a = GroupElement(4, 0, True)(a)
    d_r1a = float(np.min(np.abs(pts_c4 - r1a)))
    d_s0a = float(np.min(np.abs(pts_c4 - s0a)))
    b = GroupElement(3, 1)(0.8703 + 0j)
    d_b = float(np.min(np.abs(pts_d3 - b)))
    tol = SYMMETRY.membership_tol
    ok = d_r1a <= tol and d_s0a > tol and d_b <= tol and abs(b - (-0.4351 + 0.7537j)) < 1e-4
    record_criterion(6, ok, f"C4: dist R1(A) {d_r1a:.4f} (need <= {tol}), dist S0(A) {d_s0a:.4f} (need > {tol}); "
                     f"D3: dist R1(0.8703) {d_b:.4f}")
    assert ok


def test_criterion_7_bifurcative_sets(d3):
    t = time.perf_counter()
    fo_cfg = ScanConfig(d3, "q", 0.01, 0.99, 200, initial_conditions=FO_INITIAL_CONDITIONS, steps=1500, discard=500)
    fo_sets = run_scan(fo_cfg, workers=WORKERS)
    slices = [x for _, x in poincare_section(fo_sets, 0.057)]
    mat = distinctness(fo_sets, 0.057)
    spread = max(slice_spread(s) for s in slices)
    off = mat[np.triu_indices(len(slices), 1)]
    distinct = all(len(s) for s in slices) and bool(off.min() > spread)

    io_cfg = ScanConfig(d3.replace(a=-1.755), "x0", -1.5, 1.5, 200, randomize_y0=True, seed=0)
    io_set = run_scan(io_cfg, workers=WORKERS)[0]
    io_slices = [io_set.samples[float(v)] for v in io_set.axis if float(v) in io_set.samples]
    groups = len(set(cluster_slices(io_slices, SCAN.cluster_tol)))
    elapsed = time.perf_counter() - t
    ok = distinct and groups == 2 and elapsed < 300
    record_criterion(7, ok, f"FO q=0.057: min pairwise {off.min():.3f} > spread {spread:.4f}; "
                     f"IO x0 scan: {groups} clusters from {len(io_slices)} finite cells; {elapsed:.0f} s")
    assert ok


def test_criterion_8_spectral(d3):
    rng = np.random.default_rng(8)
    n = np.arange(4096)
    x = rng.normal(size=4096) + np.cos(0.7 * n)
    spec = psd(x)
    m = len(x)
    energy = np.sum(((x - x.mean()) * np.hanning(m)) ** 2)
    parseval = abs(spec.power.sum() - energy) / energy

    tone = classify_series(np.cos(2 * np.pi * n / 16))
    golden = (3 - np.sqrt(5)) / 2
    two = classify_series(np.cos(2 * np.pi * golden * n) + 0.6 * np.cos(2 * np.pi * 0.31 * n + 1))
    orbit = iterate_io(d3.replace(a=-1.755), 0.05 + 0.1j, 2000 + 8192, discard=2000)
    q1 = classify(orbit)
    ok = (
        parseval < 1e-8
        and tone.label is Label.PERIODIC_LIKE and tone.period == 16
        and two.label is Label.QUASIPERIODIC_LIKE
        and q1.label is Label.QUASIPERIODIC_LIKE and len(q1.dominant_freqs) >= 2
    )
    freqs = ", ".join(f"{f:.3f}" for f in q1.dominant_freqs[:3])
    record_criterion(8, ok, f"Parseval {parseval:.1e}; tone {tone.label.value} P{tone.period}; two-tone {two.label.value}; "
                     f"a=-1.755 {q1.label.value}, peaks {freqs}")
    assert ok


def _fo_time(spec, steps):
    best = np.inf
    for _ in range(2):
        t = time.perf_counter()
        iterate_fo(spec, 0.05 + 0.1j, 0.03, steps)
        best = min(best, time.perf_counter() - t)
    return best


def test_criterion_9_solver_contracts(d3):
    long = iterate_fo(d3, 0.05 + 0.1j, 0.057, 4000).points
    short = iterate_fo(d3, 0.05 + 0.1j, 0.057, 2000).points
    prefix = long[:2001].tobytes() == short.tobytes()
    near_one = float(np.max(np.abs(weights(1 - 1e-12, 100_000).w - 1)))
    ratio = _fo_time(d3, 80_000) / _fo_time(d3, 40_000)
    ok = prefix and near_one < 1e-9 and 3 <= ratio <= 5
    record_criterion(9, ok, f"prefix bit-exact: {prefix}; q=1-1e-12 max |w-1| {near_one:.1e}; "
                     f"time ratio 80k/40k {ratio:.2f}")
    assert ok
