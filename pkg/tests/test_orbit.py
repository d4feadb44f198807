import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracsym import MapKind, MapSpec, Orbit, iterate_io


@pytest.fixture
def contraction():
    return MapSpec(MapKind.DIHEDRAL, 2, 0.5, 0.0, 0.0)


def test_linear_contraction(contraction):
    orbit = iterate_io(contraction, 1 + 0j, 3)
    np.testing.assert_array_equal(orbit.points, [1, 0.5, 0.25, 0.125])
    assert not orbit.diverged and orbit.q is None


def test_origin_fixed(d3):
    orbit = iterate_io(d3, 0j, 100)
    assert len(orbit) == 101
    assert np.all(orbit.points == 0)
    assert orbit.diverged_at is None


def test_first_point_is_initial_condition_exactly(d3):
    z0 = 0.1234567890123 - 0.98765432101j
    assert iterate_io(d3, z0, 5).points[0] == z0


def test_bounded_chaotic_orbit(d3_io_orbit):
    assert not d3_io_orbit.diverged
    assert len(d3_io_orbit) == 100_001
    assert np.all(np.isfinite(d3_io_orbit.points))
    assert np.max(np.abs(d3_io_orbit.points)) < 3


def test_determinism(d3):
    a = iterate_io(d3, 0.05 + 0.1j, 5000).points
    b = iterate_io(d3, 0.05 + 0.1j, 5000).points
    assert a.tobytes() == b.tobytes()


def test_divergence_is_data(d3):
    orbit = iterate_io(d3, 3 + 0j, 100)
    assert orbit.diverged
    k = orbit.diverged_at
    assert len(orbit) == k + 1
    assert abs(orbit.points[k]) > 1e6
    assert np.all(np.isfinite(orbit.points[:k]))
    assert len(orbit.post_transient(0)) == k


@settings(max_examples=40, deadline=None)
@given(x0=st.floats(1.6, 4.0), r1=st.floats(1.0, 1e3), factor=st.floats(1.0, 1e6))
def test_escape_monotonicity(d3, x0, r1, factor):
    first = iterate_io(d3, complex(x0, 0.1), 200, escape_radius=r1)
    second = iterate_io(d3, complex(x0, 0.1), 200, escape_radius=r1 * factor)
    if first.diverged:
        assert second.diverged_at is None or second.diverged_at >= first.diverged_at
        assert np.array_equal(first.points[:-1], second.points[: len(first) - 1])


@pytest.mark.parametrize("steps, radius", [(0, 1.0), (10, 0.0), (10, -1.0)])
def test_invalid_arguments(d3, steps, radius):
    with pytest.raises(ValueError):
        iterate_io(d3, 0.1j, steps, escape_radius=radius)


def test_csv_round_trip(tmp_path, d3):
    orbit = iterate_io(d3, 0.05 + 0.1j, 50)
    path = tmp_path / "orbit.csv"
    text = orbit.to_csv(path)
    lines = text.splitlines()
    assert lines[0] == "n,x,y"
    assert lines[1] == "0,0.05,0.1"
    assert len(lines) == 52
    points, q = Orbit.read_csv(path)
    assert q is None
    np.testing.assert_array_equal(points, orbit.points)
