import numpy as np
import pytest

from fracsym import cyclic_c4, dihedral_d3, dihedral_re_d6, iterate_fo, iterate_io


@pytest.fixture(scope="session")
def d3():
    return dihedral_d3()


@pytest.fixture(scope="session")
def c4():
    return cyclic_c4()


@pytest.fixture(scope="session")
def d6():
    return dihedral_re_d6()


@pytest.fixture(scope="session")
def d3_io_orbit(d3):
    return iterate_io(d3, 0.05 + 0.1j, 100_000, discard=1000)


@pytest.fixture(scope="session")
def d3_fo_orbit(d3):
    return iterate_fo(d3, 0.05 + 0.1j, 0.03, 100_000, discard=1000)


@pytest.fixture(scope="session")
def c4_io_orbit(c4):
    return iterate_io(c4, 0.05 + 0.1j, 100_000, discard=1000)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = {}


def record_criterion(number: int, passed: bool, detail: str):
    ACCEPTANCE_LINES[number] = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
    print(ACCEPTANCE_LINES[number])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
