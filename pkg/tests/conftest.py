from __future__ import annotations

import pytest

from braidcleft.cleft import CleftExtension
from braidcleft.fixtures import c2cubed_datum, c6_datum, regular_extension
from braidcleft.hd import HDAlgebra


@pytest.fixture(scope="session")
def H2():
    """H_D for the C2^3 datum (n = 2, dim 16)."""
    return HDAlgebra(c2cubed_datum())


@pytest.fixture(scope="session")
def H3():
    """H_D for the C6 datum (n = 3, dim 18)."""
    return HDAlgebra(c6_datum())


@pytest.fixture(scope="session")
def ext2(H2):
    ca, d, _ = regular_extension(H2)
    return CleftExtension(ca, d)


@pytest.fixture(scope="session")
def ext3(H3):
    ca, d, _ = regular_extension(H3)
    return CleftExtension(ca, d)


_ACCEPTANCE_LINES = {}


@pytest.fixture
def criterion():
    """record(number, ok, detail) stores the one-line verdict for a criterion."""
    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE_LINES[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(_ACCEPTANCE_LINES[number])
