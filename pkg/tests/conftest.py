import pytest

from chordslide import make_root


@pytest.fixture
def zeta7():
    return make_root(7)


@pytest.fixture
def xi():
    return make_root(7, 1) + make_root(7, 2) + make_root(7, 4)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
