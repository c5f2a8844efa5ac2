import pytest

from qrsubsets.finite_field import build_field

# (p, s) pairs covering all four (p mod 4, s parity) branches
SWEEP = [(5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (3, 2), (5, 2), (3, 3), (7, 2)]
SMALL = [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (5, 2), (3, 3), (7, 2)]


def field_id(ps):
    p, s = ps
    return f"F{p ** s}"


@pytest.fixture(scope="session")
def F5():
    return build_field(5)


@pytest.fixture(scope="session")
def F7():
    return build_field(7)


@pytest.fixture(scope="session")
def F9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def F3():
    return build_field(3)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
