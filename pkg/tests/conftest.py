import math

import pytest

from twodisc.polygon import ConvexPolygon, validate

SQRT3 = math.sqrt(3)


@pytest.fixture
def unit_square():
    return validate([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def eq_triangle():
    return validate([(0, 0), (1, 0), (0.5, SQRT3 / 2)])


@pytest.fixture
def segment_polygon():
    return ConvexPolygon.segment((0, 0), (2, 0))


# one line per acceptance criterion, printed at the end of every run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    def record(label: str, ok: bool, detail: str) -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
