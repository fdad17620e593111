import math
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from swingtwist import Spinor, Vector3  # noqa: E402

_coord = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)


@st.composite
def unit_spinors(draw):
    a, b, c, d = draw(st.tuples(_coord, _coord, _coord, _coord).filter(
        lambda t: sum(x * x for x in t) > 1e-2))
    n = math.sqrt(a * a + b * b + c * c + d * d)
    return Spinor(a / n, b / n, c / n, d / n)


@st.composite
def vectors(draw, min_norm=1e-3, scale=10.0):
    x, y, z = draw(st.tuples(_coord, _coord, _coord).filter(
        lambda t: math.sqrt(sum(c * c for c in t)) > min_norm))
    return Vector3(x * scale, y * scale, z * scale)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
