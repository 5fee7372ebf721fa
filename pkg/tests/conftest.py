import numpy as np
import pytest

from igarima.competitors import FAMILIES

THETAS = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
# x grid in units of the mean-ish scale 1/theta
U_GRID = (0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0)

# criterion number -> (description, passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}
NOTES: list[str] = []


@pytest.fixture(params=list(FAMILIES))
def family_cls(request):
    return FAMILIES[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE and not NOTES:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        desc, ok, detail = ACCEPTANCE[num]
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {desc}" + (f" -- {detail}" if detail else ""))
    for note in NOTES:
        tr.write_line(f"note: {note}")
