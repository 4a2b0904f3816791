import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from cardsum.instance import ProblemInstance  # noqa: E402

EXAMPLE3_VALUES = (17, 2, 3, 23, 19, 1, 14, 20, 6, 10, 4, 25, 7, 49, 41, 5)
EXAMPLE3_TEXT = "16 6 137\n17 2 3 23 19 1 14 20 6 10 4 25 7 49 41 5"
# {x1, x2, x4, x14, x15, x16} in 0-based indices
EXAMPLE3_SOLUTION = (0, 1, 3, 13, 14, 15)


@pytest.fixture
def example3():
    return ProblemInstance(EXAMPLE3_VALUES, 137, 6)


_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    marker = report.keywords.get("criterion") if hasattr(report, "keywords") else None
    if not marker or "criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.rsplit("::", 1)[-1]
        _ACCEPTANCE[name] = ("PASS" if report.passed else "SKIP" if report.skipped else "FAIL", report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda n: int(n.split("_")[2])):
        outcome, _ = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{outcome:4}  {name}")
