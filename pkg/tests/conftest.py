"""Collects one summary line per acceptance criterion for the terminal report."""
import pytest

ACCEPTANCE_LINES: dict[int, str] = {}
_OUTCOMES: dict[int, str] = {}


def record(criterion: int, detail: str) -> None:
    ACCEPTANCE_LINES[criterion] = detail
    print(f"criterion {criterion}: {detail}")


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    n = int(name.split("_")[2])
    if report.failed:
        _OUTCOMES[n] = "FAIL"
    elif report.when == "call":
        _OUTCOMES.setdefault(n, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        line = f"criterion {n}: {_OUTCOMES[n]}"
        if n in ACCEPTANCE_LINES:
            line += f"  ({ACCEPTANCE_LINES[n]})"
        terminalreporter.write_line(line)
