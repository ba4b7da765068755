import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""
    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" ({detail})" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
