import pytest

from autmg import genfun, recurrence

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def cold_caches(monkeypatch):
    """Time from scratch: fresh recurrence memos and generating-function caches."""
    monkeypatch.setattr(recurrence, "_I_MEMO", {})
    monkeypatch.setattr(recurrence, "_J_MEMO", {})
    genfun._pn.cache_clear()
    genfun.zn_ratfun.cache_clear()
    yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
