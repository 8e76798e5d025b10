import pytest

from brauerkit.exactalg import QQ, QQ_DELTA


@pytest.fixture
def qd():
    return QQ_DELTA


@pytest.fixture
def q2():
    return QQ(2)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
