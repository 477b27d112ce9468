import pytest

# filled by tests/test_acceptance.py: criterion number -> (title, passed)
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, ok: bool) -> None:
        ACCEPTANCE_RESULTS[number] = (title, ok)
    return record
