import pytest

# filled by tests/test_acceptance.py; one entry per acceptance criterion
ACCEPTANCE = {}


@pytest.fixture
def criterion():
    def record(number: int, title: str, ok: bool, detail: str = ""):
        ACCEPTANCE[number] = (title, ok, detail)
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}"
        print(line + (f" [{detail}]" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}"
        terminalreporter.write_line(line + (f" [{detail}]" if detail else ""))
