import pytest

from koblitz.curve import CurveSpec

# the four curves used throughout the worked examples
NAMED = [CurveSpec(0, 2), CurveSpec(6, -2), CurveSpec(-1, 0), CurveSpec(0, 1)]


@pytest.fixture
def named_curves():
    return NAMED


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        ok, detail = results[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
