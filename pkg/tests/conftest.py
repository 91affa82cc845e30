import pytest

from stegotax.taxonomy import load_seed_taxonomy


@pytest.fixture(scope="session")
def taxonomy():
    return load_seed_taxonomy()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    results = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" in nodeid and getattr(report, "when", "call") == "call":
                results.append((nodeid.split("::")[-1], outcome == "passed"))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed in results:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}")
