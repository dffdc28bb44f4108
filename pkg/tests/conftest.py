import subprocess
import sys

import pytest

ACCEPTANCE_LINES = []


def run_cli(*args, check=False):
    """Run ``python -m nicholson`` in a fresh interpreter."""
    proc = subprocess.run(
        [sys.executable, "-m", "nicholson", *map(str, args)],
        capture_output=True,
        text=True,
        timeout=300,
    )
    if check and proc.returncode != 0:
        raise AssertionError(f"exit {proc.returncode}: {proc.stderr}")
    return proc


@pytest.fixture
def cli():
    return run_cli


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    # order by criterion number, not by PASS/FAIL prefix
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
