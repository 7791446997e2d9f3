import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import FOUR_PARTY, THRESHOLD_2_OF_3, compile_scheme  # noqa: E402


@pytest.fixture(scope="session")
def threshold_scheme():
    return compile_scheme(3, THRESHOLD_2_OF_3, 1)


@pytest.fixture(scope="session")
def ramp_scheme():
    return compile_scheme(3, THRESHOLD_2_OF_3, 2)


@pytest.fixture(scope="session")
def four_party_scheme():
    return compile_scheme(4, FOUR_PARTY, 1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        label, status = RESULTS[key]
        terminalreporter.write_line(f"[{status}] criterion {key}: {label}")
