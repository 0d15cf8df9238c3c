from pathlib import Path

import numpy as np
import pytest

from poac.pixel_io import load_pgm

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"
CAMERA = FIXTURES / "camera256.pgm"

_acceptance_lines = []


@pytest.fixture(scope="session")
def camera():
    return load_pgm(CAMERA)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def record_criterion():
    """Collect one PASS/FAIL line per acceptance criterion for the summary."""

    def record(number, title, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        _acceptance_lines.append(f"[{status}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
