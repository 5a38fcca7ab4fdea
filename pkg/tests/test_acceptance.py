"""One test per acceptance criterion; each prints a single PASS/FAIL line.

The checks and their tolerances live in ``kepler.verification`` so that the
CLI ``verify`` command and this suite run the same code.
"""

import pytest

from conftest import ACCEPTANCE_LINES
from kepler.verification import SUITES, run_suite


@pytest.mark.parametrize("suite", list(SUITES))
def test_criterion(suite, capsys):
    report = run_suite(suite)
    line = report.line()
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print(f"\n{line}")
    if not report.passed:
        pytest.fail(line, pytrace=False)
