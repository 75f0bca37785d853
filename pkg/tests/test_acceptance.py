"""The nine acceptance criteria at full bounds, one test each.

Every check prints a PASS/FAIL line; the lines are also repeated in the
terminal summary (see conftest.py).
"""

import pytest

from b3geodesics.acceptance import FAST, FULL, run_check

from .conftest import ACCEPTANCE_LINES

BUDGET = {1: 60, 2: 1, 3: 60, 4: 1, 5: 60, 6: 300, 7: 60, 8: 120, 9: 120}


@pytest.mark.parametrize("number", sorted(BUDGET))
def test_criterion(number):
    result = run_check(number, FULL)
    line = result.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert result.passed, line
    assert result.seconds <= BUDGET[number], f"criterion {number} took {result.seconds:.1f}s"


def test_length_law_quick_profile():
    result = run_check(6, FAST)
    print(result.line())
    assert result.passed and result.seconds <= 30
