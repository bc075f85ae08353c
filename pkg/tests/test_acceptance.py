"""The ten exit criteria, each at its stated limit.

Every run appends one PASS/FAIL line to the terminal summary.
"""

import pytest

from heawood import acceptance


@pytest.mark.acceptance
@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number, acceptance_log):
    result = acceptance.run(number)
    acceptance_log.append(result.line())
    print(result.line())
    assert result.passed, result.detail
    assert result.within_limit, f"took {result.seconds:.1f}s, limit {result.limit}s"
