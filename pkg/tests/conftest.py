import itertools
from collections import Counter

import pytest

from shilovdet.graded import GradedPoly


def subset_sum_poly(gens) -> GradedPoly:
    """Brute-force exterior Poincaré polynomial: count subsets by degree sum."""
    counts = Counter()
    gens = list(gens)
    for k in range(len(gens) + 1):
        for combo in itertools.combinations(range(len(gens)), k):
            counts[sum(gens[i] for i in combo)] += 1
    return GradedPoly(counts)


@pytest.fixture
def brute_exterior():
    return subset_sum_poly


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    lines = test_acceptance.report_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
