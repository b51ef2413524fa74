from collections import Counter
from itertools import permutations

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def cycles_of(images) -> int:
    """Independent cycle counter on a 1-based image tuple."""
    seen = set()
    count = 0
    for start in range(1, len(images) + 1):
        if start in seen:
            continue
        count += 1
        k = start
        while k not in seen:
            seen.add(k)
            k = images[k - 1]
    return count


def cycle_histogram(n: int) -> Counter:
    """Number of permutations of n points with each cycle count, by listing all of them."""
    return Counter(cycles_of(p) for p in permutations(range(1, n + 1)))


# One PASS/FAIL line per acceptance criterion, shown after the run.

import pytest

ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
