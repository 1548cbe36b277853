import random

import pytest
from hypothesis import HealthCheck, settings

from sl2char.algebra import XYZ, Rat
from sl2char.words import Word

settings.register_profile(
    "exact", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True)
settings.load_profile("exact")

ACCEPTANCE = []


def random_word(rng, max_len, gens=("a", "b")):
    n = rng.randint(0, max_len)
    return Word([(rng.randrange(len(gens)), rng.choice((1, -1))) for _ in range(n)], gens)


def random_rat(rng, lo=-9, hi=9, den=5):
    return Rat(rng.randint(lo, hi), rng.randint(1, den))


def random_point(rng):
    return {v: random_rat(rng) for v in XYZ}


@pytest.fixture
def rng():
    return random.Random(20240518)


@pytest.fixture
def acceptance():
    """Record one line per criterion; printed in the terminal summary."""
    def record(number, title, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE.append(f"criterion {number} [{status}] {title}" + (f": {detail}" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
