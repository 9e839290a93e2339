import numpy as np
import pytest
from hypothesis import settings

from lpcurse import QuadratureRule, gen_random

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_rule(seed, max_d=3, max_n=32, qmc=True, min_n=0):
    """Seeded random rule: dimension and size drawn from ``seed`` too."""
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, max_d + 1))
    n = int(rng.integers(min_n, max_n + 1))
    points = gen_random(d, n, seed=10_000 + seed)
    if qmc:
        return QuadratureRule.qmc(points)
    return QuadratureRule(points, rng.random(n) * 2.0 / max(n, 1))


@pytest.fixture
def rule_factory():
    return random_rule
