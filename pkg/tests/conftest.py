import math
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

PI2 = math.pi**2
ORDERS = (1, 2, 8, 24, 120)


def rel_close(a, b, rel):
    """Sorted sequences agree to ``rel`` relative to the largest entry."""
    a, b = sorted(a), sorted(b)
    scale = max(max(map(abs, a)), max(map(abs, b)))
    return all(abs(x - y) <= rel * scale for x, y in zip(a, b))


@st.composite
def valid_mu(draw, lo=-5.0, hi=5.0, min_pair=0.05):
    """Christoffel triples with every pairwise sum at least ``min_pair``."""
    m1 = draw(st.floats(max(lo, min_pair - hi), hi))
    m2 = draw(st.floats(max(lo, min_pair - m1), hi))
    m3 = draw(st.floats(max(lo, min_pair - min(m1, m2)), hi))
    return (m1, m2, m3)


@st.composite
def valid_eigenvalues(draw, lo=0.1, hi=10.0):
    pos = st.floats(lo, hi, allow_nan=False, allow_infinity=False)
    return (draw(pos), draw(pos), draw(pos))


def random_mu(rng: random.Random, lo=-5.0, hi=5.0, min_pair=0.05):
    while True:
        mu = [rng.uniform(lo, hi) for _ in range(3)]
        if min(mu[0] + mu[1], mu[0] + mu[2], mu[1] + mu[2]) >= min_pair:
            return tuple(mu)


@pytest.fixture
def rng():
    return random.Random(20240917)


# acceptance results, printed as one PASS/FAIL line each at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
