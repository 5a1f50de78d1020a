import pytest
from hypothesis import HealthCheck, settings

from rhjacobi import WeightSpec

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# PASS/FAIL lines from tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture(scope="session")
def spec_exp():
    """Non-symmetric weight with h = exp(x/2)."""
    return WeightSpec(0.3, -0.4, "exp_poly", (0.0, 0.5))


@pytest.fixture(scope="session")
def spec_quad():
    """Non-symmetric weight with h = exp(0.1 + 0.3 x - 0.4 x^2)."""
    return WeightSpec(-0.2, 0.6, "exp_poly", (0.1, 0.3, -0.4))


@pytest.fixture(scope="session")
def spec_poly():
    """Weight with a positive polynomial factor h = 2 + x + 0.5 x^2."""
    return WeightSpec(0.5, -0.3, "positive_poly", (2.0, 1.0, 0.5))
