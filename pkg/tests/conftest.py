import os

import pytest
from hypothesis import HealthCheck, settings

from isokit.curve import WeierstrassCurve
from isokit.field import prime_field

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def F19():
    return prime_field(19)


@pytest.fixture
def E19(F19):
    """y^2 = x^3 + x + 2 over F_19: order 12, a rational 3-isogeny with kernel x - 8."""
    return WeierstrassCurve(F19, [1, 2])


@pytest.fixture
def E19_image(F19):
    return WeierstrassCurve(F19, [9, 3])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get("isokit_acceptance", None) if hasattr(config, "stash") else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
