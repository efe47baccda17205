import pytest
from hypothesis import HealthCheck, settings
from polys import Poly, parse_poly

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def x2_plus_1() -> Poly:
    return parse_poly("x^2+1")


@pytest.fixture
def cubic_123() -> Poly:
    return parse_poly("x^3-6*x^2+11*x-6")


@pytest.fixture
def mixed_cubic() -> Poly:
    """(x^2 + 1)(x - 1)"""
    return parse_poly("x^3-x^2+x-1")
