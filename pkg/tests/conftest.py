import pytest
from hypothesis import HealthCheck, settings

from superchar.rootdata import AlgebraDescriptor, ExtendedWeight, from_lambda

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def alg(text: str) -> AlgebraDescriptor:
    return AlgebraDescriptor.parse(text)


def wt(text: str) -> ExtendedWeight:
    return ExtendedWeight.parse(text)


def lam(algebra: AlgebraDescriptor, text: str) -> ExtendedWeight:
    """lambda+rho of the weight whose lambda coordinates are ``text``."""
    return from_lambda(algebra, ExtendedWeight.parse(text))


@pytest.fixture
def osp66():
    return alg("osp:6:6")
