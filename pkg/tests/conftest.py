import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def corpus6():
    """All connected graphs up to isomorphism, n <= 6."""
    from autbounds.corpus import connected_graphs
    return {n: connected_graphs(n) for n in range(1, 7)}


@pytest.fixture(scope="session")
def corpus7():
    from autbounds.corpus import connected_graphs
    return {n: connected_graphs(n) for n in range(1, 8)}
