import pytest

from zsigraph import ModelConfig, build_gamma, cycle_through_pair_length, girth
from zsigraph.graphs import distance_matrix


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger one compile of each jitted kernel so timed tests measure
    compute, not compilation."""
    g = build_gamma(ModelConfig(3, 1))
    distance_matrix(g)
    girth(g)
    cycle_through_pair_length(g, 0, 1)
