import pytest
from hypothesis import settings

from densegreedy.graph import complete_graph, from_edges, generate_gnp

# numpy-backed graphs make the first example slow; no per-example deadline
settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def path4():
    # 0-1-2-3
    return from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def gnp70():
    # straddles a 64-bit word boundary
    return generate_gnp(70, 0.5, 7)
