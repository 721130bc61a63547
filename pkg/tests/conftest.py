import numpy as np
import pytest
from hypothesis import strategies as st

from vocabias.skeleton import Skeleton


@st.composite
def skeletons(draw, max_side=5, min_edges=0):
    n = draw(st.integers(1, max_side))
    m = draw(st.integers(1, max_side))
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, m + 1)]
    edges = draw(st.sets(st.sampled_from(cells), min_size=min(min_edges, len(cells))))
    return Skeleton(n, m, edges)


phis = st.floats(0, 3, allow_nan=False)
lambdas = st.floats(0, 1, allow_nan=False)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def path3():
    """{(1,1),(1,2),(2,2)} on 2x2: a path s2 - r2 - s1 - r1."""
    return Skeleton(2, 2, [(1, 1), (1, 2), (2, 2)])
