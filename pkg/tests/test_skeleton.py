import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import skeletons
from vocabias.errors import SkeletonError
from vocabias.skeleton import (
    Skeleton, SkeletonClass, classify, format_skeleton, new_skeleton, parse_skeleton, toggle_edge,
)


def test_degrees_matching():
    sk = new_skeleton(2, 2, {(1, 1), (2, 2)})
    assert list(sk.mu) == [1, 1] and list(sk.omega) == [1, 1] and sk.M == 2


def test_empty():
    sk = new_skeleton(3, 3, set())
    assert list(sk.mu) == [0, 0, 0] and list(sk.omega) == [0, 0, 0] and sk.M == 0


def test_star():
    sk = new_skeleton(1, 3, {(1, 1), (1, 2), (1, 3)})
    assert list(sk.mu) == [3] and list(sk.omega) == [1, 1, 1] and sk.M == 3


@pytest.mark.parametrize("n, m, edges", [
    (2, 2, [(3, 1)]),
    (2, 2, [(1, 0)]),
    (2, 2, [(1, 1), (1, 1)]),
    (0, 2, []),
])
def test_construction_errors(n, m, edges):
    with pytest.raises(SkeletonError):
        Skeleton(n, m, edges)


@pytest.mark.parametrize("edges, expected", [
    ([(1, 1), (2, 2)], SkeletonClass.VERTEX_CAPPED),
    ([(1, 1), (1, 2)], SkeletonClass.COUNTERPART_CAPPED),
    ([(1, 1), (2, 1)], SkeletonClass.GENERAL),
])
def test_classify(edges, expected):
    assert classify(Skeleton(2, 2, edges)) is expected


def test_class_containment():
    assert SkeletonClass.COUNTERPART_CAPPED.contains(SkeletonClass.VERTEX_CAPPED)
    assert not SkeletonClass.VERTEX_CAPPED.contains(SkeletonClass.COUNTERPART_CAPPED)


def test_toggle_examples():
    sk = toggle_edge(Skeleton(1, 1), 1, 1)
    assert sk.M == 1 and sk.mu[0] == 1 and sk.omega[0] == 1
    assert toggle_edge(sk, 1, 1) == Skeleton(1, 1)
    two = toggle_edge(Skeleton(2, 2, [(1, 1)]), 2, 2)
    assert two.edges == {(1, 1), (2, 2)} and two.M == 2


def test_toggle_out_of_range():
    with pytest.raises(SkeletonError):
        toggle_edge(Skeleton(2, 2), 3, 1)


def test_toggle_leaves_input_untouched():
    sk = Skeleton(2, 2, [(1, 1)])
    toggle_edge(sk, 1, 2)
    assert sk.edges == {(1, 1)} and list(sk.mu) == [1, 0]


def _recount(sk):
    mu = [sum(1 for i, _ in sk.edges if i == k) for k in range(1, sk.n + 1)]
    om = [sum(1 for _, j in sk.edges if j == k) for k in range(1, sk.m + 1)]
    return mu, om


@given(skeletons(), st.data())
def test_toggle_keeps_degree_caches(sk, data):
    i = data.draw(st.integers(1, sk.n))
    j = data.draw(st.integers(1, sk.m))
    out = toggle_edge(sk, i, j)
    mu, om = _recount(out)
    assert list(out.mu) == mu and list(out.omega) == om
    step = -1 if sk.has_edge(i, j) else 1
    assert out.mu[i - 1] == sk.mu[i - 1] + step
    assert out.omega[j - 1] == sk.omega[j - 1] + step
    assert sum(out.mu) == sum(out.omega) == out.M
    for k in range(1, sk.n + 1):
        assert out.form_neighbors(k) == {b for a, b in out.edges if a == k}
    back = toggle_edge(out, i, j)
    assert back == sk
    assert back.mu.tobytes() == sk.mu.tobytes() and back.omega.tobytes() == sk.omega.tobytes()


@given(skeletons())
def test_vertex_capped_is_matching(sk):
    if classify(sk) is SkeletonClass.VERTEX_CAPPED:
        for (a, b), (c, d) in itertools.combinations(sk.edges, 2):
            assert a != c and b != d


def test_text_roundtrip():
    text = "# a star\n1 3\n1 1\n1 2  # trailing\n\n1 3\n"
    sk = parse_skeleton(text)
    assert sk == Skeleton(1, 3, [(1, 1), (1, 2), (1, 3)])
    assert parse_skeleton(format_skeleton(sk)) == sk


@pytest.mark.parametrize("text", ["", "1\n", "2 2\n1 x\n", "2 2\n1 1\n1 1\n"])
def test_text_errors(text):
    with pytest.raises(SkeletonError):
        parse_skeleton(text)
