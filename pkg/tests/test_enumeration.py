import pytest
from hypothesis import given, strategies as st

from wheelcheck.enumeration import canonical_code, canonical_form, enumerate_near_triangulations
from wheelcheck.errors import BoundsExceeded
from wheelcheck.graph import is_near_triangulation

from helpers import brown_count, catalan, corpus


def test_triangle_only():
    gs = list(enumerate_near_triangulations(3, 0))
    assert len(gs) == 1 and gs[0].num_edges == 3


def test_square():
    assert len(list(enumerate_near_triangulations(4, 0, symmetric=False))) == 2
    assert len(list(enumerate_near_triangulations(4, 0))) == 1


@pytest.mark.parametrize("k", range(3, 9))
def test_polygon_triangulations_are_catalan(k):
    assert len(list(enumerate_near_triangulations(k, 0, symmetric=False))) == catalan(k - 2)


@pytest.mark.parametrize("k,m", [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1), (5, 2), (6, 1)])
def test_labelled_counts_match_brown(k, m):
    got = len(list(enumerate_near_triangulations(k, m, symmetric=False)))
    assert got == sum(brown_count(k, i) for i in range(m + 1))


def test_budget():
    with pytest.raises(BoundsExceeded):
        list(enumerate_near_triangulations(6, 2, budget=10))


def test_output_is_sorted_and_unique():
    gs = list(enumerate_near_triangulations(6, 1))
    codes = [canonical_code(g) for g in gs]
    assert codes == sorted(codes)
    assert len(set(codes)) == len(codes)


@given(st.sampled_from(corpus(6, 2)))
def test_enumerated_are_near_triangulations(g):
    assert is_near_triangulation(g)
    assert canonical_code(canonical_form(g)) == canonical_code(g)


@given(st.sampled_from(corpus(6, 2)), st.integers(0, 10), st.booleans())
def test_code_ignores_boundary_symmetry(g, shift, flip):
    k = len(g.outer)
    outer = g.outer[shift % k:] + g.outer[:shift % k]
    rot = g.rotation
    if flip:
        outer = tuple(reversed(outer))
        rot = tuple(tuple(reversed(r)) for r in rot)
    from wheelcheck.graph import build_plane_graph

    h = build_plane_graph(g.n, None, rot, outer)
    assert canonical_code(h) == canonical_code(g)
