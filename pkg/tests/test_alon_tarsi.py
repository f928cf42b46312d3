from itertools import product
from types import SimpleNamespace

import pytest
from hypothesis import given, strategies as st

from wheelcheck.alon_tarsi import (
    at_number,
    at_number_by_orientations,
    coefficient_by_orientations,
    orientation_expansion,
)
from wheelcheck.errors import EdgeBudgetExceeded
from wheelcheck.poly import graph_polynomial
from wheelcheck.wheels import build_ordinary_wheel

from helpers import corpus, exponent_vectors, random_plane_graphs

TRI = SimpleNamespace(n=3, edges=frozenset({(0, 1), (0, 2), (1, 2)}))


def cycle(n):
    return SimpleNamespace(n=n, edges=frozenset((i, (i + 1) % n) if i < n - 1 else (0, n - 1) for i in range(n)),
                           num_edges=n)


def brute_at(g):
    """Least k with some d, all entries < k, of nonzero signed orientation count."""
    m = len(g.edges)
    k = 1
    while True:
        for d in exponent_vectors(g.n, m, cap=k - 1):
            if coefficient_by_orientations(g, d=d):
                return k
        k += 1


def test_triangle_term():
    assert coefficient_by_orientations(TRI, d=(2, 1, 0)) == 1


def test_single_edge():
    e = SimpleNamespace(n=2, edges=frozenset({(0, 1)}))
    assert coefficient_by_orientations(e, d=(1, 0)) == 1
    assert coefficient_by_orientations(e, d=(0, 1)) == -1


def test_wrong_total_degree_is_zero():
    assert coefficient_by_orientations(TRI, d=(1, 1, 0)) == 0
    assert coefficient_by_orientations(TRI, d=(3, 1, 0)) == 0


def test_edge_limit():
    g = build_ordinary_wheel(14).graph
    with pytest.raises(EdgeBudgetExceeded):
        coefficient_by_orientations(g, d=[0] * g.n)


@pytest.mark.parametrize("g,expected", [(cycle(4), 2), (cycle(5), 3), (build_ordinary_wheel(3).graph, 4)])
def test_at_number_small(g, expected):
    assert brute_at(g) == expected
    assert at_number(g) == expected


def test_oracles_agree_on_random_graphs():
    for g in random_plane_graphs(40, 10, seed=7):
        poly = graph_polynomial(g).terms()
        assert orientation_expansion(g) == poly
        for d in exponent_vectors(g.n, len(g.edges)):
            assert coefficient_by_orientations(g, d=d) == poly.get(d, 0)


@given(st.sampled_from(corpus(5, 1)), st.randoms(use_true_random=False))
def test_transposition_flips_sign(g, rnd):
    a, b = rnd.sample(range(g.n), 2)
    order = list(range(g.n))
    order[a], order[b] = order[b], order[a]
    pos = {v: i for i, v in enumerate(order)}
    flips = sum(1 for x, y in g.edges if pos[x] > pos[y])
    poly = graph_polynomial(g).terms()
    d = rnd.choice(sorted(poly))
    assert coefficient_by_orientations(g, ordering=order, d=d) == (-1) ** flips * poly[d]


@given(st.sampled_from([g for g in corpus(6, 2) if g.num_edges <= 16]))
def test_at_number_routes_agree(g):
    assert at_number(g) == at_number_by_orientations(g, limit=16) <= 5
