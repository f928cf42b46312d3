import pytest
from hypothesis import given, strategies as st

from wheelcheck.errors import BadParameter
from wheelcheck.graph import PrincipalPath, is_near_triangulation, principal_paths
from wheelcheck.wheels import (
    Component,
    WheelSpec,
    build_broken_wheel,
    build_multiple_wheel,
    build_ordinary_wheel,
    build_split_hub_graph,
    find_generalized_wheel,
    witness_is_subgraph,
)

from helpers import brute_generalized_wheel, corpus


def all_specs(slack):
    """Specs whose boundary length is 2 + slack (sizes minus 2 sum to slack)."""
    if slack == 0:
        yield ()
        return
    for part in range(1, slack + 1):
        for kind in "BO":
            for rest in all_specs(slack - part):
                yield (Component(kind, part + 2),) + rest


def test_parse_and_print():
    s = WheelSpec.parse("B6+O5+B4")
    assert str(s) == "B6+O5+B4"
    assert s.kind == "multiple"
    assert s.boundary_len == 6 + 5 + 4 - 2 * 2
    with pytest.raises(BadParameter):
        WheelSpec.parse("X5")
    with pytest.raises(BadParameter):
        WheelSpec.parse("B2")


def test_ordinary_wheel_shapes():
    k4 = build_ordinary_wheel(3)
    assert k4.graph.n == 4 and k4.graph.num_edges == 6 and len(k4.graph.outer) == 3
    w = build_ordinary_wheel(5)
    assert w.graph.num_edges == 10
    assert w.graph.interior == [5]
    assert w.path == PrincipalPath(4, 0, 1)
    assert not build_ordinary_wheel(4).is_generalized
    with pytest.raises(BadParameter):
        build_ordinary_wheel(2)


def test_broken_wheel_shapes():
    assert build_broken_wheel(3).graph.num_edges == 3
    b5 = build_broken_wheel(5).graph
    assert b5.degree(0) == 4
    for k in range(3, 10):
        g = build_broken_wheel(k).graph
        assert g.n == k and g.num_edges == 2 * k - 3
        assert g.interior == []
        assert g.degree(1) == g.degree(k - 1) == 2


def test_multiple_wheel_flags():
    assert build_multiple_wheel("B6+O5").is_generalized
    two_broken = build_multiple_wheel("B4+B5")
    assert two_broken.is_broken_overall
    assert not build_multiple_wheel("B6+O4").is_generalized


def test_double_wheel_shares_v1_edge():
    w = build_multiple_wheel("B6+O5")
    # the junction vertex v6 is adjacent to v1 and the odd wheel's hub
    junction = w.segments[0][-1]
    assert w.graph.has_edge(0, junction)
    assert w.graph.has_edge(w.hubs[1], junction)


def test_split_hub_graph():
    g = build_split_hub_graph(6, 4).graph
    assert g.n == 8 and is_near_triangulation(g)
    with pytest.raises(BadParameter):
        build_split_hub_graph(6, 2)
    small = build_split_hub_graph(5, 3).graph
    assert is_near_triangulation(small)
    assert all(not small.outer_set <= set(small.neighbors(v)) for v in small.interior)


@pytest.mark.parametrize("slack", range(1, 8))
def test_constructions_are_near_triangulations(slack):
    for comps in all_specs(slack):
        w = build_multiple_wheel(WheelSpec(comps))
        assert is_near_triangulation(w.graph)
        assert len(w.graph.outer) == 2 + slack


def test_recognizer_complete_on_constructions():
    # boundary up to 12
    for slack in range(1, 11):
        for comps in all_specs(slack):
            spec = WheelSpec(comps)
            w = build_multiple_wheel(spec)
            found = find_generalized_wheel(w.graph, w.path)
            assert (found is not None) == spec.is_generalized, str(spec)
            if found is not None:
                assert witness_is_subgraph(w.graph, found)


def test_odd_wheel_witness_is_itself():
    w = build_ordinary_wheel(5)
    found = find_generalized_wheel(w.graph, w.path)
    assert str(found.spec) == "O5"
    assert sorted(found.mapping) == list(range(6))


def test_even_wheel_has_no_witness():
    w = build_ordinary_wheel(4)
    assert find_generalized_wheel(w.graph, w.path) is None


def test_two_odd_components():
    w = build_multiple_wheel("O5+O5")
    found = find_generalized_wheel(w.graph, w.path)
    assert str(found.spec) == "O5+O5"
    assert len(found.components) == 2
    assert found.split_points == (1, 4, 7)


def test_fewest_components_preferred():
    # two glued triangles are one fan
    w = build_multiple_wheel("B3+B3")
    assert str(find_generalized_wheel(w.graph, w.path).spec) == "B4"


@given(st.sampled_from(corpus(7, 2)))
def test_degenerate_triangle(g):
    for p in principal_paths(g):
        if g.has_edge(p.vk, p.v2):
            found = find_generalized_wheel(g, p)
            assert found is not None and str(found.spec) == "B3"


@given(st.sampled_from(corpus(7, 2)))
def test_matches_brute_force(g):
    for p in principal_paths(g):
        found = find_generalized_wheel(g, p)
        best = brute_generalized_wheel(g, p)
        assert (found is None) == (best is None)
        if found is not None:
            assert len(found.components) == best
            assert witness_is_subgraph(g, found)


def test_matches_brute_force_exhaustive():
    for g in corpus(7, 2):
        for p in principal_paths(g):
            found = find_generalized_wheel(g, p)
            assert (found is None) == (brute_generalized_wheel(g, p) is None)
