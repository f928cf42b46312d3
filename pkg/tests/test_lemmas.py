import pytest

from wheelcheck.errors import UnknownLemma
from wheelcheck.graph import remove_path_edges
from wheelcheck.lemmas import (
    LEMMAS,
    broken5_expected,
    fan,
    ordinary2k1_parts,
    parse_range,
    verify_lemma,
)
from wheelcheck.poly import graph_polynomial
from wheelcheck.wheels import build_broken_wheel

from helpers import naive_polynomial

HOLDING = sorted(set(LEMMAS) - {"ordinary2k1"})


@pytest.mark.parametrize("lemma", HOLDING)
def test_default_ranges_pass(lemma):
    report = verify_lemma(lemma)
    assert report.passed, report.to_text()


def test_unknown():
    with pytest.raises(UnknownLemma):
        verify_lemma("nope")


def test_parse_range():
    assert list(parse_range("1..5")) == [1, 2, 3, 4, 5]
    assert list(parse_range("2,4")) == [2, 4]
    assert list(parse_range("3")) == [3]


def test_fan_is_broken_wheel():
    g = fan(4)
    assert g.n == 5 and all(g.has_edge(0, v) for v in range(1, 5))


def test_odd_wheels_smallest_sign():
    # u < v1 < v2 < v3: the u^3 v2^2 term of the 3-path fan carries -1
    poly = naive_polynomial(4, sorted(fan(3).edges))
    assert poly[(3, 0, 2, 0)] == -1
    assert verify_lemma("odd_wheels", [2]).passed


def test_no_030_even_reports_literal_index():
    r = verify_lemma("no_030_even", [2]).results[0]
    assert "v_(2k-1)" in r.detail


def test_broken5_head_against_naive_expansion():
    w = build_broken_wheel(5)
    h = remove_path_edges(w.graph, w.path)
    terms = naive_polynomial(5, sorted(h.edges))
    head = broken5_expected()
    signs = {terms.get(e, 0) * s for e, s in head.items()}
    assert len(signs) == 1 and abs(signs.pop()) == 1
    for e in set(terms) - set(head):
        assert e[2] > 2 or e[3] > 2 or e[0] + e[1] + e[4] > 2


@pytest.mark.parametrize("k", [2, 3, 4])
def test_ordinary2k1_stated_terms(k):
    parts = ordinary2k1_parts(k)
    terms = parts["terms"]
    signs = {terms.get(e, 0) * s for e, s in parts["signed"].items()}
    assert len(signs) == 1 and 0 not in signs
    assert all(terms.get(e, 0) for e in parts["unsigned"])
    assert not any(terms.get(e, 0) for e in parts["vanishing"])


def test_failure_carries_dump():
    report = verify_lemma("ordinary2k1", [2])
    assert not report.passed
    assert report.failures[0].dump.startswith("ptri")
    assert "poly" in report.failures[0].dump
    assert report.to_json()["passed"] is False


def test_lemma_coefficients_match_naive():
    # spot-check the engine used by the suite on the 6-path fan
    g = fan(6)
    assert graph_polynomial(g).terms() == naive_polynomial(g.n, sorted(g.edges))
