"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line in ``RESULTS``; ``conftest.py`` prints
them after the run. Criteria 6 and 8 fail on the mathematics itself (see the
README); they are marked as strict expected failures, so they turn into
errors if they ever start passing.
"""
import random
import time
from types import SimpleNamespace

import pytest

from wheelcheck.alon_tarsi import at_number, coefficient_by_orientations
from wheelcheck.coloring import cn_implication_check
from wheelcheck.errors import PreconditionViolated, TheoremViolation
from wheelcheck.extend import check_3path_extendable, check_short_outer_cycle, short_cycle_preconditions
from wheelcheck.graph import principal_paths, remove_path_edges
from wheelcheck.lemmas import verify_lemma
from wheelcheck.poly import graph_polynomial

from helpers import corpus, exponent_vectors, random_plane_graphs

RESULTS: list = []

SWEEP: dict = {}


def record(n, ok, detail, start, budget):
    elapsed = time.perf_counter() - start
    ok = ok and elapsed <= budget
    RESULTS.append((n, ok, f"{detail} [{elapsed:.2f}s, budget {budget:g}s]"))
    return ok


def main_sweep():
    """Criterion 8's sweep, shared with criterion 10."""
    if not SWEEP:
        rows = []
        for g in corpus(7, 2):
            for p in principal_paths(g):
                try:
                    rows.append((g, p, check_3path_extendable(g, p), None))
                except TheoremViolation as exc:
                    rows.append((g, p, None, exc))
        SWEEP["rows"] = rows
    return SWEEP["rows"]


def test_criterion_01_triangle_golden():
    tri = SimpleNamespace(n=3, edges=frozenset({(0, 1), (0, 2), (1, 2)}))
    expect = {(2, 1, 0): 1, (2, 0, 1): -1, (1, 2, 0): -1, (1, 0, 2): 1, (0, 2, 1): 1, (0, 1, 2): -1}
    start = time.perf_counter()
    got = graph_polynomial(tri).terms()
    assert record(1, got == expect, "triangle expansion, six terms with signs", start, 0.001)


def test_criterion_02_oracle_agreement():
    start = time.perf_counter()
    graphs = list(random_plane_graphs(500, 14, seed=2024))
    vectors = 0
    bad = []
    for g in graphs:
        poly = graph_polynomial(g).terms()
        for d in exponent_vectors(g.n, len(g.edges)):
            vectors += 1
            if coefficient_by_orientations(g, d=d) != poly.get(d, 0):
                bad.append((g, d))
    ok = len(graphs) == 500 and not bad
    assert record(2, ok, f"500 graphs, {vectors} exponent vectors, {len(bad)} disagreements", start, 120)


def test_criterion_03_truncation_soundness():
    start = time.perf_counter()
    rng = random.Random(99)
    bad = 0
    for g in random_plane_graphs(200, 12, seed=5):
        caps = tuple(rng.choice([None, 0, 1, 2, 3, 4]) for _ in range(g.n))
        full = graph_polynomial(g).terms()
        inside = {e: c for e, c in full.items() if all(b is None or x <= b for x, b in zip(e, caps))}
        bad += graph_polynomial(g, caps=caps).terms() != inside
    assert record(3, bad == 0, f"200 graphs with random caps, {bad} mismatches", start, 60)


LEMMA_SUITE = [
    ("signsymmetry", range(1, 6)),
    ("012", range(2, 10)),
    ("030", range(2, 10)),
    ("final", range(4, 10)),
    ("no_030_even", range(2, 6)),
    ("all_040_even", range(1, 6)),
    ("even_wheels", range(2, 6)),
    ("odd_wheels", range(2, 6)),
    ("all_121_odd", range(2, 6)),
]


def test_criterion_04_lemma_suite():
    start = time.perf_counter()
    failed = [lemma for lemma, ks in LEMMA_SUITE if not verify_lemma(lemma, ks).passed]
    detail = f"{len(LEMMA_SUITE)} lemmas" + (f", failing: {', '.join(failed)}" if failed else ", all pass")
    assert record(4, not failed, detail, start, 120)


def test_criterion_05_broken5():
    start = time.perf_counter()
    report = verify_lemma("broken5")
    assert record(5, report.passed, report.results[0].detail, start, 1)


@pytest.mark.xfail(strict=True, reason="residual terms of other shapes exist for rims 5, 7 and 9")
def test_criterion_06_ordinary2k1():
    start = time.perf_counter()
    report = verify_lemma("ordinary2k1", range(2, 5))
    detail = "; ".join(f"rim {2 * r.param + 1}: {r.detail}" for r in report.results)
    assert record(6, report.passed, detail, start, 60)


def test_criterion_07_even_ok():
    start = time.perf_counter()
    report = verify_lemma("even_ok", range(3, 10))
    assert record(7, report.passed, "rims 3..9: extendable exactly for even rims", start, 10)


@pytest.mark.xfail(strict=True, reason="the corpus contains a near-triangulation with neither a term nor a wheel")
def test_criterion_08_main_equivalence():
    start = time.perf_counter()
    rows = main_sweep()
    violations = [(g, p) for g, p, v, exc in rows if exc is not None]
    ext = sum(1 for _, _, v, _ in rows if v is not None and v.extendable)
    detail = (f"{len(rows)} (graph, path) instances: {ext} extendable, "
              f"{len(rows) - ext - len(violations)} blocked, {len(violations)} violations")
    if violations:
        g, p = violations[0]
        detail += f"; first at path {p.vertices} with outer {g.outer}"
    assert record(8, not violations, detail, start, 1800)


def test_criterion_09_short_cycles():
    start = time.perf_counter()
    valid = 0
    bad = []
    for g in corpus(5, 3):
        try:
            short_cycle_preconditions(g)
        except PreconditionViolated:
            continue
        valid += 1
        try:
            w = check_short_outer_cycle(g)
        except TheoremViolation:
            bad.append(g)
            continue
        if any(w.exponents[v] for v in g.outer) or any(w.exponents[v] > 4 for v in g.interior):
            bad.append(g)
    assert record(9, valid > 0 and not bad, f"{valid} valid instances, {len(bad)} without a witness", start, 300)


def test_criterion_10_cn_bridge():
    start = time.perf_counter()
    rows = main_sweep()
    witnesses = 0
    failures = 0
    for g, p, v, _ in rows:
        if v is None or not v.extendable:
            continue
        witnesses += 1
        rep = cn_implication_check(remove_path_edges(g, p), v.witness.exponents, trials=50, seed=witnesses)
        failures += len(rep.failures)
    ok = witnesses > 0 and failures == 0
    assert record(10, ok, f"{witnesses} witnesses x 50 assignments, {failures} uncolourable", start, 600)


def test_criterion_11_at_bound():
    start = time.perf_counter()
    graphs = [g for g in corpus(7, 2) + corpus(5, 3) if g.num_edges <= 20]
    worst = max(at_number(g) for g in graphs)
    assert record(11, worst <= 5, f"{len(graphs)} graphs, largest Alon-Tarsi number {worst}", start, 600)
