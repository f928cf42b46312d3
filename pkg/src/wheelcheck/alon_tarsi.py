"""Signed orientation counting, an expansion-free route to graph-polynomial coefficients.

Choosing ``x_a`` from factor ``(x_a - x_b)`` means orienting the edge out of
``a``. A coefficient is therefore the signed number of orientations with the
requested out-degree vector, the sign being ``(-1)`` to the number of edges
pointing from the later to the earlier endpoint.
"""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .errors import EdgeBudgetExceeded
from .poly import graph_polynomial

DEFAULT_EDGE_LIMIT = 26


def _oriented_edges(g, ordering):
    ordering = tuple(range(g.n)) if ordering is None else tuple(ordering)
    pos = {v: i for i, v in enumerate(ordering)}
    return [(a, b) if pos[a] < pos[b] else (b, a) for a, b in sorted(g.edges)]


def coefficient_by_orientations(
    g, ordering: Optional[Sequence[int]] = None, d: Sequence[int] = (), limit: int = DEFAULT_EDGE_LIMIT
) -> int:
    """Signed count of orientations whose out-degree vector is ``d``."""
    edges = _oriented_edges(g, ordering)
    if len(edges) > limit:
        raise EdgeBudgetExceeded(f"{len(edges)} edges exceed the limit of {limit}")
    d = list(d)
    if len(d) != g.n or sum(d) != len(edges) or min(d, default=0) < 0:
        return 0
    # remaining[v]: edges at v not yet decided; prune when d[v] is out of reach
    remaining = [0] * g.n
    for a, b in edges:
        remaining[a] += 1
        remaining[b] += 1
    out = [0] * g.n
    m = len(edges)

    def rec(i: int, sign: int) -> int:
        if i == m:
            return sign
        a, b = edges[i]
        remaining[a] -= 1
        remaining[b] -= 1
        total = 0
        for src, s in ((a, sign), (b, -sign)):
            out[src] += 1
            if (
                out[a] <= d[a] and out[b] <= d[b]
                and out[a] + remaining[a] >= d[a] and out[b] + remaining[b] >= d[b]
            ):
                total += rec(i + 1, s)
            out[src] -= 1
        remaining[a] += 1
        remaining[b] += 1
        return total

    return rec(0, 1)


def orientation_expansion(g, ordering: Optional[Sequence[int]] = None, limit: int = 22) -> dict:
    """Every nonzero coefficient at once, by enumerating all ``2^|E|`` orientations."""
    edges = _oriented_edges(g, ordering)
    m = len(edges)
    if m > limit:
        raise EdgeBudgetExceeded(f"{m} edges exceed the full-enumeration limit of {limit}")
    n = g.n
    if m == 0:
        return {(0,) * n: 1}
    masks = np.arange(1 << m, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(np.int64)
    src = np.array([a for a, _ in edges])
    dst = np.array([b for _, b in edges])
    inc_src = np.zeros((m, n), dtype=np.int64)
    inc_src[np.arange(m), src] = 1
    inc_dst = np.zeros((m, n), dtype=np.int64)
    inc_dst[np.arange(m), dst] = 1
    # bit 0: edge leaves the earlier endpoint; bit 1: reversed
    outdeg = (1 - bits) @ inc_src + bits @ inc_dst
    sign = 1 - 2 * (bits.sum(axis=1) & 1)
    uniq, inv = np.unique(outdeg, axis=0, return_inverse=True)
    sums = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(sums, inv.ravel(), sign)
    result = {}
    for row, c in zip(uniq.tolist(), sums.tolist()):
        if c:
            result[tuple(row)] = c
    return result


def at_number(g, limit: int = DEFAULT_EDGE_LIMIT) -> int:
    """Least ``k`` such that the graph polynomial has a nonzero term with all exponents below ``k``."""
    if g.num_edges > limit:
        raise EdgeBudgetExceeded(f"{g.num_edges} edges exceed the limit of {limit}")
    k = 1
    while True:
        if graph_polynomial(g, caps=k - 1):
            return k
        k += 1


def at_number_by_orientations(g, limit: int = 22) -> int:
    """Same quantity from the orientation expansion; independent of the polynomial engine."""
    coeffs = orientation_expansion(g, limit=limit)
    return 1 + min(max(e) for e in coeffs)
