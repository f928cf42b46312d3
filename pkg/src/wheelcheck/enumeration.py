"""Exhaustive generation of small near-triangulations of a polygon.

The disk is triangulated recursively: the pending polygon's first edge gets a
triangle whose apex is either another vertex of that polygon or a fresh
interior vertex. Because the choice is forced for a fixed output, every
boundary-labelled near-triangulation comes out exactly once; isomorphism under
rotation/reflection of the boundary is then removed with a canonical code.
"""
from __future__ import annotations

import os
from typing import Iterator

from .errors import BadParameter, BoundsExceeded
from .graph import PlaneGraph, from_faces

DEFAULT_BUDGET = 10**6


def default_budget() -> int:
    env = os.environ.get("WHEELCHECK_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _code_from(rotation, start_u: int, start_v: int) -> tuple[tuple, list]:
    """BFS code of a connected rotation system from the dart ``start_u -> start_v``."""
    num = {start_u: 0}
    order = [start_u]
    ref = {start_u: start_v}
    code = []
    i = 0
    while i < len(order):
        v = order[i]
        rot = rotation[v]
        j = rot.index(ref[v])
        for t in range(len(rot)):
            w = rot[(j + t) % len(rot)]
            if w not in num:
                num[w] = len(order)
                order.append(w)
                ref[w] = v
            code.append(num[w])
        code.append(-1)
        i += 1
    return tuple(code), order


def canonical_code(g: PlaneGraph, symmetric: bool = True) -> tuple:
    """Code invariant under boundary rotations (and reflections if ``symmetric``).

    With ``symmetric=False`` the code is taken from the dart
    ``outer[0] -> outer[1]`` only, which identifies boundary-labelled graphs.
    """
    return _canonical(g, symmetric)[0]


def _canonical(g: PlaneGraph, symmetric: bool):
    outer = g.outer
    k = len(outer)
    mirrored = tuple(tuple(reversed(r)) for r in g.rotation)
    # Graph-level dart code; the outer cycle is pinned by the start dart, and
    # its length is prepended so different boundaries never collide.
    candidates = []
    starts = range(k) if symmetric else range(1)
    for i in starts:
        code, _ = _code_from(g.rotation, outer[i], outer[(i + 1) % k])
        candidates.append((code, i, False))
        if symmetric:
            code, _ = _code_from(mirrored, outer[i], outer[(i - 1) % k])
            candidates.append((code, i, True))
    best = min(candidates)
    return (k,) + best[0], best[1], best[2]


def canonical_form(g: PlaneGraph, symmetric: bool = True) -> PlaneGraph:
    """Relabel so the outer cycle is ``0..k-1`` from the canonical start dart."""
    _, i, flip = _canonical(g, symmetric)
    k = len(g.outer)
    if flip:
        bnd = [g.outer[(i - t) % k] for t in range(k)]
        rotation = tuple(tuple(reversed(r)) for r in g.rotation)
    else:
        bnd = [g.outer[(i + t) % k] for t in range(k)]
        rotation = g.rotation
    _, order = _code_from(rotation, bnd[0], bnd[1])
    inner = [v for v in order if v not in set(bnd)]
    inner += [v for v in range(g.n) if v not in set(order)]
    new = {v: j for j, v in enumerate(bnd + inner)}
    rot = [None] * g.n
    for v in range(g.n):
        rot[new[v]] = tuple(new[w] for w in rotation[v])
    edges = {tuple(sorted((new[a], new[b]))) for a, b in g.edges}
    return PlaneGraph(g.n, frozenset(edges), tuple(rot), tuple(range(k)))


def _triangulations(k: int, max_interior: int, budget: int) -> Iterator[tuple[int, list]]:
    """Yield ``(n, triangles)`` for every boundary-labelled near-triangulation."""
    count = 0
    edges = {(i, (i + 1) % k) if i < (i + 1) % k else ((i + 1) % k, i) for i in range(k)}
    tris: list = []

    def key(a, b):
        return (a, b) if a < b else (b, a)

    def rec(pending: list, n: int, left: int):
        nonlocal count
        if not pending:
            count += 1
            if count > budget:
                raise BoundsExceeded(f"enumeration budget of {budget} instances exceeded")
            yield n, list(tris)
            return
        poly = pending[-1]
        rest = pending[:-1]
        r = len(poly)
        p0, p1 = poly[0], poly[1]
        # apex on the polygon
        for j in range(2, r):
            c = poly[j]
            new_edges = []
            if j != 2:
                new_edges.append(key(p1, c))
            if j != r - 1:
                new_edges.append(key(c, p0))
            if any(e in edges for e in new_edges):
                continue
            edges.update(new_edges)
            tris.append((p0, p1, c))
            sub = list(rest)
            if j < r - 1:
                sub.append((c,) + tuple(poly[j + 1:]) + (p0,))
            if j > 2:
                sub.append(tuple(poly[1:j + 1]))
            yield from rec(sub, n, left)
            tris.pop()
            edges.difference_update(new_edges)
        # fresh interior apex
        if left > 0:
            x = n
            edges.update((key(p0, x), key(p1, x)))
            tris.append((p0, p1, x))
            yield from rec(rest + [(p0, x) + tuple(poly[1:])], n + 1, left - 1)
            tris.pop()
            edges.difference_update((key(p0, x), key(p1, x)))

    yield from rec([tuple(range(k))], k, max_interior)


def enumerate_near_triangulations(
    outer_len: int,
    max_interior: int,
    symmetric: bool = True,
    budget: int | None = None,
) -> Iterator[PlaneGraph]:
    """All near-triangulations with the given boundary and at most ``max_interior`` inner vertices.

    Output is sorted by canonical code. ``symmetric=False`` keeps graphs that
    differ only by a boundary rotation or reflection apart.
    """
    if outer_len < 3 or max_interior < 0:
        raise BadParameter("need outer_len >= 3 and max_interior >= 0")
    if budget is None:
        budget = default_budget()
    seen = {}
    for n, tris in _triangulations(outer_len, max_interior, budget):
        g = from_faces(n, tris, tuple(range(outer_len)))
        code = canonical_code(g, symmetric)
        if code not in seen:
            seen[code] = g
    for code in sorted(seen):
        yield canonical_form(seen[code], symmetric)
