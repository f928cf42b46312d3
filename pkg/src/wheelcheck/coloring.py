"""Brute-force list colouring, the Nullstellensatz bridge and 3-colouring relations.

Graphs only need ``n`` and ``edges``; plane structure is never used here.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from types import SimpleNamespace
from typing import Mapping, Optional, Sequence

from .errors import BudgetExceeded, NotThreeColorable
from .poly import graph_polynomial

DEFAULT_NODE_BUDGET = 10**6


def _adjacency(g) -> list[set]:
    adj = [set() for _ in range(g.n)]
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def list_colorable(g, lists: Mapping[int, Sequence[int]], budget: int = DEFAULT_NODE_BUDGET) -> Optional[dict]:
    """A proper colouring choosing ``c[v]`` from ``lists[v]``, or ``None``.

    Backtracking picks the uncoloured vertex with the fewest remaining
    options, lowest index first on ties.
    """
    adj = _adjacency(g)
    options = {v: set(lists[v]) for v in range(g.n)}
    if any(not options[v] for v in options):
        return None
    colour: dict = {}
    nodes = 0

    def avail(v):
        return options[v] - {colour[w] for w in adj[v] if w in colour}

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"list colouring search exceeded {budget} nodes")
        free = [v for v in range(g.n) if v not in colour]
        if not free:
            return True
        v = min(free, key=lambda x: (len(avail(x)), x))
        for c in sorted(avail(v)):
            colour[v] = c
            if rec():
                return True
            del colour[v]
        return False

    return dict(colour) if rec() else None


@dataclass
class CNReport:
    term: tuple
    mode: str
    seed: Optional[int]
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"term": list(self.term), "mode": self.mode, "seed": self.seed,
                "checked": self.checked, "failures": [dict(f) for f in self.failures]}


def _canonical_assignments(sizes: Sequence[int], universe: int):
    """List assignments with the given sizes, one per orbit of colour permutations."""
    n = len(sizes)
    cur: list = [None] * n

    def rec(v: int, used: int):
        if v == n:
            yield {i: cur[i] for i in range(n)}
            return
        s = sizes[v]
        for fresh in range(0, min(s, universe - used) + 1):
            old = s - fresh
            if old > used:
                continue
            new = tuple(range(used + 1, used + fresh + 1))
            for part in combinations(range(1, used + 1), old):
                cur[v] = part + new
                yield from rec(v + 1, used + fresh)

    yield from rec(0, 0)


def cn_implication_check(
    g,
    term: Sequence[int],
    trials: int = 50,
    exhaustive: bool = False,
    seed: int = 0,
    universe: Optional[int] = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> CNReport:
    """Lists of length ``exponent + 1`` must always be colourable when ``term`` is nonzero in ``P(G)``.

    Random mode draws colours from ``1..2*max(size)``; exhaustive mode walks
    every assignment over ``1..universe`` up to renaming colours.
    """
    sizes = [x + 1 for x in term]
    if universe is None:
        universe = 5 if exhaustive else 2 * max(sizes, default=1)
    report = CNReport(tuple(term), "exhaustive" if exhaustive else "random", None if exhaustive else seed)
    if exhaustive:
        source = _canonical_assignments(sizes, universe)
    else:
        rng = random.Random(seed)
        colours = list(range(1, universe + 1))
        source = (
            {v: tuple(sorted(rng.sample(colours, sizes[v]))) for v in range(g.n)} for _ in range(trials)
        )
    for lists in source:
        report.checked += 1
        if list_colorable(g, lists, budget) is None:
            report.failures.append(lists)
    return report


class Relation(str, Enum):
    ALWAYS_EQUAL = "AlwaysEqual"
    ALWAYS_DIFFERENT = "AlwaysDifferent"
    NEITHER = "Neither"


def three_colourings(g):
    """Every proper colouring with colours ``0, 1, 2``."""
    adj = _adjacency(g)
    colour = [None] * g.n

    def rec(v):
        if v == g.n:
            yield tuple(colour)
            return
        for c in range(3):
            if all(colour[w] != c for w in adj[v] if w < v):
                colour[v] = c
                yield from rec(v + 1)
        colour[v] = None

    yield from rec(0)


def colour_relation(g, x: int, y: int) -> Relation:
    same = diff = False
    for col in three_colourings(g):
        if col[x] == col[y]:
            same = True
        else:
            diff = True
        if same and diff:
            return Relation.NEITHER
    if not (same or diff):
        raise NotThreeColorable("graph has no proper 3-colouring")
    return Relation.ALWAYS_EQUAL if same else Relation.ALWAYS_DIFFERENT


def xy_shapes(g, x: int, y: int) -> set:
    """``(beta, gamma)`` pairs of nonzero terms with ``x, y <= 1`` and every other exponent ``<= 2``."""
    caps = [2] * g.n
    caps[x] = caps[y] = 1
    return {(e[x], e[y]) for e, _ in graph_polynomial(g, caps=caps).items()}


def outerplanar_law_holds(g, x: int, y: int) -> tuple[bool, Relation, set]:
    """Three-way correspondence between colour relation and available ``(beta, gamma)`` shapes."""
    rel = colour_relation(g, x, y)
    shapes = xy_shapes(g, x, y)
    if rel is Relation.ALWAYS_EQUAL:
        ok = (1, 1) in shapes
    elif rel is Relation.ALWAYS_DIFFERENT:
        ok = bool(shapes & {(0, 1), (1, 0)})
    else:
        ok = (0, 0) in shapes
    return ok, rel, shapes


def random_outerplanar(n: int, rng: random.Random, keep: float = 0.7):
    """Random spanning subgraph of a random triangulated ``n``-gon (always outerplanar)."""
    edges = {(i, i + 1) for i in range(n - 1)}
    if n > 2:
        edges.add((0, n - 1))
    stack = [tuple(range(n))]
    while stack:
        poly = stack.pop()
        if len(poly) < 4:
            continue
        i, j = sorted(rng.sample(range(len(poly)), 2))
        if j - i < 2 or (i == 0 and j == len(poly) - 1):
            stack.append(poly)  # not a diagonal; draw again
            continue
        edges.add((poly[i], poly[j]))
        stack.append(poly[i:j + 1])
        stack.append(poly[j:] + poly[:i + 1])
    kept = frozenset(e for e in edges if rng.random() < keep)
    return SimpleNamespace(n=n, edges=kept)
