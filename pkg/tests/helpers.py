"""Independent reference implementations used as test oracles.

Nothing here calls the package's polynomial engine or recognizer; these are
deliberately naive re-derivations.
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache
from math import comb, factorial
from types import SimpleNamespace

from wheelcheck.enumeration import enumerate_near_triangulations


def naive_polynomial(n, edges, ordering=None):
    """Uncapped expansion of prod (x_a - x_b), one factor at a time, plain dicts."""
    pos = {v: i for i, v in enumerate(ordering or range(n))}
    terms = {(0,) * n: 1}
    for a, b in edges:
        if pos[a] > pos[b]:
            a, b = b, a
        nxt = {}
        for e, c in terms.items():
            for v, s in ((a, 1), (b, -1)):
                f = list(e)
                f[v] += 1
                f = tuple(f)
                nxt[f] = nxt.get(f, 0) + s * c
        terms = {e: c for e, c in nxt.items() if c}
    return terms


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def brown_count(k: int, n: int) -> int:
    """Boundary-labelled near-triangulations of a k-gon with exactly n inner vertices."""
    m = k - 3
    return 2 * factorial(2 * m + 3) * factorial(4 * n + 2 * m + 1) // (
        factorial(m + 2) * factorial(m) * factorial(n) * factorial(3 * n + 2 * m + 3)
    )


@lru_cache(maxsize=None)
def corpus(max_outer: int, max_interior: int, symmetric: bool = True) -> tuple:
    out = []
    for k in range(3, max_outer + 1):
        out.extend(enumerate_near_triangulations(k, max_interior, symmetric=symmetric))
    return tuple(out)


def connected(n, edges) -> bool:
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n


def random_plane_graphs(count: int, max_edges: int, seed: int = 0):
    """Connected spanning subgraphs of enumerated near-triangulations (hence plane)."""
    rng = random.Random(seed)
    pool = [g for g in corpus(6, 2) if g.num_edges <= max_edges + 6]
    made = 0
    while made < count:
        g = rng.choice(pool)
        edges = sorted(g.edges)
        rng.shuffle(edges)
        keep = list(edges)
        for e in edges:
            if len(keep) <= max_edges or rng.random() < 0.3:
                trial = [f for f in keep if f != e]
                if connected(g.n, trial) and (len(keep) > max_edges or rng.random() < 0.5):
                    keep = trial
        if len(keep) > max_edges:
            continue
        made += 1
        yield SimpleNamespace(n=g.n, edges=frozenset(keep), num_edges=len(keep))


def exponent_vectors(n: int, total: int, cap=None):
    """Every vector of n nonnegative ints summing to total (entries <= cap if given)."""
    for bars in itertools.combinations(range(total + n - 1), n - 1):
        prev = -1
        e = []
        for b in bars + (total + n - 1,):
            e.append(b - prev - 1)
            prev = b
        if cap is None or max(e) <= cap:
            yield tuple(e)


# -- brute-force generalized-wheel search -------------------------------------

def _path_ok(adj, seq):
    return all(seq[i + 1] in adj[seq[i]] for i in range(len(seq) - 1))


def brute_generalized_wheel(g, p):
    """Smallest number of components of a generalized wheel on principal path p, or None.

    Tries every subsequence of the outer path v2..vk and every way of cutting it
    into components; ordinary components need distinct inner hubs.
    """
    k = len(g.outer)
    i1 = g.outer.index(p.v1)
    c = [g.outer[(i1 + t) % k] for t in range(1, k)]
    adj = [set(r) for r in g.rotation]
    v1 = p.v1
    inner = [u for u in range(g.n) if u not in g.outer_set and u in adj[v1]]
    best = None
    middle = list(range(1, len(c) - 1))
    for r in range(len(middle) + 1):
        for pick in itertools.combinations(middle, r):
            seq = [c[0]] + [c[i] for i in pick] + [c[-1]]
            if not _path_ok(adj, seq):
                continue
            inner_pts = list(range(1, len(seq) - 1))
            for s in range(len(inner_pts) + 1):
                for cuts in itertools.combinations(inner_pts, s):
                    stops = (0,) + cuts + (len(seq) - 1,)
                    segs = [seq[a:b + 1] for a, b in zip(stops, stops[1:])]
                    if any(len(x) < 2 for x in segs):
                        continue
                    if _assign(segs, adj, v1, inner, set()):
                        n = len(segs)
                        if best is None or n < best:
                            best = n
    return best


def _assign(segs, adj, v1, inner, used):
    if not segs:
        return True
    seg, rest = segs[0], segs[1:]
    if seg[0] not in adj[v1] or seg[-1] not in adj[v1]:
        return False
    if all(x in adj[v1] for x in seg) and _assign(rest, adj, v1, inner, used):
        return True
    if len(seg) % 2 == 0:  # rim = seg + v1 must be odd
        for u in inner:
            if u not in used and all(x in adj[u] for x in seg):
                if _assign(rest, adj, v1, inner, used | {u}):
                    return True
    return False
