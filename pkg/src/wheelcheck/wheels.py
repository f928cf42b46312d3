"""Wheel constructions and the generalized-wheel recognizer.

Labelling used by every constructor: the shared vertex ``v1`` is ``0``, the
outer cycle is ``0, 1, ..., K-1`` counter-clockwise (so ``v2 = 1`` and
``vk = K-1``) and hubs of ordinary components follow as ``K, K+1, ...``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import BadParameter
from .graph import PlaneGraph, PrincipalPath, check_principal_path, from_faces


@dataclass(frozen=True)
class Component:
    kind: str  # "B" (broken) or "O" (ordinary)
    size: int  # k for broken wheels, rim length for ordinary ones

    def __post_init__(self):
        if self.kind not in ("B", "O"):
            raise BadParameter(f"unknown component kind {self.kind!r}")
        if self.size < 3:
            raise BadParameter(f"{self.kind}{self.size}: size must be at least 3")

    @property
    def segment_len(self) -> int:
        """Outer vertices contributed besides ``v1``, shared ends included."""
        return self.size - 1

    @property
    def is_even_wheel(self) -> bool:
        return self.kind == "O" and self.size % 2 == 0

    def __str__(self) -> str:
        return f"{self.kind}{self.size}"


@dataclass(frozen=True)
class WheelSpec:
    components: tuple

    @classmethod
    def parse(cls, text: str) -> "WheelSpec":
        tokens = text.replace(" ", "").split("+")
        comps = []
        for tok in tokens:
            m = re.fullmatch(r"([BO])(\d+)", tok)
            if not m:
                raise BadParameter(f"bad wheel token {tok!r}; expected B<k> or O<r>")
            comps.append(Component(m.group(1), int(m.group(2))))
        return cls(tuple(comps))

    @property
    def kind(self) -> str:
        if len(self.components) > 1:
            return "multiple"
        return "broken" if self.components[0].kind == "B" else "ordinary"

    @property
    def is_generalized(self) -> bool:
        return not any(c.is_even_wheel for c in self.components)

    @property
    def is_broken_overall(self) -> bool:
        return all(c.kind == "B" for c in self.components)

    @property
    def boundary_len(self) -> int:
        return 1 + sum(c.segment_len for c in self.components) - (len(self.components) - 1)

    def __str__(self) -> str:
        return "+".join(map(str, self.components))


@dataclass(frozen=True)
class Wheel:
    graph: PlaneGraph
    path: PrincipalPath
    spec: WheelSpec
    hubs: tuple  # per component: hub vertex, or None for broken components
    segments: tuple  # per component: its outer vertices other than v1, in order

    @property
    def is_generalized(self) -> bool:
        return self.spec.is_generalized

    @property
    def is_broken_overall(self) -> bool:
        return self.spec.is_broken_overall


def build_multiple_wheel(spec) -> Wheel:
    """Glue components counter-clockwise around ``v1``; neighbours share one ``v1`` edge."""
    if isinstance(spec, str):
        spec = WheelSpec.parse(spec)
    if not spec.components:
        raise BadParameter("wheel spec has no components")
    K = spec.boundary_len
    faces = []
    hubs = []
    segments = []
    start = 1
    next_hub = K
    for comp in spec.components:
        seg = tuple(range(start, start + comp.segment_len))
        start = seg[-1]
        segments.append(seg)
        if comp.kind == "B":
            hubs.append(None)
            faces.extend((seg[i], seg[i + 1], 0) for i in range(len(seg) - 1))
        else:
            h = next_hub
            next_hub += 1
            hubs.append(h)
            faces.extend((seg[i], seg[i + 1], h) for i in range(len(seg) - 1))
            faces.append((0, seg[0], h))
            faces.append((seg[-1], 0, h))
    g = from_faces(next_hub, faces, tuple(range(K)))
    return Wheel(g, PrincipalPath(K - 1, 0, 1), spec, tuple(hubs), tuple(segments))


def build_ordinary_wheel(rim_len: int) -> Wheel:
    if rim_len < 3:
        raise BadParameter("an ordinary wheel needs rim length >= 3")
    return build_multiple_wheel(WheelSpec((Component("O", rim_len),)))


def build_broken_wheel(k: int) -> Wheel:
    if k < 3:
        raise BadParameter("a broken wheel needs k >= 3")
    return build_multiple_wheel(WheelSpec((Component("B", k),)))


def build_split_hub_graph(k: int, i: int) -> Wheel:
    """Outer cycle ``v1..vk`` with two inner vertices: ``u`` sees ``v1..vi``, ``v`` sees ``vi..vk, v1``.

    ``v_j`` is vertex ``j-1``; ``u = k`` and ``v = k+1``. The returned ``hubs``
    are ``(u, v)``.
    """
    if k < 4 or not 3 <= i <= k - 1:
        raise BadParameter(f"need 3 <= i <= k-1, got k={k}, i={i}")
    u, v = k, k + 1
    faces = [(j, j + 1, u) for j in range(i - 1)]
    faces += [(j, j + 1, v) for j in range(i - 1, k - 1)]
    faces += [(k - 1, 0, v), (0, u, v), (u, i - 1, v)]
    g = from_faces(k + 2, faces, tuple(range(k)))
    spec = WheelSpec((Component("O", k),))
    return Wheel(g, PrincipalPath(k - 1, 0, 1), spec, (u, v), (tuple(range(1, k)),))


# ---------------------------------------------------------------------------
# recognizer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WheelWitness:
    """A generalized wheel located in a host graph.

    ``mapping[i]`` is the host vertex playing vertex ``i`` of
    ``build_multiple_wheel(spec).graph``.
    """

    spec: WheelSpec
    mapping: tuple
    path: PrincipalPath
    split_points: tuple  # host vertices where consecutive components meet, v2 and vk included
    components: tuple  # per component: (kind, hub or None, host boundary sequence)

    def to_json(self) -> dict:
        return {
            "spec": str(self.spec),
            "mapping": list(self.mapping),
            "path": list(self.path.vertices),
            "split_points": list(self.split_points),
            "components": [
                {"kind": k, "hub": h, "boundary": list(seq)} for k, h, seq in self.components
            ],
        }


def _chains(adj, cand: set, start: int, c: list, parity: bool):
    """Increasing index chains inside ``cand`` from ``start``.

    Returns ``{(end, count_parity): chain}``; each chain is the
    lexicographically-first one found for its key.
    """
    found = {(start, 1): (start,)}
    for i in range(start, len(c)):
        for par in (0, 1):
            chain = found.get((i, par))
            if chain is None:
                continue
            for j in range(i + 1, len(c)):
                if j in cand and c[j] in adj[c[i]]:
                    key = (j, par ^ 1)
                    if key not in found or chain + (j,) < found[key]:
                        found[key] = chain + (j,)
    if not parity:
        return {k: v for k, v in found.items()}
    return found


def find_generalized_wheel(g: PlaneGraph, p: PrincipalPath) -> Optional[WheelWitness]:
    """Locate a generalized wheel with principal path ``p`` and rim on the outer cycle.

    Dynamic programming along the boundary ``v2 .. vk``: split points are
    boundary vertices adjacent to ``v1``; a step between two split points is
    a broken component (a chain of ``v1``-neighbours) or an odd ordinary
    component (a chain of neighbours of some inner vertex ``u ~ v1`` whose
    rim, ``v1`` included, has odd length). Chains may jump along chords.
    Ties are broken by fewest components, then lexicographic split points.
    """
    check_principal_path(g, p)
    k = len(g.outer)
    i1 = g.outer.index(p.v1)
    c = [g.outer[(i1 + t) % k] for t in range(1, k)]  # c[0] = v2, c[-1] = vk
    L = len(c) - 1
    adj = [set(r) for r in g.rotation]
    v1 = p.v1
    near = {i for i in range(len(c)) if c[i] in adj[v1]}
    if 0 not in near or L not in near:
        return None

    # transitions[i] -> list of (j, kind, hub, chain)
    transitions = {i: [] for i in near}
    for i in sorted(near):
        for (j, _), chain in sorted(_chains(adj, near, i, c, False).items()):
            if j != i and j in near:
                transitions[i].append((j, "B", None, chain))
    outer_set = g.outer_set
    hubs = sorted(u for u in adj[v1] if u not in outer_set)
    for u in hubs:
        cand = {i for i in range(len(c)) if c[i] in adj[u]}
        for i in sorted(near & cand):
            for (j, par), chain in sorted(_chains(adj, cand, i, c, True).items()):
                # chain has `len(chain)` vertices; rim adds v1 and must be odd
                if j != i and j in near and len(chain) % 2 == 0:
                    transitions[i].append((j, "O", u, chain))

    # keep, per (i, j), the preferred step: broken before ordinary, then smallest hub
    best_step = {}
    for i, steps in transitions.items():
        for j, kind, hub, chain in steps:
            rank = (0 if kind == "B" else 1, -1 if hub is None else hub, chain)
            if (i, j) not in best_step or rank < best_step[(i, j)][0]:
                best_step[(i, j)] = (rank, kind, hub, chain)

    best = {L: (0, ())}
    for i in sorted(near, reverse=True):
        if i == L:
            continue
        options = []
        for j in sorted(near):
            if (i, j) in best_step and j in best:
                cnt, splits = best[j]
                options.append((cnt + 1, (j,) + splits))
        if options:
            best[i] = min(options)
    if 0 not in best:
        return None

    _, splits = best[0]
    stops = (0,) + splits
    comps = []
    for a, b in zip(stops, stops[1:]):
        _, kind, hub, chain = best_step[(a, b)]
        comps.append((kind, hub, tuple(c[t] for t in chain)))
    return _witness(p, comps)


def _witness(p: PrincipalPath, comps) -> WheelWitness:
    spec_comps = []
    mapping = [p.v1]
    hubs = []
    for idx, (kind, hub, seq) in enumerate(comps):
        size = len(seq) + 1
        spec_comps.append(Component(kind, size))
        mapping.extend(seq if idx == 0 else seq[1:])
        if hub is not None:
            hubs.append(hub)
    mapping.extend(hubs)
    split_points = (comps[0][2][0],) + tuple(seq[-1] for _, _, seq in comps)
    return WheelWitness(
        spec=WheelSpec(tuple(spec_comps)),
        mapping=tuple(mapping),
        path=p,
        split_points=split_points,
        components=tuple(comps),
    )


def witness_is_subgraph(host: PlaneGraph, w: WheelWitness) -> bool:
    """Re-check a witness edge by edge against its host."""
    model = build_multiple_wheel(w.spec)
    if len(set(w.mapping)) != len(w.mapping) or len(w.mapping) != model.graph.n:
        return False
    if any(not host.has_edge(w.mapping[a], w.mapping[b]) for a, b in model.graph.edges):
        return False
    on_outer = host.outer_set
    return all(w.mapping[v] in on_outer for v in model.graph.outer)
