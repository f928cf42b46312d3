"""Plane graphs given by rotation systems, with a marked outer cycle.

Conventions
-----------
Vertices are ``0..n-1``. ``rotation[v]`` lists the neighbours of ``v`` in
counter-clockwise order. ``outer`` lists the outer cycle counter-clockwise,
so the bounded region lies to the left of every dart ``outer[i] -> outer[i+1]``.

Faces are traced with the face on the left: from dart ``u -> v`` the walk
continues along ``v -> w`` where ``w`` precedes ``u`` in ``rotation[v]``.
Inner faces therefore come out counter-clockwise and the outer face comes out
as the reversed outer cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    EmbeddingInconsistent,
    MissingPathEdge,
    NonSimple,
    NotAChord,
    OuterNotACycle,
    RotationMismatch,
    UnsupportedLength,
)


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class PrincipalPath:
    """Ordered boundary path ``vk - v1 - v2`` whose two edges get deleted."""

    vk: int
    v1: int
    v2: int

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.vk, self.v1, self.v2)

    @property
    def edges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (_edge(self.vk, self.v1), _edge(self.v1, self.v2))

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class PlaneGraph:
    """Immutable combinatorial embedding.

    Instances made by :func:`build_plane_graph` are validated; instances
    produced by edge surgery (e.g. :func:`remove_path_edges`) keep ``outer``
    only as a marker of the original boundary labels.
    """

    n: int
    edges: frozenset
    rotation: tuple
    outer: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    # -- basic queries -------------------------------------------------
    def neighbors(self, v: int) -> tuple:
        return self.rotation[v]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, a: int, b: int) -> bool:
        return _edge(a, b) in self.edges

    @property
    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def outer_set(self) -> frozenset:
        return frozenset(self.outer)

    @property
    def interior(self) -> list[int]:
        on_outer = self.outer_set
        return [v for v in range(self.n) if v not in on_outer]

    def outer_edges(self) -> set:
        k = len(self.outer)
        return {_edge(self.outer[i], self.outer[(i + 1) % k]) for i in range(k)}

    def label(self, v: int):
        return v if self.labels is None else self.labels[v]

    # -- faces ---------------------------------------------------------
    def faces(self) -> list[tuple]:
        """All faces as vertex walks, face on the left."""
        pos = [{w: i for i, w in enumerate(rot)} for rot in self.rotation]
        seen = set()
        out = []
        for u in range(self.n):
            for v in self.rotation[u]:
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    rot = self.rotation[b]
                    c = rot[(pos[b][a] - 1) % len(rot)]
                    a, b = b, c
                out.append(tuple(walk))
        return out

    def outer_face_index(self, faces: Sequence[tuple]) -> Optional[int]:
        target = tuple(reversed(self.outer))
        for i, f in enumerate(faces):
            if _same_cyclic(f, target):
                return i
        return None

    def inner_faces(self) -> list[tuple]:
        fs = self.faces()
        i = self.outer_face_index(fs)
        return [f for j, f in enumerate(fs) if j != i]

    # -- derived graphs ------------------------------------------------
    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "PlaneGraph":
        gone = {_edge(a, b) for a, b in removed}
        rot = tuple(
            tuple(w for w in self.rotation[v] if _edge(v, w) not in gone)
            for v in range(self.n)
        )
        return PlaneGraph(self.n, self.edges - gone, rot, self.outer, self.labels)

    def without_vertices(self, removed: Iterable[int]) -> "PlaneGraph":
        """Drop all edges at ``removed``; the vertices stay, isolated."""
        gone = set(removed)
        return self.without_edges(e for e in self.edges if e[0] in gone or e[1] in gone)

    def to_text(self) -> str:
        from .io import format_graph

        return format_graph(self)


def _same_cyclic(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = list(a).index(b[0])
    except ValueError:
        return False
    return all(a[(i + j) % len(a)] == b[j] for j in range(len(b)))


def _components(n: int, edges) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in range(n)})


def build_plane_graph(n, edges, rotation, outer, labels=None) -> PlaneGraph:
    """Validate the pieces of an embedding and assemble a :class:`PlaneGraph`.

    ``edges`` may be ``None``, in which case the edge set is read off the
    rotation system.
    """
    if n < 1:
        raise NonSimple("graph needs at least one vertex")
    if len(rotation) != n:
        raise RotationMismatch(f"rotation has {len(rotation)} entries for {n} vertices")
    for v, rot in enumerate(rotation):
        for w in rot:
            if not 0 <= w < n:
                raise RotationMismatch(f"vertex {w} in rotation of {v} out of range")
    if edges is None:
        edges = [(v, w) for v, rot in enumerate(rotation) for w in rot if v < w]
    edge_set = set()
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise NonSimple(f"edge ({a},{b}) out of range")
        if a == b:
            raise NonSimple(f"loop at vertex {a}")
        e = _edge(a, b)
        if e in edge_set:
            raise NonSimple(f"repeated edge {e}")
        edge_set.add(e)

    rot = tuple(tuple(r) for r in rotation)
    for v, r in enumerate(rot):
        if len(set(r)) != len(r):
            raise RotationMismatch(f"rotation of {v} repeats a neighbour")
        if v in r:
            raise NonSimple(f"loop at vertex {v}")
        nbrs = {w for e in edge_set if v in e for w in e if w != v}
        if set(r) != nbrs:
            raise RotationMismatch(f"rotation of {v} does not match its incident edges")

    outer = tuple(outer)
    k = len(outer)
    if k < 3 or len(set(outer)) != k or any(not 0 <= v < n for v in outer):
        raise OuterNotACycle("outer cycle needs at least 3 distinct in-range vertices")
    for i in range(k):
        if _edge(outer[i], outer[(i + 1) % k]) not in edge_set:
            raise OuterNotACycle(f"outer cycle uses missing edge {outer[i]}-{outer[(i + 1) % k]}")

    g = PlaneGraph(n, frozenset(edge_set), rot, outer, None if labels is None else tuple(labels))
    if _components(n, edge_set) != 1:
        raise EmbeddingInconsistent("graph is not connected")
    faces = g.faces()
    if n - len(edge_set) + len(faces) != 2:
        raise EmbeddingInconsistent("rotation system is not planar (Euler check failed)")
    if g.outer_face_index(faces) is None:
        raise EmbeddingInconsistent("outer cycle does not bound a face of the embedding")
    return g


def from_faces(n, inner_faces, outer, labels=None) -> PlaneGraph:
    """Build a plane graph from its counter-clockwise inner faces and outer cycle."""
    walks = [tuple(f) for f in inner_faces] + [tuple(reversed(outer))]
    succ = [dict() for _ in range(n)]
    edges = set()
    for f in walks:
        m = len(f)
        for i in range(m):
            u, v, w = f[i - 1], f[i], f[(i + 1) % m]
            if w in succ[v]:
                raise EmbeddingInconsistent(f"faces overlap at vertex {v}")
            succ[v][w] = u
            edges.add(_edge(v, w))
    rotation = []
    for v in range(n):
        s = succ[v]
        if not s:
            rotation.append(())
            continue
        start = min(s)
        order = [start]
        nxt = s.get(start)
        while nxt is not None and nxt != start:
            order.append(nxt)
            nxt = s.get(nxt)
        if nxt is None or len(order) != len(s):
            raise EmbeddingInconsistent(f"faces around vertex {v} do not close up")
        rotation.append(tuple(order))
    return build_plane_graph(n, sorted(edges), rotation, outer, labels)


# ---------------------------------------------------------------------------
# structure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    is_near_triangulation: bool
    chord_list: tuple
    separating_triangles: tuple
    separating_4cycles: tuple
    bad_faces: tuple = ()


def chords(g: PlaneGraph) -> list[tuple[int, int]]:
    on_outer = g.outer_set
    boundary = g.outer_edges()
    return [e for e in g.edge_list if e[0] in on_outer and e[1] in on_outer and e not in boundary]


def validate_near_triangulation(g: PlaneGraph) -> StructureReport:
    bad = tuple(f for f in g.inner_faces() if len(f) != 3)
    return StructureReport(
        is_near_triangulation=not bad,
        chord_list=tuple(chords(g)),
        separating_triangles=tuple(separating_cycles(g, 3)),
        separating_4cycles=tuple(separating_cycles(g, 4)),
        bad_faces=bad,
    )


def is_near_triangulation(g: PlaneGraph) -> bool:
    return all(len(f) == 3 for f in g.inner_faces())


def _canonical_cycle(cyc: Sequence[int]) -> tuple:
    m = len(cyc)
    i = min(range(m), key=lambda j: cyc[j])
    fwd = tuple(cyc[(i + j) % m] for j in range(m))
    bwd = tuple(cyc[(i - j) % m] for j in range(m))
    return min(fwd, bwd)


def cycles_of_length(g: PlaneGraph, length: int) -> list[tuple]:
    """All simple cycles with ``length`` vertices, each listed once."""
    if length not in (3, 4):
        raise UnsupportedLength(f"cycle length {length} not supported (use 3 or 4)")
    found = set()
    adj = [set(r) for r in g.rotation]
    if length == 3:
        for a, b in g.edges:
            for c in adj[a] & adj[b]:
                found.add(_canonical_cycle((a, b, c)))
    else:
        for a, c in combinations(range(g.n), 2):
            common = sorted(adj[a] & adj[c])
            for b, d in combinations(common, 2):
                found.add(_canonical_cycle((a, b, c, d)))
    return sorted(found)


def cycle_sides(g: PlaneGraph, cycle: Sequence[int]) -> tuple[set, set]:
    """Vertices strictly inside and strictly outside a cycle of ``g``.

    "Outside" is the side holding the outer face.
    """
    faces = g.faces()
    face_of = {}
    for i, f in enumerate(faces):
        m = len(f)
        for j in range(m):
            face_of[(f[j], f[(j + 1) % m])] = i
    m = len(cycle)
    cyc_edges = {_edge(cycle[j], cycle[(j + 1) % m]) for j in range(m)}

    def flood(start):
        region = {start}
        stack = [start]
        while stack:
            f = faces[stack.pop()]
            for j in range(len(f)):
                a, b = f[j], f[(j + 1) % len(f)]
                if _edge(a, b) in cyc_edges:
                    continue
                other = face_of[(b, a)]
                if other not in region:
                    region.add(other)
                    stack.append(other)
        return region

    left = flood(face_of[(cycle[0], cycle[1])])
    right = flood(face_of[(cycle[1], cycle[0])])
    outer_idx = g.outer_face_index(faces)
    if outer_idx in left:
        left, right = right, left
    on_cycle = set(cycle)
    inside = {v for i in left for v in faces[i]} - on_cycle
    outside = {v for i in right for v in faces[i]} - on_cycle
    return inside, outside


def separating_cycles(g: PlaneGraph, length: int) -> list[tuple]:
    out = []
    for cyc in cycles_of_length(g, length):
        inside, outside = cycle_sides(g, cyc)
        if inside and outside:
            out.append(cyc)
    return out


# ---------------------------------------------------------------------------
# surgery
# ---------------------------------------------------------------------------

def principal_paths(g: PlaneGraph) -> list[PrincipalPath]:
    """Every ``(v_k, v_1, v_2)`` triple of consecutive outer vertices."""
    k = len(g.outer)
    return [PrincipalPath(g.outer[i - 1], g.outer[i], g.outer[(i + 1) % k]) for i in range(k)]


def check_principal_path(g: PlaneGraph, p: PrincipalPath) -> None:
    k = len(g.outer)
    try:
        i = g.outer.index(p.v1)
    except ValueError:
        raise OuterNotACycle(f"v1={p.v1} is not on the outer cycle") from None
    if g.outer[i - 1] != p.vk or g.outer[(i + 1) % k] != p.v2:
        raise OuterNotACycle(f"{p.vertices} is not a counter-clockwise outer path")


def remove_path_edges(g: PlaneGraph, p: PrincipalPath) -> PlaneGraph:
    for a, b in p.edges:
        if not g.has_edge(a, b):
            raise MissingPathEdge(f"path edge {a}-{b} not present")
    return g.without_edges(p.edges)


def split_along_chord(g: PlaneGraph, chord: tuple[int, int]) -> tuple[PlaneGraph, PlaneGraph]:
    """Cut a near-triangulation along a chord.

    The first part is bounded by the counter-clockwise outer arc from
    ``chord[0]`` to ``chord[1]``; the second by the rest. Both keep the chord.
    Vertex ``i`` of a part corresponds to ``part.labels[i]`` in ``g``.
    """
    a, b = chord
    if not g.has_edge(a, b) or a not in g.outer_set or b not in g.outer_set:
        raise NotAChord(f"{a}-{b} is not an edge between outer vertices")
    if _edge(a, b) in g.outer_edges():
        raise NotAChord(f"{a}-{b} is an outer edge")
    return _side(g, a, b), _side(g, b, a)


def _side(g: PlaneGraph, a: int, b: int) -> PlaneGraph:
    k = len(g.outer)
    i = g.outer.index(a)
    arc = [a]
    while arc[-1] != b:
        i = (i + 1) % k
        arc.append(g.outer[i])

    faces = g.faces()
    face_of = {}
    for fi, f in enumerate(faces):
        for j in range(len(f)):
            face_of[(f[j], f[(j + 1) % len(f)])] = fi
    outer_idx = g.outer_face_index(faces)
    chord = _edge(a, b)
    start = face_of[(b, a)]
    region = {start}
    stack = [start]
    while stack:
        f = faces[stack.pop()]
        for j in range(len(f)):
            x, y = f[j], f[(j + 1) % len(f)]
            if _edge(x, y) == chord:
                continue
            other = face_of[(y, x)]
            if other != outer_idx and other not in region:
                region.add(other)
                stack.append(other)

    verts = {v for fi in region for v in faces[fi]}
    interior = sorted(verts - set(arc))
    order = arc + interior
    new = {v: j for j, v in enumerate(order)}
    tri = [tuple(new[v] for v in faces[fi]) for fi in sorted(region)]
    labels = tuple(g.label(v) for v in order)
    return from_faces(len(order), tri, tuple(range(len(arc))), labels)
