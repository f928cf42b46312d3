"""Text formats: ``ptri`` graph records, list assignments, DOT export.

A ``ptri`` record looks like::

    ptri 4
    outer 0 1 2
    rot 0 1 3 2
    rot 1 2 3 0
    rot 2 0 3 1
    rot 3 0 1 2

Rotations are counter-clockwise, edges are implied, ``#`` starts a comment.
Several records may follow each other in one file.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterator, Optional

from .errors import GraphError
from .graph import PlaneGraph, PrincipalPath, build_plane_graph


def format_graph(g: PlaneGraph, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"ptri {g.n}")
    lines.append("outer " + " ".join(map(str, g.outer)))
    for v in range(g.n):
        lines.append(" ".join(["rot", str(v), *map(str, g.rotation[v])]).rstrip())
    return "\n".join(lines) + "\n"


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graphs(text: str) -> Iterator[PlaneGraph]:
    n = None
    outer = None
    rot: dict = {}

    def finish():
        if n is None:
            return None
        if outer is None:
            raise GraphError("record without an 'outer' line")
        missing = [v for v in range(n) if v not in rot]
        if missing:
            raise GraphError(f"record lacks 'rot' lines for vertices {missing}")
        return build_plane_graph(n, None, [rot[v] for v in range(n)], outer)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        tok = line.split()
        head, args = tok[0], tok[1:]
        try:
            nums = [int(t) for t in args]
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer token in {raw!r}") from None
        if head == "ptri":
            g = finish()
            if g is not None:
                yield g
            if len(nums) != 1:
                raise GraphError(f"line {lineno}: header must be 'ptri <n>'")
            n, outer, rot = nums[0], None, {}
        elif n is None:
            raise GraphError(f"line {lineno}: data before 'ptri' header")
        elif head == "outer":
            outer = nums
        elif head == "rot":
            if not nums:
                raise GraphError(f"line {lineno}: 'rot' needs a vertex")
            if nums[0] in rot:
                raise GraphError(f"line {lineno}: duplicate rotation for {nums[0]}")
            rot[nums[0]] = nums[1:]
        else:
            raise GraphError(f"line {lineno}: unknown record {head!r}")
    g = finish()
    if g is not None:
        yield g


def parse_graph(text: str) -> PlaneGraph:
    graphs = list(parse_graphs(text))
    if len(graphs) != 1:
        raise GraphError(f"expected exactly one graph record, found {len(graphs)}")
    return graphs[0]


def read_graph(path) -> PlaneGraph:
    return parse_graph(Path(path).read_text())


def read_graphs(path) -> list[PlaneGraph]:
    return list(parse_graphs(Path(path).read_text()))


def write_graphs(path, graphs) -> None:
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(format_graph(g))


# -- list assignments ---------------------------------------------------

def parse_lists(text: str) -> dict[int, tuple[int, ...]]:
    lists = {}
    seen_header = False
    for raw in text.splitlines():
        line = _strip(raw)
        if not line:
            continue
        if not seen_header:
            if line != "lists":
                raise ValueError("list file must start with a 'lists' header")
            seen_header = True
            continue
        v, _, rest = line.partition(":")
        lists[int(v)] = tuple(int(c) for c in rest.split())
    if not seen_header:
        raise ValueError("empty list file")
    return lists


def format_lists(lists) -> str:
    out = ["lists"]
    for v in sorted(lists):
        out.append(f"{v}: " + " ".join(map(str, lists[v])))
    return "\n".join(out) + "\n"


# -- DOT -----------------------------------------------------------------

def to_dot(g: PlaneGraph, path: Optional[PrincipalPath] = None, name: str = "G") -> str:
    """Emit a DOT description: outer cycle laid out as a circle hint, principal path in bold."""
    import math

    k = len(g.outer)
    marked = set(path.edges) if path is not None else set()
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for i, v in enumerate(g.outer):
        ang = 2 * math.pi * i / k
        lines.append(
            f'  {v} [label="{g.label(v)}", pos="{3 * math.cos(ang):.3f},{3 * math.sin(ang):.3f}!"];'
        )
    for v in g.interior:
        lines.append(f'  {v} [label="{g.label(v)}", style=filled, fillcolor=lightgray];')
    for a, b in g.edge_list:
        attrs = ' [penwidth=3, color=red]' if (a, b) in marked else ""
        lines.append(f"  {a} -- {b}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
