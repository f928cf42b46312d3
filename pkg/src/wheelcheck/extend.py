"""Extendability checkers built on capped graph polynomials.

The common query: delete some edges, cap every variable (0 on the vertices
that must stay free, 2 on the remaining boundary, 4 inside) and ask for any
nonzero term in the capped region.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import SimpleNamespace
from typing import Mapping, Optional, Sequence

from .errors import BadParameter, PreconditionViolated, TheoremViolation
from .graph import (
    PlaneGraph,
    PrincipalPath,
    _edge,
    check_principal_path,
    chords,
    is_near_triangulation,
    remove_path_edges,
)
from .poly import SparsePolynomial, find_monomial, graph_polynomial
from .wheels import WheelSpec, WheelWitness, build_multiple_wheel, find_generalized_wheel

OUTER_CAP = 2
INNER_CAP = 4


@dataclass(frozen=True)
class Witness:
    """A nonzero term found in a capped expansion."""

    exponents: tuple
    coefficient: int

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents), "coefficient": self.coefficient}


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "extendable" or "blocked"
    path: PrincipalPath
    witness: Optional[Witness] = None
    wheel: Optional[WheelWitness] = None
    both_checks_ran: bool = False
    polynomial: Optional[SparsePolynomial] = field(default=None, compare=False, repr=False)

    @property
    def extendable(self) -> bool:
        return self.outcome == "extendable"

    def to_json(self, graph: Optional[str] = None) -> dict:
        return {
            "graph": graph,
            "path": list(self.path.vertices),
            "outcome": self.outcome,
            "witness": self.witness.to_json() if self.witness else None,
            "wheel": self.wheel.to_json() if self.wheel else None,
        }


def theorem_caps(g: PlaneGraph, zero: Sequence[int], outer: int = OUTER_CAP, inner: int = INNER_CAP,
                 extra: Optional[Mapping[int, int]] = None) -> tuple:
    """Cap vector: ``0`` on ``zero``, ``outer`` on the rest of the boundary, ``inner`` elsewhere."""
    on_outer = g.outer_set
    caps = [outer if v in on_outer else inner for v in range(g.n)]
    for v, c in (extra or {}).items():
        caps[v] = c
    for v in zero:
        caps[v] = 0
    return tuple(caps)


def _search(h, caps, exact: Optional[Mapping[int, int]] = None):
    poly = graph_polynomial(h, caps=caps)
    if exact:
        for e, c in sorted(poly.items()):
            if all(e[v] == x for v, x in exact.items()):
                return Witness(e, c), poly
        return None, poly
    hit = find_monomial(poly)
    return (Witness(*hit) if hit else None), poly


def _require_near_triangulation(g: PlaneGraph) -> None:
    if not is_near_triangulation(g):
        raise PreconditionViolated("graph is not a near-triangulation")


def check_3path_extendable(
    g: PlaneGraph, p: PrincipalPath, caps=None, cross_check: bool = True
) -> Verdict:
    """Look for a term vanishing on the path in ``P(G - path edges)``; otherwise report the wheel.

    With the default caps and ``cross_check`` the wheel recognizer always
    runs too, and a disagreement between the two raises ``TheoremViolation``.
    Custom ``caps`` disable that consistency check.
    """
    check_principal_path(g, p)
    _require_near_triangulation(g)
    default = caps is None
    if default:
        caps = theorem_caps(g, p.vertices)
    witness, poly = _search(remove_path_edges(g, p), caps)
    ran = default and cross_check
    wheel = find_generalized_wheel(g, p) if (ran or witness is None) else None
    if ran and (witness is None) == (wheel is None):
        what = "both a witness term and a generalized wheel" if witness else "neither a witness nor a wheel"
        raise TheoremViolation(f"path {p.vertices}: found {what}", graph=g, path=p, polynomial=poly)
    if witness is not None:
        return Verdict("extendable", p, witness=witness, both_checks_ran=ran, polynomial=poly)
    return Verdict("blocked", p, wheel=wheel, both_checks_ran=ran, polynomial=poly)


def check_2path_zhu(g: PlaneGraph, e: tuple) -> Witness:
    """Term of ``P(G - e)`` with both ends of ``e`` at exponent 0, boundary <= 2, interior <= 4."""
    x, y = e
    if _edge(x, y) not in g.outer_edges():
        raise PreconditionViolated(f"{e} is not an edge of the outer cycle")
    _require_near_triangulation(g)
    h = g.without_edges([e])
    witness, poly = _search(h, theorem_caps(g, (x, y)))
    if witness is None:
        raise TheoremViolation(f"no admissible term after deleting {e}", graph=g, polynomial=poly)
    return witness


def short_cycle_preconditions(g: PlaneGraph) -> None:
    """Raise ``PreconditionViolated`` naming the first failed hypothesis."""
    k = len(g.outer)
    if k not in (3, 4, 5):
        raise PreconditionViolated(f"outer cycle has length {k}, need 3, 4 or 5")
    _require_near_triangulation(g)
    ch = chords(g)
    if ch:
        raise PreconditionViolated(f"outer cycle has chords {ch}")
    if k == 5:
        outer = g.outer_set
        for v in g.interior:
            if outer <= set(g.neighbors(v)):
                raise PreconditionViolated(f"interior vertex {v} is adjacent to the whole outer cycle")


def check_short_outer_cycle(g: PlaneGraph) -> Witness:
    """Term of ``P(G - E(C))`` with every boundary exponent 0 and interior <= 4."""
    short_cycle_preconditions(g)
    h = g.without_edges(g.outer_edges())
    witness, poly = _search(h, theorem_caps(g, g.outer))
    if witness is None:
        raise TheoremViolation("no admissible term with a free outer cycle", graph=g, polynomial=poly)
    return witness


def cycle_polynomial(g: PlaneGraph) -> SparsePolynomial:
    """Graph polynomial of the outer cycle alone, in the variables of ``g``."""
    return graph_polynomial(SimpleNamespace(n=g.n, edges=frozenset(g.outer_edges())))


def check_small_cycle_lift(g: PlaneGraph, boundary_term: Sequence[int]) -> Witness:
    """Extend a term of the cycle polynomial to a term of ``P(G)`` with interior <= 4.

    ``boundary_term`` lists exponents for ``g.outer`` in order.
    """
    short_cycle_preconditions(g)
    if len(boundary_term) != len(g.outer):
        raise BadParameter("boundary_term needs one exponent per outer vertex")
    full = [0] * g.n
    for v, x in zip(g.outer, boundary_term):
        full[v] = x
    if cycle_polynomial(g).coefficient(full) == 0:
        raise PreconditionViolated(f"{tuple(boundary_term)} is not a term of the cycle polynomial")
    exact = dict(zip(g.outer, boundary_term))
    caps = [INNER_CAP] * g.n
    for v, x in exact.items():
        caps[v] = x
    witness, poly = _search(g, tuple(caps), exact=exact)
    if witness is None:
        raise TheoremViolation(f"boundary term {tuple(boundary_term)} does not lift", graph=g, polynomial=poly)
    return witness


def check_wheel_minus_edge(spec, e: tuple) -> Witness:
    """Delete one non-boundary edge from a generalized wheel and look for the path-free term."""
    if isinstance(spec, str):
        spec = WheelSpec.parse(spec)
    if not spec.is_generalized:
        raise PreconditionViolated(f"{spec} has an even wheel component")
    if any(c.kind == "O" and c.size == 3 for c in spec.components):
        raise PreconditionViolated(f"{spec} has a three-vertex odd wheel component")
    if spec.boundary_len <= 3:
        raise PreconditionViolated("outer cycle must be longer than 3")
    w = build_multiple_wheel(spec)
    g, p = w.graph, w.path
    a, b = e
    if not g.has_edge(a, b):
        raise PreconditionViolated(f"{e} is not an edge of {spec}")
    if _edge(a, b) in g.outer_edges():
        raise PreconditionViolated(f"{e} lies on the outer cycle")
    h = remove_path_edges(g, p).without_edges([e])
    witness, poly = _search(h, theorem_caps(g, p.vertices))
    if witness is None:
        raise TheoremViolation(f"{spec} minus {e} has no admissible term", graph=g, path=p, polynomial=poly)
    return witness


def u_special_monomials(g: PlaneGraph, p: PrincipalPath, u: int, u_cap: int = 3) -> list:
    """Terms of ``P(G - path edges)``: path 0, boundary <= 2, ``u`` <= 3, other interior <= 4.

    ``u`` may sit on the boundary or inside; it only has to avoid the path.
    """
    check_principal_path(g, p)
    if u in p.vertices:
        raise BadParameter(f"{u} lies on the principal path")
    caps = theorem_caps(g, p.vertices, extra={u: u_cap})
    poly = graph_polynomial(remove_path_edges(g, p), caps=caps)
    return poly.sorted_terms()
