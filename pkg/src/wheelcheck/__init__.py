"""Polynomial 3-path extendability of plane near-triangulations."""

__version__ = "0.1.0"

from .alon_tarsi import at_number, coefficient_by_orientations, orientation_expansion
from .coloring import cn_implication_check, colour_relation, list_colorable
from .enumeration import canonical_code, enumerate_near_triangulations
from .errors import PreconditionViolated, TheoremViolation, WheelcheckError
from .extend import (
    Verdict,
    check_2path_zhu,
    check_3path_extendable,
    check_short_outer_cycle,
    check_small_cycle_lift,
    check_wheel_minus_edge,
    u_special_monomials,
)
from .graph import PlaneGraph, PrincipalPath, build_plane_graph, from_faces, principal_paths
from .io import parse_graph, read_graph
from .lemmas import verify_lemma
from .poly import SparsePolynomial, find_monomial, graph_polynomial
from .wheels import (
    WheelSpec,
    build_broken_wheel,
    build_multiple_wheel,
    build_ordinary_wheel,
    build_split_hub_graph,
    find_generalized_wheel,
)

__all__ = [
    "PlaneGraph", "PrincipalPath", "build_plane_graph", "from_faces", "principal_paths",
    "parse_graph", "read_graph", "canonical_code", "enumerate_near_triangulations",
    "SparsePolynomial", "graph_polynomial", "find_monomial",
    "at_number", "coefficient_by_orientations", "orientation_expansion",
    "WheelSpec", "build_ordinary_wheel", "build_broken_wheel", "build_multiple_wheel",
    "build_split_hub_graph", "find_generalized_wheel",
    "Verdict", "check_3path_extendable", "check_2path_zhu", "check_short_outer_cycle",
    "check_small_cycle_lift", "check_wheel_minus_edge", "u_special_monomials", "verify_lemma",
    "list_colorable", "cn_implication_check", "colour_relation",
    "WheelcheckError", "PreconditionViolated", "TheoremViolation",
]
