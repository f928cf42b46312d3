"""Command-line front end.

Exit codes: 0 success, 1 bad input or unmet hypothesis, 2 a proven
statement failed on the given instance (the instance is dumped to stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from multiprocessing import Pool
from typing import Optional, Sequence

from . import __version__
from .alon_tarsi import at_number
from .coloring import cn_implication_check, list_colorable
from .enumeration import default_budget, enumerate_near_triangulations
from .errors import TheoremViolation, WheelcheckError
from .extend import check_2path_zhu, check_3path_extendable, check_short_outer_cycle, theorem_caps
from .graph import PrincipalPath, principal_paths, remove_path_edges
from .io import format_graph, parse_lists, read_graph, to_dot
from .lemmas import LEMMAS, parse_range, verify_lemma
from .poly import graph_polynomial
from .wheels import build_multiple_wheel


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(args, payload, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _dump_violation(exc: TheoremViolation) -> None:
    print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
    if exc.graph is not None:
        print(format_graph(exc.graph), file=sys.stderr, end="")
    if exc.path is not None:
        print(f"path {' '.join(map(str, exc.path.vertices))}", file=sys.stderr)
    if exc.polynomial is not None:
        print("poly", file=sys.stderr)
        print(exc.polynomial.dump(), file=sys.stderr, end="")


def _path(args, g) -> Optional[PrincipalPath]:
    return PrincipalPath(*args.path) if args.path else None


def _write_dot(args, g, path=None) -> None:
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(g, path))


# -- verbs -----------------------------------------------------------------

def cmd_check_extend(args) -> int:
    g = read_graph(args.graph)
    paths = [_path(args, g)] if args.path else principal_paths(g)
    _write_dot(args, g, paths[0] if len(paths) == 1 else None)
    verdicts = [check_3path_extendable(g, p) for p in paths]
    payload = [v.to_json(args.graph) for v in verdicts]
    lines = []
    for v in verdicts:
        extra = f"term {v.witness.exponents} coeff {v.witness.coefficient}" if v.witness else f"wheel {v.wheel.spec}"
        lines.append(f"path {' '.join(map(str, v.path.vertices))}: {v.outcome} ({extra})")
    _emit(args, payload[0] if len(payload) == 1 else payload, "\n".join(lines))
    return 0


def cmd_check_2path(args) -> int:
    g = read_graph(args.graph)
    w = check_2path_zhu(g, tuple(args.edge))
    _emit(args, {"graph": args.graph, "edge": args.edge, "witness": w.to_json()},
          f"edge {args.edge[0]} {args.edge[1]}: term {w.exponents} coeff {w.coefficient}")
    return 0


def cmd_short_cycle(args) -> int:
    g = read_graph(args.graph)
    w = check_short_outer_cycle(g)
    _emit(args, {"graph": args.graph, "witness": w.to_json()}, f"term {w.exponents} coeff {w.coefficient}")
    return 0


def cmd_verify_lemma(args) -> int:
    params = parse_range(args.k) if args.k else None
    report = verify_lemma(args.lemma, params)
    _emit(args, report.to_json(), report.to_text())
    return 0 if report.passed else 2


def cmd_gen_wheel(args) -> int:
    w = build_multiple_wheel(args.spec)
    flags = f"generalized={w.is_generalized} broken_overall={w.is_broken_overall}"
    text = format_graph(w.graph, f"wheel {w.spec}; path {w.path.vk} {w.path.v1} {w.path.v2}; {flags}")
    _write_dot(args, w.graph, w.path)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _sweep_one(text: str):
    from .io import parse_graph

    g = parse_graph(text)
    out = []
    for p in principal_paths(g):
        try:
            v = check_3path_extendable(g, p)
            out.append((p.vertices, v.outcome, None))
        except TheoremViolation as exc:
            out.append((p.vertices, "violation", str(exc)))
    return out


def cmd_enumerate(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    graphs = list(enumerate_near_triangulations(args.outer, args.interior, symmetric=not args.labeled, budget=budget))
    texts = [format_graph(g) for g in graphs]
    if not args.check:
        blob = "".join(texts)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(blob)
        else:
            print(blob, end="")
        print(f"# {len(graphs)} graphs", file=sys.stderr)
        return 0
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            results = pool.map(_sweep_one, texts, chunksize=8)
    else:
        results = [_sweep_one(t) for t in texts]
    counts = {"extendable": 0, "blocked": 0, "violation": 0}
    violations = []
    for text, rows in zip(texts, results):
        for path, outcome, msg in rows:
            counts[outcome] += 1
            if msg:
                violations.append({"graph": text, "path": list(path), "message": msg})
    _emit(args, {"graphs": len(graphs), "counts": counts, "violations": violations},
          f"{len(graphs)} graphs, {sum(counts.values())} paths: {counts}")
    for v in violations:
        print(f"THEOREM VIOLATION: {v['message']}", file=sys.stderr)
        print(v["graph"], file=sys.stderr, end="")
    return 2 if violations else 0


def cmd_at_number(args) -> int:
    g = read_graph(args.graph)
    k = at_number(g, limit=args.limit)
    _emit(args, {"graph": args.graph, "at_number": k}, str(k))
    return 0


def cmd_expand(args) -> int:
    g = read_graph(args.graph)
    h = g
    caps = None
    if args.path:
        p = PrincipalPath(*args.path)
        h = remove_path_edges(g, p)
        caps = theorem_caps(g, p.vertices)
    if args.caps:
        caps = args.caps[0] if len(args.caps) == 1 else tuple(args.caps)
    poly = graph_polynomial(h, caps=caps)
    if args.json:
        print(json.dumps({"n": poly.n, "caps": list(poly.caps),
                          "terms": [[c, list(e)] for e, c in poly.sorted_terms()]}, indent=2))
    else:
        print(poly.dump(), end="")
    return 0


def cmd_cn_check(args) -> int:
    g = read_graph(args.graph)
    if args.lists:
        with open(args.lists) as fh:
            lists = parse_lists(fh.read())
        col = list_colorable(g, lists)
        _emit(args, {"colorable": col is not None, "colouring": col}, "colourable" if col else "not colourable")
        return 0
    if not args.term:
        raise WheelcheckError("cn-check needs --term or --lists")
    term = tuple(args.term)
    if graph_polynomial(g, caps=term).coefficient(term) == 0:
        raise WheelcheckError(f"{term} is not a nonzero term of P(G)")
    rep = cn_implication_check(g, term, trials=args.trials, exhaustive=args.exhaustive, seed=args.seed)
    _emit(args, rep.to_json(), f"{rep.checked} assignments checked, {len(rep.failures)} failures")
    return 0 if rep.ok else 2


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="wheelcheck", description="Polynomial 3-path extendability checks for plane near-triangulations.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget", type=int, default=None, help="instance budget (env WHEELCHECK_BUDGET)")
    common.add_argument("--dot", metavar="FILE", help="also write a DOT drawing")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.set_defaults(fn=fn)
        return p

    p = verb("check-extend", cmd_check_extend, "3-path extendability verdict (all principal paths if --path is omitted)")
    p.add_argument("--graph", required=True)
    p.add_argument("--path", type=int, nargs=3, metavar=("VK", "V1", "V2"))

    p = verb("check-2path", cmd_check_2path, "admissible term after deleting one boundary edge")
    p.add_argument("--graph", required=True)
    p.add_argument("--edge", type=int, nargs=2, required=True, metavar=("X", "Y"))

    p = verb("short-cycle", cmd_short_cycle, "free outer cycle of length 3, 4 or 5")
    p.add_argument("--graph", required=True)

    p = verb("verify-lemma", cmd_verify_lemma, f"coefficient lemma suite: {', '.join(LEMMAS)}")
    p.add_argument("lemma")
    p.add_argument("--k", help="parameter range, e.g. 1..5 or 2,4")

    p = verb("gen-wheel", cmd_gen_wheel, "build a wheel from a spec such as B6+O5")
    p.add_argument("spec")
    p.add_argument("--out")

    p = verb("enumerate", cmd_enumerate, "near-triangulations with given boundary and interior size")
    p.add_argument("--outer", type=int, required=True)
    p.add_argument("--interior", type=int, required=True)
    p.add_argument("--labeled", action="store_true", help="keep boundary rotations/reflections apart")
    p.add_argument("--check", action="store_true", help="run check-extend on every principal path")
    p.add_argument("--out")

    p = verb("at-number", cmd_at_number, "Alon-Tarsi number")
    p.add_argument("--graph", required=True)
    p.add_argument("--limit", type=int, default=40, help="edge limit")

    p = verb("expand", cmd_expand, "capped graph polynomial dump")
    p.add_argument("--graph", required=True)
    p.add_argument("--caps", type=int, nargs="+", help="one cap for all, or one per vertex")
    p.add_argument("--path", type=int, nargs=3, metavar=("VK", "V1", "V2"),
                   help="delete the path edges and use the extendability caps")

    p = verb("cn-check", cmd_cn_check, "list-colour assignments sized by a polynomial term")
    p.add_argument("--graph", required=True)
    p.add_argument("--term", type=int, nargs="+")
    p.add_argument("--lists", help="check a single list-assignment file instead")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--exhaustive", action="store_true")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget is not None:
        import os

        os.environ["WHEELCHECK_BUDGET"] = str(args.budget)
    try:
        return args.fn(args)
    except TheoremViolation as exc:
        _dump_violation(exc)
        return 2
    except (WheelcheckError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())
