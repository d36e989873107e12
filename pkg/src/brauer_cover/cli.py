"""Command-line interface.

Every subcommand prints one JSON document on stdout.  Inputs are file
paths, or the id of a built-in fixture (``fixtures list`` shows them).
Domain errors exit 1 with a JSON ``{"error", "message", "witness"}`` on
stderr; malformed input exits 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import deletions, dot, jsonio
from .brauer import BoundQuiver, BrauerPermutation, validate
from .errors import BrauerCoverError, MalformedInputError
from .fixtures import fixture_ids, get_fixture
from .iso import graph_iso, ribbon_iso
from .smash import check_covering, cross_validate_theorem, smash_brauer, smash_quiver
from .weights import GWeight, is_admissible

_DELETE_OPS = {
    "multiplicity": deletions.delete_multiplicity,
    "loops": deletions.delete_loops,
    "multiedges": deletions.delete_multiple_edges,
    "multiedges-tree": deletions.delete_multiple_edges_tree,
    "cycles": deletions.delete_cycles,
}


def _emit(doc) -> None:
    sys.stdout.write(jsonio.dumps(doc))


def _read_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}", witness=path) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON in {path}: {exc}", witness=path) from None


def _load_brauer(arg: str) -> BrauerPermutation:
    if arg in fixture_ids():
        fix = get_fixture(arg)
        if fix.brauer is None:
            raise MalformedInputError(f"fixture {arg} has no Brauer permutation", witness=arg)
        return fix.brauer
    return jsonio.brauer_from_doc(_read_json(arg))


def _load_quiver(arg: str) -> BoundQuiver:
    if arg in fixture_ids():
        fix = get_fixture(arg)
        if fix.quiver is None:
            raise MalformedInputError(f"fixture {arg} has no quiver", witness=arg)
        return fix.quiver
    return jsonio.quiver_from_doc(_read_json(arg))


def _load_weight(arg: Optional[str], source: str, domain) -> GWeight:
    if arg is None:
        if source in fixture_ids() and get_fixture(source).weight is not None:
            return get_fixture(source).weight
        raise MalformedInputError("--weight is required", witness=source)
    if arg in fixture_ids():
        fix = get_fixture(arg)
        if fix.weight is None:
            raise MalformedInputError(f"fixture {arg} has no weight", witness=arg)
        return fix.weight
    return jsonio.weight_from_doc(_read_json(arg), domain=domain)


def _write(path: Optional[str], text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _render_graph(graph, png: Optional[str], frontier=()) -> None:
    if png:
        from . import figures

        figures.render_graph(graph, png, frontier=frontier)


def _covering_summary(cov) -> dict:
    flags = cov.graph().classify()
    return {
        "half_edges": len(cov.half_edges),
        "vertices": len(cov.cycles),
        "edges": sum(1 for e, f in cov.tau.items() if e < f),
        "multiplicity_trivial": all(v == 1 for v in cov.multiplicity.values()),
        "has_loops": flags.has_loops,
        "has_multiple_edges": flags.has_multiple_edges,
        "complete": cov.complete,
        "frontier": sorted(cov.frontier),
    }


# --------------------------------------------------------------------------- #
# subcommands


def _cmd_validate(args) -> int:
    if args.brauer in fixture_ids():
        _emit({"ok": True, "violations": []})
        return 0
    doc = _read_json(args.brauer)
    sigma, tau, multiplicity = jsonio.raw_brauer_parts(doc)
    violations = validate(sigma, tau, multiplicity)
    _emit({"ok": not violations, "violations": [v.as_doc() for v in violations]})
    return 0 if not violations else 1


def _cmd_graph(args) -> int:
    bp = _load_brauer(args.brauer)
    graph = bp.graph()
    flags = graph.classify()
    _write(args.dot, dot.graph_dot(graph))
    _render_graph(graph, args.png)
    doc = jsonio.graph_to_doc(graph)
    doc["classification"] = {
        "has_loops": flags.has_loops,
        "has_multiple_edges": flags.has_multiple_edges,
        "multiplicity_trivial": flags.multiplicity_trivial,
        "is_connected": flags.is_connected,
        "is_tree": flags.is_tree,
        "cycle_vertices": sorted(flags.cycle_vertices),
    }
    _emit(doc)
    return 0


def _cmd_quiver(args) -> int:
    bp = _load_brauer(args.brauer)
    quiver = bp.bound_quiver()
    _write(args.dot, dot.quiver_dot(quiver))
    _write(args.relations, dot.relations_text(quiver))
    if args.png:
        from . import figures

        figures.render_quiver(quiver, args.png)
    _emit(jsonio.quiver_to_doc(quiver))
    return 0


def _cmd_smash(args) -> int:
    bp = _load_brauer(args.brauer)
    weight = _load_weight(args.weight, args.brauer, bp.half_edges)
    cov = smash_brauer(bp, weight, depth=args.depth)
    _write(args.out, jsonio.dumps(jsonio.covering_to_doc(cov)))
    _write(args.dot, dot.graph_dot(cov.graph(), frontier=cov.frontier))
    _render_graph(cov.graph(), args.png, frontier=cov.frontier)
    _emit(_covering_summary(cov))
    return 0


def _cmd_smash_quiver(args) -> int:
    quiver = _load_quiver(args.quiver)
    weight = _load_weight(args.weight, args.quiver, [a.name for a in quiver.arrows])
    window = None
    if args.window:
        window = [weight.group.parse_word(w.strip()) for w in args.window.split(",")]
    cov = smash_quiver(quiver, weight, window=window)
    _write(args.out, jsonio.dumps(jsonio.covering_quiver_to_doc(cov)))
    _write(args.dot, dot.quiver_dot(cov.quiver, frontier=cov.frontier_vertices))
    _emit(
        {
            "core_vertices": len(cov.core_vertices),
            "arrows": len(cov.quiver.arrows),
            "relations": len(cov.quiver.relations),
            "frontier_vertices": sorted(cov.frontier_vertices),
            "complete": cov.complete,
        }
    )
    return 0


def _cmd_delete(args) -> int:
    bp = _load_brauer(args.brauer)
    plan = _DELETE_OPS[args.kind](bp)
    doc = {"plan": plan.as_doc()}
    if args.apply:
        cov = smash_brauer(bp, plan.weight, depth=args.depth)
        _write(args.out, jsonio.dumps(jsonio.covering_to_doc(cov)))
        _write(args.dot, dot.graph_dot(cov.graph(), frontier=cov.frontier))
        doc["covering"] = jsonio.covering_to_doc(cov)
        doc["summary"] = _covering_summary(cov)
    _emit(doc)
    return 0


def _cmd_check_covering(args) -> int:
    bp = _load_brauer(args.brauer)
    weight = _load_weight(args.weight, args.brauer, bp.half_edges)
    ok, witness = is_admissible(bp, weight)
    if not ok:
        _emit({"admissible": False, "witness": witness})
        return 1
    cov = smash_brauer(bp, weight, depth=args.depth)
    if weight.group.is_finite():
        covering_quiver = smash_quiver(bp.bound_quiver(), weight)
    else:
        layers = sorted(set(cov.layer.values()), key=weight.group.format_word)
        covering_quiver = smash_quiver(bp.bound_quiver(), weight, window=layers)
    report = check_covering(covering_quiver)
    theorem_ok, mismatches = cross_validate_theorem(bp, weight, depth=args.depth)
    _emit(
        {
            "admissible": True,
            "covering": report.as_doc(),
            "cross_validation": {"ok": theorem_ok, "mismatches": mismatches},
        }
    )
    return 0 if report.ok and theorem_ok else 1


def _cmd_iso(args) -> int:
    if args.mode == "ribbon":
        bijection = ribbon_iso(_load_brauer(args.first), _load_brauer(args.second))
    else:
        bijection = graph_iso(_load_brauer(args.first).graph(), _load_brauer(args.second).graph())
    if bijection is None:
        _emit({"isomorphic": False, "mode": args.mode, "message": "not isomorphic"})
        return 1
    _emit({"isomorphic": True, "mode": args.mode, "bijection": bijection})
    return 0


def _cmd_fixtures(args) -> int:
    if args.action == "list":
        _emit([{"id": fid, "description": get_fixture(fid).description} for fid in fixture_ids()])
        return 0
    fix = get_fixture(args.id)
    doc = {"id": fix.id, "description": fix.description, "expected": fix.expected}
    if fix.brauer is not None:
        doc["brauer"] = jsonio.brauer_to_doc(fix.brauer)
    if fix.quiver is not None:
        doc["quiver"] = jsonio.quiver_to_doc(fix.quiver)
    if fix.weight is not None:
        doc["weight"] = jsonio.weight_to_doc(fix.weight)
    _emit(doc)
    return 0


# --------------------------------------------------------------------------- #


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauer-cover",
        description="Galois coverings of Brauer graph algebras via smash products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the Brauer permutation axioms")
    p.add_argument("brauer")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("graph", help="emit the Brauer graph")
    p.add_argument("brauer")
    p.add_argument("--dot")
    p.add_argument("--png")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("quiver", help="emit the bound Brauer quiver")
    p.add_argument("brauer")
    p.add_argument("--dot")
    p.add_argument("--relations")
    p.add_argument("--png")
    p.set_defaults(func=_cmd_quiver)

    p = sub.add_parser("smash", help="build the covering Brauer permutation B_W")
    p.add_argument("brauer")
    p.add_argument("--weight")
    p.add_argument("--depth", type=int)
    p.add_argument("--out")
    p.add_argument("--dot")
    p.add_argument("--png")
    p.set_defaults(func=_cmd_smash)

    p = sub.add_parser("smash-quiver", help="build the covering bound quiver")
    p.add_argument("quiver")
    p.add_argument("--weight")
    p.add_argument("--window", help='comma-separated group words, e.g. "a^-1,1,a"')
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=_cmd_smash_quiver)

    p = sub.add_parser("delete", help="derive a deletion plan (and optionally apply it)")
    p.add_argument("kind", choices=sorted(_DELETE_OPS))
    p.add_argument("brauer")
    p.add_argument("--apply", action="store_true")
    p.add_argument("--depth", type=int)
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=_cmd_delete)

    p = sub.add_parser("check-covering", help="run the covering axioms and the theorem cross-check")
    p.add_argument("brauer")
    p.add_argument("--weight")
    p.add_argument("--depth", type=int)
    p.set_defaults(func=_cmd_check_covering)

    p = sub.add_parser("iso", help="isomorphism of Brauer permutations or their graphs")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--mode", choices=("ribbon", "graph"), default="ribbon")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("fixtures", help="list or show the built-in fixtures")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("id", nargs="?")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "fixtures" and args.action == "show" and not args.id:
        build_parser().error("fixtures show requires an id")
    try:
        return args.func(args)
    except MalformedInputError as exc:
        sys.stderr.write(jsonio.dumps(exc.payload()))
        return 2
    except BrauerCoverError as exc:
        sys.stderr.write(jsonio.dumps(exc.payload()))
        return 1


if __name__ == "__main__":
    sys.exit(main())
