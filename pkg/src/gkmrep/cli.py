"""Command-line interface: generate, betti, character, springer, verify.

Every command writes one JSON document to stdout. Exit codes:
0 success, 1 failed assertion, 2 usage, 3 invalid instance, 4 missing symmetry.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from .actions import (
    ActionError,
    action_on_ordinary,
    character_of_action,
    invariant_dim,
    symmetry_error_message,
    vertex_permutation_character,
)
from .exact import format_rational
from .filtration import Filtration
from .gkm import DEFAULT_MAX_DEGREE, betti, freeness_check
from .graph import (
    MomentGraph,
    SymmetryError,
    bruhat_graph,
    hessenberg_graph,
    schubert_graph,
    validate,
)
from .oracles import kostka
from .report import Report
from .reps import CharacterVector, decompose, format_decomposition, partition_key, sum_characters
from .springer import (
    SpringerInstance,
    compatible_levis,
    fixed_point_orbit_model,
    parametrization_check,
    springer_character,
    springer_via_levi_recursion,
)
from .weyl import Permutation, all_permutations, parse_partition, partitions

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_SYMMETRY = 4

KINDS = ("bruhat", "schubert", "hessenberg")


class UsageError(Exception):
    pass


class InvalidInstance(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so main() owns every exit code
    def error(self, message):
        raise UsageError(message)


# -- output helpers ---------------------------------------------------------


def character_json(chi: CharacterVector) -> dict[str, str]:
    return {partition_key(lam): format_rational(v) for lam, v in chi.as_dict().items()}


def decomposition_json(chi: CharacterVector) -> dict[str, int]:
    return format_decomposition(decompose(chi))


def instance_json(g: MomentGraph) -> dict[str, Any]:
    return {"name": g.name, "nvars": g.nvars, "vertices": len(g.vertices), "edges": len(g.edges)}


def document(command: str, instance: Any, result: Any, reports: Sequence[Report]) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "instance": instance,
        "result": result,
        "reports": [r.to_dict() for r in reports],
        "ok": all(r.ok for r in reports),
    }


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- argument handling ------------------------------------------------------


def max_degree(args) -> int:
    if getattr(args, "max_degree", None) is not None:
        value = args.max_degree
    else:
        env = os.environ.get("GKM_MAX_DEGREE")
        if env is None:
            return DEFAULT_MAX_DEGREE
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"GKM_MAX_DEGREE must be an integer, got {env!r}") from None
    if value < 0:
        raise UsageError("the degree guard must be nonnegative")
    return value


def make_graph(kind: str, n: int | None, w: str | None, h: str | None) -> MomentGraph:
    if n is None:
        raise UsageError(f"{kind} needs --n")
    try:
        if kind == "bruhat":
            return bruhat_graph(n)
        if kind == "schubert":
            if w is None:
                raise UsageError("schubert needs --w, e.g. --w 2,3,1")
            return schubert_graph(n, Permutation.parse(w))
        if h is None:
            raise UsageError("hessenberg needs --h, e.g. --h 2,3,3")
        return hessenberg_graph(n, [int(t) for t in h.split(",") if t.strip()])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def read_json(path: str) -> Any:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except ValueError as exc:
        raise InvalidInstance(f"{path} is not valid JSON: {exc}") from None


def checked_graph(g: MomentGraph) -> MomentGraph:
    report = validate(g)
    if not report.ok:
        lines = "; ".join(str(v) for v in report.violations)
        raise InvalidInstance(f"invalid moment graph: {lines}")
    return g


def load_graph(args) -> MomentGraph:
    if args.graph is not None:
        if args.kind is not None:
            raise UsageError("give either --graph or --kind, not both")
        try:
            g = MomentGraph.from_dict(read_json(args.graph))
        except ValueError as exc:
            raise InvalidInstance(str(exc)) from None
    elif args.kind is not None:
        g = make_graph(args.kind, args.n, args.w, args.h)
    else:
        raise UsageError("give a graph file (--graph FILE) or a family (--kind ...)")
    return checked_graph(g)


def _add_graph_args(p: argparse.ArgumentParser):
    p.add_argument("--graph", metavar="FILE", help="graph JSON written by 'generate'")
    p.add_argument("--kind", choices=KINDS, help="build a standard graph instead of reading one")
    p.add_argument("--n", type=int)
    p.add_argument("--w", help="Schubert element in one-line notation, e.g. 2,3,1")
    p.add_argument("--h", help="Hessenberg function, e.g. 2,3,3")
    p.add_argument("--max-degree", type=int, help=f"degree guard (default $GKM_MAX_DEGREE or {DEFAULT_MAX_DEGREE})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gkmrep", description="GKM cohomology of moment graphs and Weyl group actions")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="write the moment graph of a standard family")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w")
    p.add_argument("--h")
    p.add_argument("-o", "--output", metavar="FILE")

    p = sub.add_parser("betti", help="Betti numbers and the freeness check")
    _add_graph_args(p)

    p = sub.add_parser("character", help="character of the left or right action")
    _add_graph_args(p)
    p.add_argument("--action", choices=("left", "right"), required=True)
    p.add_argument("--degree", default="total", help="ordinary degree i, or 'total'")

    p = sub.add_parser("springer", help="Springer character for a Jordan type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")

    p = sub.add_parser("verify", help="run the bundled verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--graph", metavar="FILE", help="check a custom graph instead of a suite")
    p.add_argument("--filtration", metavar="FILE", help="check a stored filtration")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--text", action="store_true", help="human-readable summary instead of JSON")
    return parser


# -- commands ---------------------------------------------------------------


def cmd_generate(args) -> tuple[dict[str, Any], int]:
    g = make_graph(args.kind, args.n, args.w, args.h)
    doc = {"schema_version": SCHEMA_VERSION, **g.to_dict()}
    return doc, EXIT_OK


def betti_result(g: MomentGraph, max_i: int) -> tuple[dict[str, Any], Report]:
    bv = betti(g, max_i)
    rep = Report("betti")
    rep.check("Betti numbers account for every vertex", bv.complete, f"{sum(bv.b)} of {bv.vertices}")
    rows = []
    for i, dim, pred in freeness_check(g, bv):
        rows.append({"degree": i, "dim": dim, "predicted": pred})
        rep.check(f"degree {i} piece is free of the predicted rank", dim == pred, f"{dim} vs {pred}")
    census = g.in_degree_census()
    rep.observe("in-degree census equals Betti", census == bv.b, str(census))
    result = {
        "betti": list(bv.b),
        "complete": bv.complete,
        "vertices": bv.vertices,
        "freeness": rows,
        "in_degree_census": list(census),
    }
    return result, rep


def cmd_betti(args) -> tuple[dict[str, Any], int]:
    g = load_graph(args)
    result, rep = betti_result(g, max_degree(args))
    doc = document("betti", instance_json(g), result, [rep])
    return doc, EXIT_OK if rep.ok else EXIT_ASSERTION


def _bruhat_host(g: MomentGraph) -> MomentGraph | None:
    """bruhat_graph(n) when g is a spanning subgraph of it (a Hessenberg-type graph)."""
    n = g.nvars
    if not g.permutation_vertices() or len(g.vertices) != len(all_permutations(n)):
        return None
    big = bruhat_graph(n)
    lookup = big.edge_lookup
    for e in g.edges:
        key = frozenset((big.index[g.vertices[e.u]], big.index[g.vertices[e.v]]))
        if key not in lookup or not any(w == e.weight or w == -e.weight for w in lookup[key]):
            return None
    return big


def _degree_entry(g, kind, i, rep: Report) -> tuple[dict[str, Any], CharacterVector]:
    am = action_on_ordinary(g, kind, i)
    chi = character_of_action(am)
    entry: dict[str, Any] = {
        "degree": i,
        "dim": am.dim,
        "character": character_json(chi),
        "decomposition": decomposition_json(chi),
        "invariant_dim": invariant_dim(am),
    }
    if kind == "left":
        host = _bruhat_host(g)
        if host is not None:
            from .verify import restricted_ordinary_image_dim

            img = restricted_ordinary_image_dim(host, g, i)
            entry["flag_variety_image_dim"] = img
            rep.check(
                f"degree {i}: invariants = image of the flag variety",
                entry["invariant_dim"] == img,
                f"{entry['invariant_dim']} vs {img}",
            )
    return entry, chi


def cmd_character(args) -> tuple[dict[str, Any], int]:
    g = load_graph(args)
    kind = args.action
    if not g.permutation_vertices():
        raise SymmetryError("vertices are not labelled by permutations, so S_n cannot act")
    problem = symmetry_error_message(g, kind)
    if problem is not None:
        raise SymmetryError(f"no {kind} action of S_{g.nvars}: {problem}")
    max_i = max_degree(args)
    rep = Report(f"{kind} character")
    if args.degree == "total":
        bv = betti(g, max_i)
        rep.check("Betti numbers account for every vertex", bv.complete)
        entries, chars = [], []
        for i in range(len(bv.b)):
            entry, chi = _degree_entry(g, kind, i, rep)
            entries.append(entry)
            chars.append(chi)
        total = sum_characters(chars, g.nvars)
        result: dict[str, Any] = {
            "degrees": entries,
            "total": {"character": character_json(total), "decomposition": decomposition_json(total)},
        }
        if kind == "right":
            perm = vertex_permutation_character(g, kind)
            rep.check("total equals the vertex permutation character", total == perm, f"{total} vs {perm}")
    else:
        try:
            i = int(args.degree)
        except ValueError:
            raise UsageError(f"--degree takes an integer or 'total', got {args.degree!r}") from None
        if not 0 <= i <= max_i:
            raise UsageError(f"--degree must lie in 0..{max_i}")
        result, _ = _degree_entry(g, kind, i, rep)
    doc = document("character", {**instance_json(g), "action": kind, "degree": args.degree}, result, [rep])
    return doc, EXIT_OK if rep.ok else EXIT_ASSERTION


def cmd_springer(args) -> tuple[dict[str, Any], int]:
    try:
        inst = SpringerInstance(args.n, parse_partition(args.lam))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    chi = springer_character(inst)
    n, lam = inst.n, inst.jordan_type
    rep = Report("springer")
    rep.check("dimension = number of fixed flags", chi.dim == inst.fixed_point_count())
    mult = decompose(chi)
    rep.check("multiplicities are Kostka numbers", all(mult.get(nu, 0) == kostka(nu, lam) for nu in partitions(n)))
    try:
        fixed_point_orbit_model(inst)
        rep.check("coset permutation model agrees", True)
    except AssertionError as exc:
        rep.check("coset permutation model agrees", False, str(exc))
    pairs = compatible_levis(inst)
    bad = [blocks for blocks, types in pairs if springer_via_levi_recursion(inst, blocks, types) != chi]
    rep.check(f"Levi recursion agrees for {len(pairs)} Levi placements", not bad, str(bad[:1]) if bad else "")
    rep.extend(parametrization_check(n), prefix="parametrization")
    result = {
        "n": n,
        "lambda": list(lam),
        "dimension": format_rational(chi.dim),
        "character": character_json(chi),
        "decomposition": decomposition_json(chi),
    }
    return document("springer", {"n": n, "lambda": partition_key(lam)}, result, [rep]), (
        EXIT_OK if rep.ok else EXIT_ASSERTION
    )


def cmd_verify(args) -> tuple[dict[str, Any], int]:
    from . import verify

    if sum(x is not None for x in (args.graph, args.filtration)) > 1:
        raise UsageError("give at most one of --graph and --filtration")
    if args.graph is not None:
        g = checked_graph(_graph_from_file(args.graph))
        reports = [verify.graph_report(g, max_degree(args))]
        instance: Any = {"graph": instance_json(g)}
    elif args.filtration is not None:
        data = read_json(args.filtration)
        try:
            F = Filtration.from_dict(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInstance(f"malformed filtration: {exc}") from None
        checked_graph(F.graph)
        reports = [verify.filtration_report(F)]
        instance = {"filtration": instance_json(F.graph)}
    else:
        if args.suite not in verify.SUITES:
            raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITES)}")
        reports = verify.run_suite(args.suite)
        instance = {"suite": args.suite}
    doc = document("verify", instance, {"passed": sum(r.ok for r in reports), "total": len(reports)}, reports)
    if args.text:
        doc["text"] = "\n".join(r.summary() for r in reports)
    return doc, EXIT_OK if doc["ok"] else EXIT_ASSERTION


def _graph_from_file(path: str) -> MomentGraph:
    try:
        return MomentGraph.from_dict(read_json(path))
    except ValueError as exc:
        raise InvalidInstance(str(exc)) from None


COMMANDS = {
    "generate": cmd_generate,
    "betti": cmd_betti,
    "character": cmd_character,
    "springer": cmd_springer,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None, quiet: bool = False) -> int:
    out, err = sys.stdout, sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc, code = COMMANDS[args.command](args)
    except UsageError as exc:
        if not quiet:
            print(f"gkmrep: usage error: {exc}", file=err)
        return EXIT_USAGE
    except InvalidInstance as exc:
        if not quiet:
            print(f"gkmrep: invalid instance: {exc}", file=err)
        return EXIT_INVALID
    except (SymmetryError, ActionError) as exc:
        if not quiet:
            print(f"gkmrep: missing symmetry: {exc}", file=err)
        return EXIT_SYMMETRY
    if quiet:
        return code
    if args.command == "verify" and args.text:
        out.write(doc["text"] + "\n")
    elif args.command == "generate" and args.output:
        with open(args.output, "w") as fh:
            fh.write(dumps(doc))
    else:
        out.write(dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
