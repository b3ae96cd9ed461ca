"""Bundled verification suites, one report per acceptance check."""

from __future__ import annotations

import json
import math
import os
import tempfile
from typing import Callable

from .actions import (
    ActionError,
    action_on_ordinary,
    invariant_dim,
    stability_failures,
    total_character,
    vertex_permutation_character,
)
from .filtration import (
    Filtration,
    build_filtration,
    check_graded_iso,
    check_point_independence,
    check_right_stability,
    check_subgraph_compat,
)
from .gkm import betti, freeness_check, gkm_piece, ordinary_basis
from .graph import (
    MomentGraph,
    SymmetryError,
    available_symmetries,
    bruhat_graph,
    hessenberg_graph,
    schubert_graph,
)
from .oracles import eulerian, kostka, q_factorial, schubert_betti
from .report import Report
from .reps import (
    CharacterVector,
    class_size,
    coset_permutation_character,
    decompose,
    induced_trivial,
    irreducible_character,
)
from .springer import (
    SpringerInstance,
    compatible_levis,
    compositions,
    parametrization_check,
    springer_character,
    springer_via_levi_recursion,
)
from .weyl import Permutation, YoungSubgroup, partitions


def restricted_ordinary_image_dim(big: MomentGraph, small: MomentGraph, i: int) -> int:
    """Rank of degree-i classes of ``big``, restricted to ``small``, in small's ordinary cohomology."""
    from .exact import Matrix
    from .gkm import restrict_class

    ob = ordinary_basis(small, i)
    cols = [ob.project(restrict_class(big, small, cls)) for cls in gkm_piece(big, i).basis]
    if not cols or ob.dim == 0:
        return 0
    return Matrix.from_columns(cols, ob.dim).rank()


def criterion_1() -> Report:
    rep = Report("1 Bruhat Betti numbers")
    for n in (2, 3, 4):
        g = bruhat_graph(n)
        bv = betti(g)
        rep.check(f"n={n} quotient Betti = [n]_q!", bv.complete and bv.b == q_factorial(n), f"{bv.b}")
        rep.check(f"n={n} in-degree census = quotient Betti", g.in_degree_census() == bv.b)
    return rep


def criterion_2() -> Report:
    rep = Report("2 regular representation of the right action")
    for n in (2, 3):
        g = bruhat_graph(n)
        total = total_character(g, "right")
        rep.check(f"n={n} total right character is regular", total == CharacterVector.regular(n), str(total))
        rep.check(f"n={n} equals the vertex permutation character", total == vertex_permutation_character(g, "right"))
    return rep


def criterion_3() -> Report:
    rep = Report("3 trivial left action on the flag variety")
    for n in (2, 3):
        g = bruhat_graph(n)
        for i in range(len(betti(g).b)):
            am = action_on_ordinary(g, "left", i)
            rep.check(f"n={n} degree {i} all matrices identity", all(m.is_identity() for m in am.matrices.values()))
    return rep


def criterion_4() -> Report:
    rep = Report("4 stability of GKM classes under both actions")
    g = bruhat_graph(3)
    degrees = range(len(betti(g).b))
    for kind in ("left", "right"):
        tested, bad = stability_failures(g, kind, degrees)
        rep.check(f"bruhat(3) {kind}: all {tested} images are classes", not bad, f"{len(bad)} failures")
    return rep


def _criterion_5_graphs() -> list[MomentGraph]:
    return [
        bruhat_graph(2),
        bruhat_graph(3),
        schubert_graph(3, Permutation.parse("2,3,1")),
        hessenberg_graph(3, (2, 3, 3)),
    ]


def criterion_5() -> Report:
    rep = Report("5 evaluation filtration")
    for g in _criterion_5_graphs():
        F = build_filtration(g)
        rep.extend(check_graded_iso(g, F), prefix=g.name)
        rep.extend(check_right_stability(F), prefix=g.name)
        rep.extend(check_point_independence(g, 3), prefix=g.name)
    return rep


def criterion_6() -> Report:
    rep = Report("6 permutohedral Hessenberg variety")
    h = hessenberg_graph(3, (2, 3, 3))
    bv = betti(h)
    rep.check("Betti (1,4,1) = Eulerian numbers", bv.b == (1, 4, 1) == eulerian(3), str(bv.b))
    try:
        total = total_character(h, "right")
        rep.check("total right character is regular", total == CharacterVector.regular(3), str(total))
    except (SymmetryError, ActionError) as exc:
        rep.check("total right character is regular", False, f"no right action of S_3: {exc}")
    inv = invariant_dim(action_on_ordinary(h, "left", 1))
    img = restricted_ordinary_image_dim(bruhat_graph(3), h, 1)
    rep.check("degree-1 left invariants = image of bruhat(3) degree 1", inv == img, f"{inv} vs {img}")
    rep.data.update({"betti": bv.b, "invariant_dim": inv, "image_dim": img})
    return rep


def criterion_7() -> Report:
    rep = Report("7 restriction to a Schubert variety")
    big, small = bruhat_graph(3), schubert_graph(3, Permutation.parse("2,3,1"))
    rep.extend(check_subgraph_compat(big, small, assert_equality=True), prefix="")
    bv = betti(small)
    rep.check("Schubert Betti (1,2,1)", bv.b == (1, 2, 1) == schubert_betti((2, 3, 1)), str(bv.b))
    return rep


def criterion_8() -> Report:
    rep = Report("8 Springer characters")
    for n in range(1, 6):
        for lam in partitions(n):
            inst = SpringerInstance(n, lam)
            chi = springer_character(inst)
            key = ",".join(map(str, lam))
            rep.check(f"{key}: dim = n!/prod", chi.dim == inst.fixed_point_count())
            mult = decompose(chi)
            rep.check(
                f"{key}: multiplicities = Kostka numbers",
                all(mult.get(nu, 0) == kostka(nu, lam) for nu in partitions(n)),
            )
        rep.check(f"n={n}: (1^n) regular", springer_character(SpringerInstance(n, (1,) * n)) == CharacterVector.regular(n))
        rep.check(f"n={n}: (n) trivial", springer_character(SpringerInstance(n, (n,))) == CharacterVector.trivial(n))
    for n in range(1, 5):
        for lam in partitions(n):
            inst = SpringerInstance(n, lam)
            target = springer_character(inst)
            pairs = compatible_levis(inst)
            bad = [p for p in pairs if springer_via_levi_recursion(inst, *p) != target]
            rep.check(f"{','.join(map(str, lam))}: Levi recursion over {len(pairs)} Levis", not bad, str(bad[:1]))
    for n in range(2, 6):
        rep.extend(parametrization_check(n), prefix=f"n={n}")
    return rep


def criterion_9() -> Report:
    rep = Report("9 character infrastructure")
    for n in range(1, 6):
        ok = all(
            sum(class_size(mu) * irreducible_character(a)[mu] * irreducible_character(b)[mu] for mu in partitions(n))
            == (math.factorial(n) if a == b else 0)
            for a in partitions(n)
            for b in partitions(n)
        )
        rep.check(f"n={n} orthogonality", ok)
        bad = [c for c in compositions(n) if induced_trivial(YoungSubgroup(c)) != coset_permutation_character(YoungSubgroup(c))]
        rep.check(f"n={n} Frobenius induction = coset permutation character", not bad, str(bad[:1]))
    return rep


def criterion_10() -> Report:
    """Corrupted fixtures through the command line, checking exit codes."""
    from . import cli

    rep = Report("10 negative controls")
    with tempfile.TemporaryDirectory() as tmp:
        zero = bruhat_graph(2).to_dict()
        zero["edges"][0]["weight"] = ["0", "0"]
        path = os.path.join(tmp, "zero.json")
        with open(path, "w") as fh:
            json.dump(zero, fh)
        code = cli.main(["betti", "--graph", path], quiet=True)
        rep.check("zero weight -> exit 3", code == cli.EXIT_INVALID, f"exit {code}")

        broken = corrupted_filtration(bruhat_graph(3))
        path = os.path.join(tmp, "filtration.json")
        with open(path, "w") as fh:
            json.dump(broken.to_dict(), fh)
        code = cli.main(["verify", "--filtration", path], quiet=True)
        rep.check("broken filtration -> exit 1", code == cli.EXIT_ASSERTION, f"exit {code}")

        path = os.path.join(tmp, "schubert.json")
        with open(path, "w") as fh:
            fh.write(schubert_graph(3, Permutation.parse("2,3,1")).to_json())
        code = cli.main(["character", "--graph", path, "--action", "left", "--degree", "total"], quiet=True)
        rep.check("non-symmetric graph -> exit 4", code == cli.EXIT_SYMMETRY, f"exit {code}")
    return rep


def corrupted_filtration(g: MomentGraph) -> Filtration:
    """Swap F_1 for coordinate vectors of the same dimension, which miss the constants."""
    from .exact import Span

    F = build_filtration(g)
    n = len(g.vertices)
    fake = Span(n, [[1 if k == j else 0 for k in range(n)] for j in range(F.level(1).dim)])
    levels = (F.levels[0], fake) + F.levels[2:]
    return Filtration(g, F.point, levels)


CRITERIA: dict[int, Callable[[], Report]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}

SUITES: dict[str, tuple[int, ...]] = {
    "gkm": (1, 7),
    "actions": (2, 3, 4, 6),
    "filtration": (5, 7),
    "springer": (8,),
    "reps": (9,),
    "negative": (10,),
    "all": tuple(range(1, 11)),
}


def run_suite(name: str) -> list[Report]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return [CRITERIA[k]() for k in SUITES[name]]


def graph_report(g: MomentGraph, max_i: int | None = None) -> Report:
    """Per-graph checks for a custom instance."""
    rep = Report(f"graph {g.name or 'custom'}")
    bv = betti(g, max_i)
    rep.data["betti"] = list(bv.b)
    rep.check("Betti numbers account for every vertex", bv.complete, f"sum {sum(bv.b)} of {bv.vertices}")
    rep.check("b_0 = number of components", bool(bv.b) and bv.b[0] == g.components())
    for i, dim, pred in freeness_check(g, bv):
        rep.check(f"degree {i} piece is free of the predicted rank", dim == pred, f"{dim} vs {pred}")
    if bv.complete:
        rep.extend(check_graded_iso(g, expected=bv.b), prefix="")
    rep.observe("in-degree census equals Betti", g.in_degree_census() == bv.b, str(g.in_degree_census()))
    for kind in ("left", "right"):
        acting = available_symmetries(g, kind)
        rep.observe(f"{kind} symmetries", len(acting) > 0, f"{len(acting)} elements")
    return rep


def filtration_report(F: Filtration) -> Report:
    return check_graded_iso(F.graph, F)
