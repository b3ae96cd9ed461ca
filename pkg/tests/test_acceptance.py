"""The ten acceptance criteria, asserted exactly (tolerance 0).

Each test records a PASS/FAIL line; conftest prints them after the run.
Run this file directly to get only those lines.
"""

import functools
import json
import math
import sys

import pytest

from gkmrep import cli
from gkmrep.actions import (
    act_on_class,
    action_on_ordinary,
    invariant_dim,
    total_character,
    vertex_permutation_character,
)
from gkmrep.exact import Matrix, Span
from gkmrep.filtration import (
    Filtration,
    build_filtration,
    common_regular_point,
    evaluate_classes,
    regular_points,
)
from gkmrep.gkm import betti, gkm_piece, is_gkm_class, ordinary_basis, restrict_class
from gkmrep.graph import (
    SymmetryError,
    apply_right_symmetry,
    available_symmetries,
    bruhat_graph,
    hessenberg_graph,
    schubert_graph,
)
from gkmrep.oracles import eulerian, kostka, q_factorial, schubert_betti
from gkmrep.reps import (
    CharacterVector,
    class_size,
    coset_permutation_character,
    decompose,
    induced_trivial,
    irreducible_character,
)
from gkmrep.springer import (
    SpringerInstance,
    compatible_levis,
    compositions,
    springer_character,
    springer_via_levi_recursion,
)
from gkmrep.weyl import Permutation, YoungSubgroup, all_permutations, partitions

ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}

S231 = Permutation.parse("2,3,1")


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                reason = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
                ACCEPTANCE_RESULTS[number] = ("FAIL", f"{title} -- {reason}")
                raise
            ACCEPTANCE_RESULTS[number] = ("PASS", title)

        run.criterion = (number, title)
        return run

    return wrap


def result_lines() -> list[str]:
    return [
        f"criterion {k:2d} {ACCEPTANCE_RESULTS[k][0]}  {ACCEPTANCE_RESULTS[k][1]}"
        for k in sorted(ACCEPTANCE_RESULTS)
    ]


@criterion(1, "Bruhat Betti numbers are [n]_q! for n = 2, 3, 4; quotient method and in-degree census agree")
def test_criterion_1():
    expected = {2: (1, 1), 3: (1, 2, 2, 1), 4: (1, 3, 5, 6, 5, 3, 1)}
    for n, b in expected.items():
        g = bruhat_graph(n)
        bv = betti(g)
        assert bv.complete
        assert bv.b == b == q_factorial(n)
        assert g.in_degree_census() == bv.b


@criterion(2, "total right character of bruhat_graph(n), n = 2, 3, is regular and equals the vertex permutation character")
def test_criterion_2():
    for n in (2, 3):
        g = bruhat_graph(n)
        total = total_character(g, "right")
        assert total.values == (math.factorial(n),) + (0,) * (len(partitions(n)) - 1)
        assert total == vertex_permutation_character(g, "right")


@criterion(3, "every left-action matrix on every ordinary degree of bruhat_graph(n), n = 2, 3, is the identity")
def test_criterion_3():
    for n in (2, 3):
        g = bruhat_graph(n)
        for i in range(len(betti(g).b)):
            am = action_on_ordinary(g, "left", i)
            assert len(am.matrices) == math.factorial(n)
            assert all(m.is_identity() for m in am.matrices.values())


@criterion(4, "both action images of every GKM basis class of bruhat_graph(3) pass edge divisibility, all degrees")
def test_criterion_4():
    g = bruhat_graph(3)
    top = len(betti(g).b)
    checked = 0
    for i in range(top + 1):
        for cls in gkm_piece(g, i).basis:
            for w in all_permutations(3):
                for kind in ("left", "right"):
                    assert is_gkm_class(g, act_on_class(g, kind, w, cls)), (kind, str(w), i)
                    checked += 1
    assert checked > 0


def _pointwise(u, v):
    return [a * b for a, b in zip(u, v)]


def _permute(vec, vmap):
    # right action on functions: (f . w)(x) = f(w . x)
    return [vec[vmap[i]] for i in range(len(vec))]


@criterion(5, "filtration: Gr = Betti, F_iF_j in F_{i+j}, right-action stable, graded dims equal at 3 regular points")
def test_criterion_5():
    graphs = [
        bruhat_graph(2),
        bruhat_graph(3),
        schubert_graph(3, S231),
        hessenberg_graph(3, (2, 3, 3)),
    ]
    for g in graphs:
        F = build_filtration(g)
        b = betti(g).b
        assert F.complete and F.gr_dims == b, g.name
        top = F.top
        for i in range(top + 1):
            for j in range(top + 1):
                target = F.level(i + j)
                for u in F.level(i).basis():
                    for v in F.level(j).basis():
                        assert target.contains(_pointwise(u, v)), (g.name, i, j)
        group = available_symmetries(g, "right")
        assert group
        for w in group:
            vmap = apply_right_symmetry(g, w).vertex_map
            for i in range(top + 1):
                level = F.level(i)
                assert all(level.contains(_permute(v, vmap)) for v in level.basis()), (g.name, str(w), i)
        points = regular_points(g, 3)
        assert len({tuple(p.a) for p in points}) == 3
        assert {build_filtration(g, p.a).gr_dims for p in points} == {b}


@criterion(6, "hessenberg_graph(3,(2,3,3)): Betti (1,4,1); total right character regular; left invariants = image of H^2(G/B)")
def test_criterion_6():
    h = hessenberg_graph(3, (2, 3, 3))
    big = bruhat_graph(3)
    assert betti(h).b == (1, 4, 1) == eulerian(3)

    ob = ordinary_basis(h, 1)
    cols = [ob.project(restrict_class(big, h, cls)) for cls in gkm_piece(big, 1).basis]
    image_dim = Matrix.from_columns(cols, ob.dim).rank()
    assert invariant_dim(action_on_ordinary(h, "left", 1)) == image_dim

    try:
        total = total_character(h, "right")
    except SymmetryError as exc:
        pytest.fail(f"total right character is undefined: S_3 has no right action on this graph ({exc})")
    assert total == CharacterVector.regular(3)


@criterion(7, "rho*(E_i) = F_i for schubert_graph(3,(2,3,1)) inside bruhat_graph(3); Schubert Betti (1,2,1)")
def test_criterion_7():
    big, small = bruhat_graph(3), schubert_graph(3, S231)
    assert betti(small).b == (1, 2, 1) == schubert_betti(S231.images)
    a = common_regular_point([big, small])
    vmap = [big.index[v] for v in small.vertices]
    n_small = len(small.vertices)
    E = Span(len(big.vertices))
    F = Span(n_small)
    for i in range(len(betti(big).b)):
        E = E + evaluate_classes(big, a, i)
        if i < len(betti(small).b):
            F = F + evaluate_classes(small, a, i)
        restricted = Span(n_small, [[v[k] for k in vmap] for v in E.basis()])
        assert restricted == F, i


@criterion(8, "Springer: dims n!/prod, Kostka multiplicities, anchors, Levi recursion for n <= 4")
def test_criterion_8():
    for n in range(1, 6):
        for lam in partitions(n):
            chi = springer_character(SpringerInstance(n, lam))
            assert chi.dim == math.factorial(n) // math.prod(math.factorial(p) for p in lam)
            mult = decompose(chi)
            assert all(mult.get(nu, 0) == kostka(nu, lam) for nu in partitions(n))
        assert springer_character(SpringerInstance(n, (1,) * n)) == CharacterVector.regular(n)
        assert springer_character(SpringerInstance(n, (n,))) == CharacterVector.trivial(n)
    for n in range(1, 5):
        for lam in partitions(n):
            inst = SpringerInstance(n, lam)
            target = springer_character(inst)
            for blocks, types in compatible_levis(inst):
                assert springer_via_levi_recursion(inst, blocks, types) == target, (lam, blocks, types)


@criterion(9, "orthogonality for n <= 5; Frobenius induction = coset permutation character for all Young subgroups")
def test_criterion_9():
    for n in range(1, 6):
        for a in partitions(n):
            for b in partitions(n):
                s = sum(
                    class_size(mu) * irreducible_character(a)[mu] * irreducible_character(b)[mu]
                    for mu in partitions(n)
                )
                assert s == (math.factorial(n) if a == b else 0)
        for blocks in compositions(n):
            H = YoungSubgroup(blocks)
            assert induced_trivial(H) == coset_permutation_character(H), blocks


@criterion(10, "negative controls: zero weight -> 3, broken filtration -> 1, non-symmetry -> 4")
def test_criterion_10(tmp_path):
    zero = bruhat_graph(2).to_dict()
    zero["edges"][0]["weight"] = ["0", "0"]
    p = tmp_path / "zero.json"
    p.write_text(json.dumps(zero))
    assert cli.main(["betti", "--graph", str(p)], quiet=True) == 3

    F = build_filtration(bruhat_graph(3))
    broken = Filtration(F.graph, F.point, (F.levels[0], Span(6, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])) + F.levels[2:])
    p = tmp_path / "filtration.json"
    p.write_text(json.dumps(broken.to_dict()))
    assert cli.main(["verify", "--filtration", str(p)], quiet=True) == 1

    p = tmp_path / "hex.json"
    p.write_text(hessenberg_graph(3, (2, 3, 3)).to_json())
    assert cli.main(["character", "--graph", str(p), "--action", "right"], quiet=True) == 4
    p = tmp_path / "schubert.json"
    p.write_text(schubert_graph(3, S231).to_json())
    assert cli.main(["character", "--graph", str(p), "--action", "left"], quiet=True) == 4


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    tests.sort(key=lambda t: t.criterion[0])
    for t in tests:
        try:
            if t.criterion[0] == 10:
                with tempfile.TemporaryDirectory() as d:
                    t(Path(d))
            else:
                t()
        except BaseException:
            pass
    print("\n".join(result_lines()))
    sys.exit(0 if all(v[0] == "PASS" for v in ACCEPTANCE_RESULTS.values()) else 1)
