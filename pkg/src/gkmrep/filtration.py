"""Evaluation filtration of functions on fixed points.

F_i is the span, inside Q^{vertices}, of the values at a regular point a of
all GKM classes of degree at most i. Its associated graded has the same
dimensions as ordinary cohomology, products respect the degrees, and the
right action permutes vertex values so it preserves every F_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .actions import degree_characters
from .exact import Span, as_rational, format_rational
from .exact.linalg import SparseVec
from .gkm import DEFAULT_MAX_DEGREE, betti, gkm_piece
from .graph import MomentGraph, SymmetryError, apply_right_symmetry, available_symmetries
from .report import Report
from .reps import CharacterVector
from .weyl import Permutation, all_permutations


class RegularityError(ValueError):
    """Some edge weight vanishes at the chosen point."""


@dataclass(frozen=True)
class RegularPoint:
    a: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(as_rational(x) for x in self.a))

    def __iter__(self):
        return iter(self.a)

    def __len__(self):
        return len(self.a)

    def __str__(self):
        return "(" + ", ".join(format_rational(x) for x in self.a) + ")"


def is_regular(g: MomentGraph, a: Sequence) -> bool:
    return len(a) == g.nvars and all(e.weight(a) != 0 for e in g.edges)


def _geometric(nvars: int, t: int) -> RegularPoint:
    return RegularPoint(tuple(Fraction(t) ** k for k in range(nvars)))


def _search(graphs: Sequence[MomentGraph], start: int = 1) -> Iterable[tuple[int, RegularPoint]]:
    nvars = graphs[0].nvars
    for t in itertools.count(start):
        a = _geometric(nvars, t)
        if all(is_regular(g, a.a) for g in graphs):
            yield t, a


def find_regular_point(g: MomentGraph) -> RegularPoint:
    """First a = (1, t, t^2, ...) for t = 1, 2, ... with no edge weight vanishing."""
    return next(_search([g]))[1]


def regular_points(g: MomentGraph, count: int) -> list[RegularPoint]:
    """The first ``count`` distinct regular points of the same search."""
    out: list[RegularPoint] = []
    for _, a in _search([g]):
        if a not in out:
            out.append(a)
        if len(out) == count:
            return out
    return out


def common_regular_point(graphs: Sequence[MomentGraph]) -> RegularPoint:
    if len({g.nvars for g in graphs}) != 1:
        raise ValueError("graphs live over different tori")
    return next(_search(list(graphs)))[1]


def _require_regular(g: MomentGraph, a: Sequence):
    if len(a) != g.nvars:
        raise RegularityError(f"point has {len(a)} coordinates, torus has {g.nvars}")
    for k, e in enumerate(g.edges):
        if e.weight(a) == 0:
            raise RegularityError(f"weight of edge {k} vanishes at the point")


def evaluate_classes(g: MomentGraph, a: Sequence, i: int) -> Span:
    """Span of the values at ``a`` of all classes of degree <= i."""
    _require_regular(g, a)
    point = [as_rational(x) for x in a]
    vectors = []
    for j in range(i + 1):
        vectors.extend(gkm_piece(g, j).evaluations(point))
    return Span(len(g.vertices), vectors)


@dataclass(frozen=True, eq=False)
class Filtration:
    graph: MomentGraph
    point: RegularPoint
    levels: tuple[Span, ...]
    complete: bool = True

    @property
    def ambient(self) -> int:
        return len(self.graph.vertices)

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def level(self, i: int) -> Span:
        if i < 0:
            return Span(self.ambient)
        return self.levels[min(i, self.top)]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(F.dim for F in self.levels)

    @property
    def gr_dims(self) -> tuple[int, ...]:
        return tuple(self.level(i).dim - self.level(i - 1).dim for i in range(len(self.levels)))

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": self.graph.to_dict(),
            "point": [format_rational(x) for x in self.point],
            "levels": [[[format_rational(x) for x in v] for v in F.basis()] for F in self.levels],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Filtration":
        g = MomentGraph.from_dict(data["graph"])
        n = len(g.vertices)
        levels = tuple(Span(n, [[as_rational(x) for x in v] for v in level]) for level in data["levels"])
        return cls(g, RegularPoint(tuple(as_rational(x) for x in data["point"])), levels)


def build_filtration(g: MomentGraph, a: Sequence | None = None, max_i: int | None = None) -> Filtration:
    """F_0, F_1, ... until the whole function space is reached (or the cap)."""
    point = find_regular_point(g) if a is None else RegularPoint(tuple(a))
    _require_regular(g, point.a)
    cap = DEFAULT_MAX_DEGREE if max_i is None else max_i
    n = len(g.vertices)
    levels: list[Span] = []
    current: list[SparseVec] = []
    i = 0
    while i <= cap:
        current = Span(n, current + [dict(enumerate(v)) for v in gkm_piece(g, i).evaluations(list(point))]).sparse_basis()
        levels.append(Span(n, current))
        if len(current) == n:
            break
        i += 1
    return Filtration(g, point, tuple(levels), complete=bool(levels) and levels[-1].dim == n)


def _pointwise(u: SparseVec, v: SparseVec) -> SparseVec:
    return {k: x * v[k] for k, x in u.items() if k in v}


def check_graded_iso(g: MomentGraph, filtration: Filtration | None = None, expected: Sequence[int] | None = None) -> Report:
    """Gr dims against Betti numbers, nesting, and F_i F_j inside F_{i+j}."""
    F = build_filtration(g) if filtration is None else filtration
    rep = Report(f"graded iso {g.name or 'graph'}")
    b = tuple(betti(g).b) if expected is None else tuple(expected)
    rep.data.update({"dims": list(F.dims), "gr_dims": list(F.gr_dims), "betti": list(b), "point": str(F.point)})
    for i in range(1, len(F.levels)):
        rep.check(f"F_{i - 1} inside F_{i}", F.level(i - 1).issubspace(F.level(i)))
    rep.check("filtration exhausts the function space", F.levels[-1].dim == F.ambient, f"top dim {F.levels[-1].dim} of {F.ambient}")
    rep.check("Gr dims equal Betti numbers", F.gr_dims == b, f"Gr {F.gr_dims} vs Betti {b}")
    bases = [F.level(i).sparse_basis() for i in range(len(F.levels))]
    for i in range(len(F.levels)):
        for j in range(i, len(F.levels)):
            target = F.level(i + j)
            bad = next(
                ((p, q) for p, u in enumerate(bases[i]) for q, v in enumerate(bases[j]) if not target.contains(_pointwise(u, v))),
                None,
            )
            where = "" if bad is None else f"basis pair {bad} escapes F_{min(i + j, F.top)}"
            rep.check(f"F_{i} F_{j} inside F_{i + j}", bad is None, where)
    return rep


def _permute(vec: SparseVec, vmap: Sequence[int]) -> SparseVec:
    # value at x of the right-translated function is the old value at w . x
    inv = {j: i for i, j in enumerate(vmap)}
    return {inv[k]: x for k, x in vec.items()}


def check_right_stability(F: Filtration, group: Iterable[Permutation] | None = None) -> Report:
    """Every level is carried into itself by the right action of every available element."""
    g = F.graph
    group = available_symmetries(g, "right") if group is None else list(group)
    rep = Report(f"right stability {g.name or 'graph'}")
    rep.data["group"] = [str(w) for w in group]
    rep.observe("right action defined for all of S_n", len(group) == len(all_permutations(g.nvars)), f"{len(group)} elements act")
    for w in group:
        vmap = apply_right_symmetry(g, w).vertex_map
        for i, level in enumerate(F.levels):
            ok = all(level.contains(_permute(v, vmap)) for v in level.sparse_basis())
            if not ok:
                rep.check(f"F_{i} stable under {w}", False)
                break
        else:
            continue
        break
    else:
        rep.check(f"all levels stable under {len(group)} elements", True)
    return rep


def check_point_independence(g: MomentGraph, count: int = 3) -> Report:
    """Graded dims agree at several regular points; whether the subspaces agree is only recorded."""
    rep = Report(f"regular point independence {g.name or 'graph'}")
    points = regular_points(g, count)
    filts = [build_filtration(g, a) for a in points]
    rep.data["points"] = [str(a) for a in points]
    rep.data["dims"] = [list(f.dims) for f in filts]
    rep.check(f"{count} distinct regular points found", len(points) == count)
    rep.check("graded dims agree", len({f.gr_dims for f in filts}) == 1, str([f.gr_dims for f in filts]))
    same = all(
        f.level(i) == filts[0].level(i) for f in filts[1:] for i in range(max(len(x.levels) for x in filts))
    )
    rep.observe("levels identical as subspaces", same)
    return rep


def is_schubert_pair(big: MomentGraph, small: MomentGraph) -> bool:
    """big is the full Bruhat graph and small the graph of a lower interval [e, w] in it."""
    from .graph import bruhat_graph, schubert_graph

    if not (big.permutation_vertices() and small.permutation_vertices()) or big.nvars != small.nvars:
        return False
    n = big.nvars
    if big != bruhat_graph(n):
        return False
    top = max(small.vertices, key=lambda x: x.length)
    return small == schubert_graph(n, top)


def _restrict(vec: SparseVec, vmap: Sequence[int]) -> SparseVec:
    return {k: vec[i] for k, i in enumerate(vmap) if i in vec}


def check_subgraph_compat(big: MomentGraph, small: MomentGraph, assert_equality: bool | None = None) -> Report:
    """Compare the restriction of big's filtration with small's, level by level.

    Equality is asserted for Schubert pairs (where ordinary restriction is
    onto) and only recorded otherwise.
    """
    from .gkm import restriction_vertex_map

    vmap = restriction_vertex_map(big, small)
    if assert_equality is None:
        assert_equality = is_schubert_pair(big, small)
    a = common_regular_point([big, small])
    E, F = build_filtration(big, a), build_filtration(small, a)
    rep = Report(f"restriction {big.name or 'big'} -> {small.name or 'small'}")
    rep.data["point"] = str(a)
    top = max(E.top, F.top)
    rows = []
    for i in range(top + 1):
        image = Span(len(small.vertices), [_restrict(v, vmap) for v in E.level(i).sparse_basis()])
        target = F.level(i)
        inside, equal = image.issubspace(target), image == target
        rows.append({"degree": i, "restricted_dim": image.dim, "small_dim": target.dim, "contained": inside, "equal": equal})
        if assert_equality:
            rep.check(f"rho*(E_{i}) = F_{i}", equal, f"dims {image.dim} vs {target.dim}")
        else:
            rep.observe(f"rho*(E_{i}) inside F_{i}", inside, f"dims {image.dim} vs {target.dim}")
            rep.observe(f"rho*(E_{i}) = F_{i}", equal)
    rep.data["levels"] = rows
    return rep


def _level_trace(level: Span, vmap: Sequence[int]) -> Fraction:
    # RREF basis: the coordinate on basis row p is the entry at pivot p
    total = Fraction(0)
    for row in level.sparse_basis():
        p = min(row)
        total += _permute(row, vmap).get(p, 0)
    return total


def graded_filtration_characters(F: Filtration) -> list[CharacterVector]:
    """Right-action character on each F_i / F_{i-1}; needs every element of S_n to act."""
    g = F.graph
    syms = {w: apply_right_symmetry(g, w).vertex_map for w in all_permutations(g.nvars)}
    out = []
    for i in range(len(F.levels)):
        hi, lo = F.level(i), F.level(i - 1)
        out.append(
            CharacterVector.from_group_function(g.nvars, lambda w: _level_trace(hi, syms[w]) - _level_trace(lo, syms[w]))
        )
    return out


def check_equivalence_theorem(g: MomentGraph) -> Report:
    """Right-action character on ordinary cohomology against the vertex permutation character."""
    rep = Report(f"equivalence {g.name or 'graph'}")
    try:
        syms = {w: apply_right_symmetry(g, w) for w in all_permutations(g.nvars)}
    except SymmetryError as exc:
        rep.check("S_n acts on the graph by weight-preserving symmetries", False, str(exc))
        return rep
    perm = CharacterVector.from_group_function(
        g.nvars, lambda w: sum(1 for i, j in enumerate(syms[w].vertex_map) if i == j)
    )
    per_degree = degree_characters(g, "right")
    total = CharacterVector.zero(g.nvars)
    for c in per_degree:
        total = total + c
    rep.data.update({"permutation_character": perm, "total_character": total, "degree_characters": per_degree})
    rep.check("total right character equals vertex permutation character", total == perm, f"{total} vs {perm}")
    F = build_filtration(g)
    rep.extend(check_right_stability(F), prefix="")
    gr = graded_filtration_characters(F)
    rep.data["filtration_characters"] = gr
    rep.check(
        "Gr_F character equals the ordinary character degree by degree",
        gr == per_degree,
        f"{[str(c) for c in gr]} vs {[str(c) for c in per_degree]}",
    )
    return rep
