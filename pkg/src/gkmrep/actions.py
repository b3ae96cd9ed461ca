"""Weyl group actions on GKM classes and on ordinary cohomology.

Right action: (f . w)(x) = f(w . x), where w . x is right translation
x -> x w^{-1}. It leaves polynomial scalars alone.

Left action: (w * f)(x) = w(f(w^{-1} x)), with left translation on vertices
and w permuting the torus coordinates.

Matrices are covariant for both kinds: for the right action M(w) is the
matrix of f -> f . w^{-1}, so M(vw) = M(v) M(w) either way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import Matrix, Polynomial, monomials
from .exact.linalg import SparseVec
from .gkm import GkmClass, NotAClassError, _Piece, betti, gkm_piece, gkm_ring, is_gkm_class
from .graph import GraphSymmetry, MomentGraph, SymmetryError, apply_right_symmetry, apply_symmetry
from .reps import CharacterVector, RepresentationError, sum_characters
from .weyl import Permutation, all_permutations

KINDS = ("left", "right")


class ActionError(RuntimeError):
    """An action fails to preserve GKM classes or the subtracted subspace."""


def _symmetry(g: MomentGraph, kind: str, w: Permutation) -> GraphSymmetry:
    if kind == "left":
        return apply_symmetry(g, w)
    if kind == "right":
        return apply_right_symmetry(g, w)
    raise ValueError(f"action kind must be 'left' or 'right', got {kind!r}")


def right_action_on_class(g: MomentGraph, w: Permutation, cls: Sequence[Polynomial]) -> GkmClass:
    """(f . w)(x) = f(w . x)."""
    vmap = apply_right_symmetry(g, w).vertex_map
    return tuple(cls[vmap[i]] for i in range(len(g.vertices)))


def left_action_on_class(g: MomentGraph, w: Permutation, cls: Sequence[Polynomial]) -> GkmClass:
    """(w * f)(x) = w(f(w^{-1} x))."""
    vmap = apply_symmetry(g, w).vertex_map
    out: list[Polynomial] = [None] * len(g.vertices)  # type: ignore[list-item]
    for i, p in enumerate(cls):
        out[vmap[i]] = w.act_on_polynomial(p)
    return tuple(out)


def act_on_class(g: MomentGraph, kind: str, w: Permutation, cls: Sequence[Polynomial]) -> GkmClass:
    if kind == "left":
        return left_action_on_class(g, w, cls)
    if kind == "right":
        return right_action_on_class(g, w, cls)
    raise ValueError(f"action kind must be 'left' or 'right', got {kind!r}")


@lru_cache(maxsize=None)
def _monomial_permutation(nvars: int, degree: int, w: Permutation) -> tuple[int, ...]:
    mons = monomials(nvars, degree)
    index = {m: k for k, m in enumerate(mons)}
    out = []
    for m in mons:
        image = [0] * nvars
        for i, e in enumerate(m):
            image[w.images[i] - 1] = e
        out.append(index[tuple(image)])
    return tuple(out)


def _covariant_map(g: MomentGraph, kind: str, w: Permutation, piece: _Piece):
    """Column map of the covariant operator M(w) on piece vectors."""
    if kind == "left":
        vmap = apply_symmetry(g, w).vertex_map
        mperm = _monomial_permutation(g.nvars, piece.degree, w)
    else:
        # f -> f . w^{-1}: value at x moves to w . x
        vmap = apply_right_symmetry(g, w).vertex_map
        mperm = tuple(range(piece.M))
    M = piece.M

    def apply(vec: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for col, c in vec.items():
            v, m = divmod(col, M)
            out[vmap[v] * M + mperm[m]] = c
        return out

    return apply


def _from_coords(piece: _Piece, coords: SparseVec) -> SparseVec:
    vec: SparseVec = {}
    for k, a in coords.items():
        for col, x in piece.kernel[k].items():
            s = vec.get(col, 0) + a * x
            if s:
                vec[col] = s
            else:
                vec.pop(col, None)
    return vec


def _generators(group: list[Permutation]) -> list[Permutation]:
    """A subset of ``group`` generating it (greedy closure)."""
    if not group:
        return []
    n = group[0].n
    reached = {Permutation.identity(n)}
    gens: list[Permutation] = []
    for w in sorted(group, key=lambda p: (p.length, p.images)):
        if w in reached:
            continue
        gens.append(w)
        frontier = list(reached)
        while frontier:
            new = []
            for x in frontier:
                for s in gens:
                    y = s * x
                    if y not in reached:
                        reached.add(y)
                        new.append(y)
            frontier = new
    return gens


@dataclass(frozen=True)
class ActionMatrices:
    graph: MomentGraph
    kind: str
    degree: int
    matrices: dict[Permutation, Matrix] = field(compare=False)

    @property
    def dim(self) -> int:
        return next(iter(self.matrices.values())).nrows if self.matrices else 0

    def __getitem__(self, w: Permutation) -> Matrix:
        return self.matrices[w]

    def group(self) -> list[Permutation]:
        return list(self.matrices)

    def homomorphism_failures(self) -> list[tuple[Permutation, Permutation]]:
        """Pairs (v, w) with M(vw) != M(v) M(w), over pairs inside the group."""
        bad = []
        for v in self.matrices:
            for w in self.matrices:
                vw = v * w
                if vw in self.matrices and self.matrices[vw] != self.matrices[v] @ self.matrices[w]:
                    bad.append((v, w))
        return bad

    def is_homomorphism(self) -> bool:
        return not self.homomorphism_failures()

    def traces(self) -> dict[Permutation, Fraction]:
        return {w: m.trace() for w, m in self.matrices.items()}


def action_on_ordinary(
    g: MomentGraph,
    kind: str,
    i: int,
    group: Iterable[Permutation] | None = None,
    verify: bool = True,
) -> ActionMatrices:
    """Matrices of the action on the degree-i quotient, in the representative basis.

    With ``verify`` the subtracted subspace is checked to be carried into
    itself, so the matrices really describe an action on the quotient.
    """
    if kind not in KINDS:
        raise ValueError(f"action kind must be 'left' or 'right', got {kind!r}")
    group = list(all_permutations(g.nvars) if group is None else group)
    ring = gkm_ring(g)
    q = ring.quotient_data(i)
    piece = q.piece
    # checking a generating set is enough: the checked maps then generate the rest
    checked = set(_generators(group)) if verify else set()
    plus_vectors = [_from_coords(piece, row) for row in q.plus.basis()] if verify else []
    matrices: dict[Permutation, Matrix] = {}
    for w in group:
        apply = _covariant_map(g, kind, w, piece)
        check = w in checked
        if check:
            for vec in plus_vectors:
                try:
                    coords = piece.coordinates(apply(vec))
                except NotAClassError:
                    raise ActionError(f"{kind} action of {w} leaves the GKM classes in degree {i}") from None
                if not q.plus.contains(coords):
                    raise ActionError(
                        f"{kind} action of {w} does not preserve C[s]^+ H in degree {i}; "
                        "the action on the quotient is not well defined"
                    )
        cols = []
        for k in q.rep_index:
            try:
                coords = piece.coordinates(apply(piece.kernel[k]), check=check)
            except NotAClassError:
                raise ActionError(f"{kind} action of {w} leaves the GKM classes in degree {i}") from None
            cols.append(q.project(coords))
        matrices[w] = Matrix.from_columns(cols, q.dim) if cols else Matrix.zeros(0, 0)
    return ActionMatrices(g, kind, i, matrices)


def character_of_action(am: ActionMatrices) -> CharacterVector:
    """Traces per conjugacy class; needs the whole of S_n."""
    n = am.graph.nvars
    missing = [w for w in all_permutations(n) if w not in am.matrices]
    if missing:
        raise RepresentationError(f"no matrix for {missing[0]}; the action is not defined on all of S_{n}")
    return CharacterVector.from_group_function(n, lambda w: am.matrices[w].trace())


def degree_characters(g: MomentGraph, kind: str, max_i: int | None = None) -> list[CharacterVector]:
    """Character of the action on each ordinary degree 0..top."""
    bv = betti(g, max_i)
    return [character_of_action(action_on_ordinary(g, kind, i)) for i in range(len(bv.b))]


def total_character(g: MomentGraph, kind: str, max_i: int | None = None) -> CharacterVector:
    return sum_characters(degree_characters(g, kind, max_i), g.nvars)


def vertex_permutation_character(g: MomentGraph, kind: str = "right") -> CharacterVector:
    """Fixed-vertex counts of the vertex action underlying ``kind``."""
    syms = {w: _symmetry(g, kind, w) for w in all_permutations(g.nvars)}
    return CharacterVector.from_group_function(
        g.nvars, lambda w: sum(1 for i, j in enumerate(syms[w].vertex_map) if i == j)
    )


@dataclass(frozen=True)
class StabilityFailure:
    kind: str
    element: Permutation
    degree: int
    index: int


def stability_failures(
    g: MomentGraph,
    kind: str,
    degrees: Iterable[int],
    group: Iterable[Permutation] | None = None,
) -> tuple[int, list[StabilityFailure]]:
    """Apply the action to every basis class and test edge divisibility directly.

    Returns (number of images tested, failures).
    """
    group = list(all_permutations(g.nvars) if group is None else group)
    tested, bad = 0, []
    for i in degrees:
        basis = gkm_piece(g, i).basis
        for w in group:
            for k, cls in enumerate(basis):
                tested += 1
                if not is_gkm_class(g, act_on_class(g, kind, w, cls)):
                    bad.append(StabilityFailure(kind, w, i, k))
    return tested, bad


def invariant_dim(am: ActionMatrices) -> int:
    """Dimension of the common fixed space of the given matrices."""
    d = am.dim
    if d == 0:
        return 0
    rows = []
    for w, m in am.matrices.items():
        for r in range(d):
            rows.append([m[r, c] - (1 if r == c else 0) for c in range(d)])
    stacked = Matrix(rows, d)
    return d - stacked.rank()


def symmetry_error_message(g: MomentGraph, kind: str) -> str | None:
    """None if every element of S_n acts on ``g`` in the way ``kind`` needs."""
    for w in all_permutations(g.nvars):
        try:
            _symmetry(g, kind, w)
        except SymmetryError as exc:
            return str(exc)
    return None
