"""Graded pieces of the GKM ring and the ordinary cohomology they determine.

A degree-i class is a tuple of homogeneous degree-i polynomials, one per
vertex, such that across every edge the difference of endpoint values is
divisible by the edge weight. Degree i here is cohomological degree 2i.

Each graded piece is the kernel of an exact linear system in the
coefficients of the vertex polynomials: an edge contributes "f(u) - f(v)
restricted to the hyperplane weight = 0 vanishes". Ordinary cohomology in
degree i is that kernel modulo the span of x_k * (degree i-1 piece).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .exact import Echelon, Matrix, Polynomial, divisible_by_linear, monomials
from .exact.linalg import SparseVec
from .exact.poly import _restriction_table, add_exponents
from .graph import InvalidGraphError, MomentGraph, validate

GkmClass = tuple[Polynomial, ...]

DEFAULT_MAX_DEGREE = 12


class NotAClassError(ValueError):
    """A vertex tuple fails the edge divisibility conditions."""


def is_gkm_class(g: MomentGraph, cls: Sequence[Polynomial]) -> bool:
    """Direct edge-by-edge divisibility test (independent of any solved basis)."""
    if len(cls) != len(g.vertices):
        return False
    return all(divisible_by_linear(cls[e.u] - cls[e.v], e.weight) for e in g.edges)


def poly_dim(nvars: int, d: int) -> int:
    """Dimension of the degree-d polynomials in nvars variables."""
    if d < 0:
        return 0
    if nvars == 0:
        return int(d == 0)
    return math.comb(nvars + d - 1, d)


def ambient_dim(g: MomentGraph, i: int) -> int:
    return len(g.vertices) * poly_dim(g.nvars, i)


class _Piece:
    """Solved linear system for one degree."""

    def __init__(self, g: MomentGraph, degree: int):
        self.graph = g
        self.degree = degree
        self.mons = monomials(g.nvars, degree)
        self.mon_index = {m: k for k, m in enumerate(self.mons)}
        self.M = len(self.mons)
        ncols = len(g.vertices) * self.M
        rows = []
        for e in g.edges:
            _, table = _restriction_table(e.weight.coefficients, degree)
            eqs: dict[tuple, SparseVec] = {}
            for m, image in table.items():
                cu, cv = e.u * self.M + self.mon_index[m], e.v * self.M + self.mon_index[m]
                for r, c in image.items():
                    eq = eqs.setdefault(r, {})
                    eq[cu] = eq.get(cu, 0) + c
                    eq[cv] = eq.get(cv, 0) - c
            rows.extend({k: v for k, v in eq.items() if v} for eq in eqs.values())
        self.equations = [r for r in rows if r]
        self._eqs_at: dict[int, list[int]] = {}
        for k, eq in enumerate(self.equations):
            for col in eq:
                self._eqs_at.setdefault(col, []).append(k)
        self.system = Echelon(ncols)
        # descending leading column keeps fill-in low
        self.system.extend(sorted(self.equations, key=min, reverse=True))
        self.free = self.system.free_columns()
        self.free_pos = {c: k for k, c in enumerate(self.free)}
        self.kernel: list[SparseVec] = self.system.kernel_basis()

    @property
    def dim(self) -> int:
        return len(self.free)

    def to_vector(self, cls: Sequence[Polynomial]) -> SparseVec:
        vec: SparseVec = {}
        for v, p in enumerate(cls):
            for e, c in p.items():
                if sum(e) != self.degree:
                    raise NotAClassError(f"vertex {v} value is not homogeneous of degree {self.degree}")
                vec[v * self.M + self.mon_index[e]] = c
        return vec

    def to_class(self, vec: SparseVec) -> GkmClass:
        n = len(self.graph.vertices)
        terms: list[dict] = [{} for _ in range(n)]
        for col, c in vec.items():
            v, k = divmod(col, self.M)
            terms[v][self.mons[k]] = c
        return tuple(Polynomial._raw(self.graph.nvars, t) for t in terms)

    def in_kernel(self, vec: SparseVec) -> bool:
        """Check every edge equation directly."""
        touched = {k for col in vec for k in self._eqs_at.get(col, ())}
        for k in touched:
            eq = self.equations[k]
            if sum(c * vec[col] for col, c in eq.items() if col in vec):
                return False
        return True

    def coordinates(self, vec: SparseVec, check: bool = True) -> SparseVec:
        """Coordinates in the kernel basis; raises if ``vec`` is not in the kernel."""
        if check and not self.in_kernel(vec):
            raise NotAClassError("vertex tuple fails the edge conditions")
        return {self.free_pos[c]: v for c, v in vec.items() if c in self.free_pos and v}

    def times_variable(self, vec: SparseVec, k: int, target: "_Piece") -> SparseVec:
        """x_k * vec, as a vector of the next degree."""
        out: SparseVec = {}
        shift = tuple(1 if j == k else 0 for j in range(self.graph.nvars))
        for col, c in vec.items():
            v, m = divmod(col, self.M)
            out[v * target.M + target.mon_index[add_exponents(self.mons[m], shift)]] = c
        return out

    def evaluate(self, vec: SparseVec, point: Sequence[Fraction]) -> list[Fraction]:
        values = [Fraction(0)] * len(self.graph.vertices)
        powers = [math.prod((a**k for a, k in zip(point, m)), start=Fraction(1)) for m in self.mons]
        for col, c in vec.items():
            v, m = divmod(col, self.M)
            values[v] += c * powers[m]
        return values


class _Quotient:
    """Ordinary cohomology in one degree: the piece modulo C[s]^+ times lower degrees."""

    def __init__(self, ring: "GkmRing", degree: int):
        piece = ring.piece_data(degree)
        self.piece = piece
        self.plus = Echelon(piece.dim)
        if degree > 0 and ring.graph.nvars > 0:
            lower = ring.piece_data(degree - 1)
            gens = []
            for vec in lower.kernel:
                for k in range(ring.graph.nvars):
                    prod = lower.times_variable(vec, k, piece)
                    gens.append({piece.free_pos[c]: x for c, x in prod.items() if c in piece.free_pos})
            self.plus.extend(sorted((v for v in gens if v), key=min, reverse=True))
        # representatives: greedy extension by kernel basis vectors
        ext = self.plus.copy()
        self.rep_index: list[int] = []
        for k in range(piece.dim):
            if ext.add({k: Fraction(1)}):
                self.rep_index.append(k)
        self._residuals = Echelon(piece.dim, track=True)
        for k in self.rep_index:
            self._residuals.add(self.plus.reduce({k: Fraction(1)}))

    @property
    def dim(self) -> int:
        return len(self.rep_index)

    def project(self, coords: SparseVec) -> list[Fraction]:
        """Coefficients on the representatives of the image in the quotient."""
        combo = self._residuals.express(self.plus.reduce(coords))
        return [combo.get(k, Fraction(0)) for k in range(self.dim)]



class GkmRing:
    """Lazily computed graded pieces of the GKM ring of one graph."""

    def __init__(self, graph: MomentGraph):
        report = validate(graph)
        if not report.ok:
            raise InvalidGraphError(list(report.violations))
        self.graph = graph
        self._pieces: dict[int, _Piece] = {}
        self._quotients: dict[int, _Quotient] = {}

    def piece_data(self, i: int) -> _Piece:
        if i not in self._pieces:
            self._pieces[i] = _Piece(self.graph, i)
        return self._pieces[i]

    def quotient_data(self, i: int) -> _Quotient:
        if i not in self._quotients:
            self._quotients[i] = _Quotient(self, i)
        return self._quotients[i]


@lru_cache(maxsize=64)
def gkm_ring(g: MomentGraph) -> GkmRing:
    return GkmRing(g)


@dataclass(frozen=True)
class GkmGradedPiece:
    graph: MomentGraph
    degree: int

    @property
    def _data(self) -> _Piece:
        return gkm_ring(self.graph).piece_data(self.degree)

    @property
    def dim(self) -> int:
        return self._data.dim

    def __len__(self):
        return self.dim

    @cached_property
    def basis(self) -> tuple[GkmClass, ...]:
        data = self._data
        return tuple(data.to_class(v) for v in data.kernel)

    def contains(self, cls: Sequence[Polynomial]) -> bool:
        try:
            self._data.coordinates(self._data.to_vector(cls))
        except NotAClassError:
            return False
        return True

    def coordinates(self, cls: Sequence[Polynomial]) -> list[Fraction]:
        coords = self._data.coordinates(self._data.to_vector(cls))
        return [coords.get(k, Fraction(0)) for k in range(self.dim)]

    def evaluations(self, point: Sequence[Fraction]) -> list[list[Fraction]]:
        data = self._data
        return [data.evaluate(v, point) for v in data.kernel]


def gkm_piece(g: MomentGraph, i: int) -> GkmGradedPiece:
    if i < 0:
        raise ValueError("degree must be nonnegative")
    gkm_ring(g).piece_data(i)
    return GkmGradedPiece(g, i)


@dataclass(frozen=True)
class BettiVector:
    """b[i] is the rank of ordinary cohomology in degree 2i.

    ``complete`` is False when the degree cap was hit before the Betti numbers
    added up to the number of vertices.
    """

    b: tuple[int, ...]
    complete: bool
    vertices: int

    def __iter__(self):
        return iter(self.b)

    def __getitem__(self, i):
        return self.b[i]

    def __len__(self):
        return len(self.b)


def ordinary_dim(g: MomentGraph, i: int) -> int:
    return gkm_ring(g).quotient_data(i).dim


def betti(g: MomentGraph, max_i: int | None = None) -> BettiVector:
    """Quotient dimensions degree by degree until they account for every vertex."""
    if max_i is None:
        max_i = DEFAULT_MAX_DEGREE
    ring = gkm_ring(g)
    nv = len(g.vertices)
    out: list[int] = []
    i = 0
    while sum(out) < nv and i <= max_i:
        out.append(ring.quotient_data(i).dim)
        i += 1
    complete = sum(out) == nv
    return BettiVector(tuple(out), complete, nv)


def free_rank_prediction(b: Sequence[int], nvars: int, i: int) -> int:
    """Dimension of degree i of a free C[s]-module with generators counted by ``b``."""
    return sum(bj * poly_dim(nvars, i - j) for j, bj in enumerate(b))


def freeness_check(g: MomentGraph, bv: BettiVector, degrees: int | None = None) -> list[tuple[int, int, int]]:
    """(degree, computed piece dim, free-module prediction) for each degree."""
    top = len(bv.b) - 1 if degrees is None else degrees
    return [(i, gkm_piece(g, i).dim, free_rank_prediction(bv.b, g.nvars, i)) for i in range(top + 1)]


@dataclass(frozen=True)
class OrdinaryBasis:
    """Representatives of a basis of ordinary cohomology in one degree.

    ``representatives`` are GKM classes; ``plus_subspace`` is the subspace
    C[s]^+ * (lower degrees) of the graded piece, in piece coordinates.
    """

    graph: MomentGraph
    degree: int

    @property
    def _q(self) -> _Quotient:
        return gkm_ring(self.graph).quotient_data(self.degree)

    @property
    def dim(self) -> int:
        return self._q.dim

    @cached_property
    def representatives(self) -> tuple[GkmClass, ...]:
        q = self._q
        return tuple(q.piece.to_class(q.piece.kernel[k]) for k in q.rep_index)

    @property
    def plus_subspace_dim(self) -> int:
        return self._q.plus.dim

    def plus_generators(self) -> list[GkmClass]:
        """Spanning set x_k * b of the subtracted subspace (b over the lower basis)."""
        if self.degree == 0:
            return []
        ring = gkm_ring(self.graph)
        lower, piece = ring.piece_data(self.degree - 1), ring.piece_data(self.degree)
        return [
            piece.to_class(lower.times_variable(v, k, piece))
            for v in lower.kernel
            for k in range(self.graph.nvars)
        ]

    def project(self, cls: Sequence[Polynomial]) -> list[Fraction]:
        """Coordinates of the image of a degree-i class in the quotient."""
        q = self._q
        return q.project(q.piece.coordinates(q.piece.to_vector(cls)))

    def in_plus_subspace(self, cls: Sequence[Polynomial]) -> bool:
        q = self._q
        return q.plus.contains(q.piece.coordinates(q.piece.to_vector(cls)))


def ordinary_basis(g: MomentGraph, i: int) -> OrdinaryBasis:
    gkm_ring(g).quotient_data(i)
    return OrdinaryBasis(g, i)


def restriction_vertex_map(big: MomentGraph, small: MomentGraph) -> list[int]:
    try:
        return [big.index[v] for v in small.vertices]
    except KeyError as exc:
        raise ValueError(f"vertex {exc.args[0]} of the small graph is not a vertex of the big one") from None


def restrict_class(big: MomentGraph, small: MomentGraph, cls: Sequence[Polynomial]) -> GkmClass:
    return tuple(cls[i] for i in restriction_vertex_map(big, small))


def restrict_classes(big: MomentGraph, small: MomentGraph, i: int) -> Matrix:
    """Matrix of piece_i(big) -> piece_i(small), columns indexed by big's basis."""
    if big.nvars != small.nvars:
        raise ValueError("graphs live over different tori")
    vmap = restriction_vertex_map(big, small)
    src, dst = gkm_piece(big, i), gkm_piece(small, i)
    cols = [dst.coordinates(tuple(cls[k] for k in vmap)) for cls in src.basis]
    return Matrix.from_columns(cols, dst.dim) if cols else Matrix.zeros(dst.dim, 0)
