"""Exact linear algebra over Q.

Vectors inside the solver are sparse ``{column: Fraction}`` dicts. The
``Echelon`` class keeps a row space in reduced row echelon form while rows are
added one at a time; everything else (kernels, ranks, subspace arithmetic) is
built on it.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .poly import DimensionError, as_rational

SparseVec = dict[int, Fraction]

_ONE = Fraction(1)


def sparse(vec: Sequence) -> SparseVec:
    return {i: as_rational(v) for i, v in enumerate(vec) if v}


def dense(vec: Mapping[int, Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i, v in vec.items():
        out[i] = v
    return out


def _axpy(target: SparseVec, f: Fraction, row: Mapping[int, Fraction]) -> None:
    """target -= f * row, in place, dropping zeros."""
    for k, v in row.items():
        s = target.get(k, 0) - f * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


class Echelon:
    """Row space of a set of vectors, maintained in reduced row echelon form.

    Pivot columns are always the leftmost possible, so the stored form is the
    unique RREF of the span regardless of insertion order. With ``track=True``
    each stored row remembers how it was built from the inserted vectors, which
    lets :meth:`express` write a member of the span in terms of the inputs.
    """

    def __init__(self, ncols: int, track: bool = False):
        self.ncols = ncols
        self.rows: dict[int, SparseVec] = {}
        self._occ: dict[int, set[int]] = defaultdict(set)
        self.track = track
        self._combo: dict[int, SparseVec] = {}
        self._inserted = 0

    def __len__(self):
        return len(self.rows)

    def copy(self) -> "Echelon":
        e = Echelon(self.ncols, self.track)
        e.rows = {p: dict(r) for p, r in self.rows.items()}
        e._occ = defaultdict(set, {k: set(s) for k, s in self._occ.items()})
        e._combo = {p: dict(c) for p, c in self._combo.items()}
        e._inserted = self._inserted
        return e

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def _reduce(self, vec: Mapping[int, Fraction], combo: SparseVec | None) -> SparseVec:
        r = {k: v for k, v in vec.items() if v}
        hits = [c for c in r if c in self.rows]
        # stored rows vanish on every other pivot column, so one pass suffices
        for c in hits:
            f = r[c]
            _axpy(r, f, self.rows[c])
            if combo is not None:
                _axpy(combo, f, self._combo[c])
        return r

    def reduce(self, vec: Mapping[int, Fraction]) -> SparseVec:
        """Normal form of ``vec`` modulo the span (zero on all pivot columns)."""
        return self._reduce(vec, None)

    def contains(self, vec: Mapping[int, Fraction]) -> bool:
        return not self._reduce(vec, None)

    def add(self, vec: Mapping[int, Fraction]) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        for k in vec:
            if not 0 <= k < self.ncols:
                raise DimensionError(f"column {k} outside 0..{self.ncols - 1}")
        index = self._inserted
        self._inserted += 1
        combo = {index: _ONE} if self.track else None
        r = self._reduce(vec, combo)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {k: v * inv for k, v in r.items()}
        if combo is not None:
            combo = {k: v * inv for k, v in combo.items()}
        for q in list(self._occ.pop(p, ())):
            row = self.rows[q]
            f = row[p]
            for k, v in r.items():
                s = row.get(k, 0) - f * v
                if s:
                    if k not in row:
                        self._occ[k].add(q)
                    row[k] = s
                else:
                    row.pop(k, None)
                    if k != q:
                        self._occ[k].discard(q)
            if combo is not None:
                _axpy(self._combo[q], f, combo)
        self.rows[p] = r
        for k in r:
            if k != p:
                self._occ[k].add(p)
        if combo is not None:
            self._combo[p] = combo
        return True

    def extend(self, vecs: Iterable[Mapping[int, Fraction]]) -> int:
        return sum(self.add(v) for v in vecs)

    def express(self, vec: Mapping[int, Fraction]) -> SparseVec:
        """Coefficients (by insertion index) writing ``vec`` in the span.

        Requires ``track=True``. Raises ValueError if ``vec`` is not in the span.
        """
        if not self.track:
            raise RuntimeError("express() needs a tracking echelon")
        combo: SparseVec = {}
        r = dict(vec)
        for c in [c for c in r if c in self.rows]:
            f = r[c]
            _axpy(r, f, self.rows[c])
            for k, v in self._combo[c].items():
                s = combo.get(k, 0) + f * v
                if s:
                    combo[k] = s
                else:
                    combo.pop(k, None)
        if r:
            raise ValueError("vector is not in the span")
        return combo

    def free_columns(self) -> list[int]:
        return [c for c in range(self.ncols) if c not in self.rows]

    def kernel_basis(self) -> list[SparseVec]:
        """Basis of {v : row . v = 0 for all rows}, one vector per free column.

        The vector for free column f has a 1 at f and 0 at the other free
        columns, so free-column entries are coordinates on the kernel.
        """
        out = []
        for f in self.free_columns():
            v = {f: _ONE}
            for p in self._occ.get(f, ()):
                v[p] = -self.rows[p][f]
            out.append(v)
        return out

    def basis(self) -> list[SparseVec]:
        return [dict(self.rows[p]) for p in self.pivots]


class Matrix:
    """Small dense rational matrix (immutable)."""

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        self.rows: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(as_rational(x) for x in r) for r in rows
        )
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise DimensionError("ragged matrix")
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"{self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix(
            [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows],
            other.ncols,
        )

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise DimensionError("vector length mismatch")
        v = [as_rational(x) for x in vec]
        return [sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise DimensionError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.nrows) if self.nrows == self.ncols else False

    def _echelon(self) -> Echelon:
        e = Echelon(self.ncols)
        e.extend(sparse(r) for r in self.rows)
        return e

    def rref(self) -> tuple["Matrix", list[int]]:
        e = self._echelon()
        rows = [dense(r, self.ncols) for r in e.basis()]
        rows += [[0] * self.ncols] * (self.nrows - len(rows))
        return Matrix(rows, self.ncols), e.pivots

    def rank(self) -> int:
        return self._echelon().dim

    def nullspace(self) -> list[list[Fraction]]:
        return [dense(v, self.ncols) for v in self._echelon().kernel_basis()]

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"


def solve_linear_system(A: Matrix) -> list[list[Fraction]]:
    """Basis of the null space of ``A`` (RREF-derived canonical form)."""
    return A.nullspace()


class Span:
    """A subspace of Q^n given by spanning vectors."""

    def __init__(self, ambient: int, vectors: Iterable[Sequence | Mapping] = ()):
        self.ambient = ambient
        self._ech = Echelon(ambient)
        for v in vectors:
            self._ech.add(self._coerce(v))

    def _coerce(self, v) -> SparseVec:
        if isinstance(v, Mapping):
            vec = {k: as_rational(x) for k, x in v.items() if x}
            if any(not 0 <= k < self.ambient for k in vec):
                raise DimensionError("index outside ambient space")
            return vec
        if len(v) != self.ambient:
            raise DimensionError(f"vector of length {len(v)} in ambient {self.ambient}")
        return sparse(v)

    @property
    def dim(self) -> int:
        return self._ech.dim

    def basis(self) -> list[list[Fraction]]:
        return [dense(r, self.ambient) for r in self._ech.basis()]

    def sparse_basis(self) -> list[SparseVec]:
        return self._ech.basis()

    def contains(self, v) -> bool:
        return self._ech.contains(self._coerce(v))

    __contains__ = contains

    def _check(self, other: "Span"):
        if self.ambient != other.ambient:
            raise DimensionError(f"ambient {self.ambient} vs {other.ambient}")

    def __add__(self, other: "Span") -> "Span":
        self._check(other)
        return Span(self.ambient, self.sparse_basis() + other.sparse_basis())

    def intersection(self, other: "Span") -> "Span":
        self._check(other)
        U, V = self.sparse_basis(), other.sparse_basis()
        if not U or not V:
            return Span(self.ambient)
        # kernel of [U^T | -V^T]: sum a_i u_i = sum b_j v_j
        k = len(U) + len(V)
        rows = []
        for c in range(self.ambient):
            row = {i: u[c] for i, u in enumerate(U) if c in u}
            row.update({len(U) + j: -v[c] for j, v in enumerate(V) if c in v})
            if row:
                rows.append(row)
        ech = Echelon(k)
        ech.extend(rows)
        out = []
        for sol in ech.kernel_basis():
            vec: SparseVec = {}
            for i, a in sol.items():
                if i < len(U):
                    _axpy(vec, -a, U[i])
            out.append(vec)
        return Span(self.ambient, out)

    def issubspace(self, other: "Span") -> bool:
        self._check(other)
        return all(other._ech.contains(v) for v in self._ech.basis())

    def __eq__(self, other):
        return (
            isinstance(other, Span)
            and self.ambient == other.ambient
            and self.dim == other.dim
            and self.issubspace(other)
        )

    def quotient_dim(self, sub: "Span") -> int:
        """dim(self / (self ∩ sub)); equals dim self - dim sub when sub ⊆ self."""
        self._check(sub)
        return (self + sub).dim - sub.dim

    def image(self, A: Matrix) -> "Span":
        if A.ncols != self.ambient:
            raise DimensionError("map does not start from this ambient space")
        return Span(A.nrows, [A.apply(v) for v in self.basis()])

    def __repr__(self):
        return f"Span(dim={self.dim}, ambient={self.ambient})"


def subspace_ops(U: Span, V: Span, op: str, vector=None, matrix: Matrix | None = None):
    """Single entry point for the subspace operations."""
    if op == "sum":
        return U + V
    if op == "intersection":
        return U.intersection(V)
    if op == "quotient_dim":
        return U.quotient_dim(V)
    if op == "membership":
        return U.contains(vector)
    if op == "image_under_map":
        return U.image(matrix)
    raise ValueError(f"unknown op {op!r}")
