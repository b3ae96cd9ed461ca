"""Moment graphs: vertices (fixed points), weighted edges (invariant curves), orientation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Sequence

from .exact import LinearForm, as_rational, format_rational
from .weyl import Permutation, all_permutations, bruhat_interval, reflections


class SymmetryError(ValueError):
    """A proposed graph symmetry does not map edges to edges."""


class InvalidGraphError(ValueError):
    """A moment graph failed validation."""

    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class Edge:
    """An invariant curve joining vertices ``u`` and ``v`` (indices).

    ``weight`` is read as the tangent character at ``u``; the tangent character
    at ``v`` is its negative. Only its sign relative to the orientation matters.
    """

    u: int
    v: int
    weight: LinearForm


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    edge: int | None = None

    def __str__(self):
        where = f" (edge {self.edge})" if self.edge is not None else ""
        return f"{self.kind}{where}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def raise_if_invalid(self):
        if self.violations:
            raise InvalidGraphError(list(self.violations))


@dataclass(frozen=True, eq=True)
class MomentGraph:
    nvars: int
    vertices: tuple[Hashable, ...]
    edges: tuple[Edge, ...]
    orientation: tuple[int, ...]
    name: str = field(default="", compare=False)

    @cached_property
    def index(self) -> dict[Hashable, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_lookup(self) -> dict[frozenset, list[LinearForm]]:
        out: dict[frozenset, list[LinearForm]] = {}
        for e in self.edges:
            out.setdefault(frozenset((e.u, e.v)), []).append(e.weight)
        return out

    def weights(self) -> list[LinearForm]:
        return [e.weight for e in self.edges]

    def source(self, e: Edge) -> int:
        return e.u if e.weight.pairing(self.orientation) > 0 else e.v

    def sink(self, e: Edge) -> int:
        return e.v if self.source(e) == e.u else e.u

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for e in self.edges:
            deg[self.sink(e)] += 1
        return deg

    def in_degree_census(self) -> tuple[int, ...]:
        """Number of vertices with each in-degree (the cell-count Betti estimate)."""
        deg = self.in_degrees()
        if not deg:
            return ()
        census = [0] * (max(deg) + 1)
        for d in deg:
            census[d] += 1
        return tuple(census)

    def components(self) -> int:
        parent = list(range(len(self.vertices)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for e in self.edges:
            parent[find(e.u)] = find(e.v)
        return len({find(i) for i in range(len(self.vertices))})

    def permutation_vertices(self) -> bool:
        return bool(self.vertices) and all(isinstance(v, Permutation) for v in self.vertices)

    def subgraph(self, keep: Sequence[Hashable], name: str = "") -> "MomentGraph":
        """Full subgraph on the given vertex labels (kept in this graph's order)."""
        keep_set = set(keep)
        old = [i for i, v in enumerate(self.vertices) if v in keep_set]
        new_index = {o: k for k, o in enumerate(old)}
        edges = tuple(
            Edge(new_index[e.u], new_index[e.v], e.weight)
            for e in self.edges
            if e.u in new_index and e.v in new_index
        )
        return MomentGraph(self.nvars, tuple(self.vertices[i] for i in old), edges, self.orientation, name)

    # JSON interchange

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"nvars": self.nvars}
        if self.name:
            out["name"] = self.name
        out["vertices"] = [_label_to_json(v) for v in self.vertices]
        out["edges"] = [
            {"u": e.u, "v": e.v, "weight": [format_rational(c) for c in e.weight.coefficients]}
            for e in self.edges
        ]
        out["lambda"] = list(self.orientation)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "MomentGraph":
        try:
            nvars = int(data["nvars"])
            labels = [_label_from_json(v) for v in data["vertices"]]
            edges = tuple(
                Edge(int(e["u"]), int(e["v"]), LinearForm(as_rational(c) for c in e["weight"]))
                for e in data["edges"]
            )
            lam = tuple(int(x) for x in data["lambda"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from exc
        return cls(nvars, tuple(labels), edges, lam, str(data.get("name", "")))

    @classmethod
    def from_json(cls, text: str) -> "MomentGraph":
        return cls.from_dict(json.loads(text))


def _label_to_json(v):
    if isinstance(v, Permutation):
        return list(v.images)
    return v


def _label_from_json(v):
    if isinstance(v, list):
        try:
            return Permutation(tuple(v))
        except (ValueError, TypeError):
            return tuple(v)
    return v


def validate(g: MomentGraph) -> ValidationReport:
    out: list[Violation] = []
    nv = len(g.vertices)
    if len(set(g.vertices)) != nv:
        out.append(Violation("duplicate-vertex", "vertex labels are not distinct"))
    if len(g.orientation) != g.nvars:
        out.append(Violation("orientation-length", f"lambda has length {len(g.orientation)}, expected {g.nvars}"))
    for k, e in enumerate(g.edges):
        if not (0 <= e.u < nv and 0 <= e.v < nv):
            out.append(Violation("bad-endpoint", f"endpoint outside 0..{nv - 1}", k))
            continue
        if e.u == e.v:
            out.append(Violation("loop", "an invariant curve has two distinct fixed points", k))
        if e.weight.nvars != g.nvars:
            out.append(Violation("weight-length", f"weight has {e.weight.nvars} coefficients", k))
            continue
        if e.weight.is_zero():
            out.append(Violation("zero-weight", "edge weight is zero", k))
            continue
        if len(g.orientation) == g.nvars and e.weight.pairing(g.orientation) == 0:
            out.append(Violation("orientation", "lambda pairs to zero with the weight", k))
    return ValidationReport(tuple(out))


def default_orientation(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


def _edges_between(perms: list[Permutation], keep) -> tuple[Edge, ...]:
    """Edges {x, r x} (r a reflection) with the positive root as weight.

    ``u`` is the Bruhat-shorter endpoint, so with a dominant orientation the
    shorter endpoint is the source.
    """
    index = {p: i for i, p in enumerate(perms)}
    n = perms[0].n
    edges = []
    for x in perms:
        for r, alpha in reflections(n):
            y = r * x
            if y not in index or y.length < x.length:
                continue
            if keep(x, r, alpha):
                edges.append(Edge(index[x], index[y], alpha))
    edges.sort(key=lambda e: (e.u, e.v))
    return tuple(edges)


def bruhat_graph(n: int) -> MomentGraph:
    if n < 1:
        raise ValueError("n >= 1 required")
    perms = all_permutations(n)
    edges = _edges_between(perms, lambda x, r, a: True) if n > 1 else ()
    return MomentGraph(n, tuple(perms), edges, default_orientation(n), f"bruhat({n})")


def schubert_graph(n: int, w: Permutation) -> MomentGraph:
    if w.n != n:
        raise ValueError(f"{w} is not in S_{n}")
    return bruhat_graph(n).subgraph(bruhat_interval(w), f"schubert({n};{w})")


def validate_hessenberg(n: int, h: Sequence[int]) -> tuple[int, ...]:
    h = tuple(int(x) for x in h)
    if len(h) != n:
        raise ValueError(f"Hessenberg function needs {n} values, got {len(h)}")
    if any(not (i <= h[i - 1] <= n) for i in range(1, n + 1)):
        raise ValueError(f"need i <= h(i) <= n, got {h}")
    if any(a > b for a, b in zip(h, h[1:])):
        raise ValueError(f"Hessenberg function must be nondecreasing, got {h}")
    return h


def in_hessenberg_roots(n: int, h: Sequence[int], i: int, j: int) -> bool:
    """Whether the root x_i - x_j (i != j) has its root space inside the Hessenberg space."""
    if i < j:
        return True
    return i <= h[j - 1]


def hessenberg_graph(n: int, h: Sequence[int]) -> MomentGraph:
    """Moment graph of the regular semisimple Hessenberg variety for ``h``.

    The edge {x, r_a x} is kept when both +x^{-1}(a) and -x^{-1}(a) lie in the
    Hessenberg root set, i.e. when the negative one does (positive roots always
    do). This is symmetric in the two endpoints.
    """
    h = validate_hessenberg(n, h)

    def keep(x: Permutation, r: Permutation, alpha: LinearForm) -> bool:
        i = next(k for k, c in enumerate(alpha.coefficients, 1) if c > 0)
        j = next(k for k, c in enumerate(alpha.coefficients, 1) if c < 0)
        a, b = x.inverse(i), x.inverse(j)
        return in_hessenberg_roots(n, h, a, b) and in_hessenberg_roots(n, h, b, a)

    perms = all_permutations(n)
    edges = _edges_between(perms, keep) if n > 1 else ()
    label = ",".join(map(str, h))
    return MomentGraph(n, tuple(perms), edges, default_orientation(n), f"hessenberg({n};{label})")


def hessenberg_is_degenerate(n: int, h: Sequence[int]) -> bool:
    """h(i) = i everywhere: no curves survive and the graph is n! isolated points."""
    return all(h[i - 1] == i for i in range(1, n + 1))


@dataclass(frozen=True)
class GraphSymmetry:
    """Vertex permutation plus the induced map on torus weights.

    ``twisted`` symmetries move weights by the Weyl element (left translation);
    untwisted ones fix every weight up to sign (right translation).
    """

    vertex_map: tuple[int, ...]
    element: Permutation
    twisted: bool = True

    def map_form(self, alpha: LinearForm) -> LinearForm:
        return self.element.act_on_form(alpha) if self.twisted else alpha

    def compose(self, other: "GraphSymmetry") -> "GraphSymmetry":
        """self after other."""
        if self.twisted != other.twisted:
            raise SymmetryError("cannot compose twisted and untwisted symmetries")
        return GraphSymmetry(
            tuple(self.vertex_map[other.vertex_map[i]] for i in range(len(self.vertex_map))),
            self.element * other.element,
            self.twisted,
        )


def _translation(g: MomentGraph, w: Permutation, twisted: bool) -> GraphSymmetry:
    if not g.permutation_vertices():
        raise SymmetryError("translations need permutation-labelled vertices")
    if w.n != g.nvars or any(v.n != w.n for v in g.vertices):
        raise SymmetryError(f"{w} does not act on this graph")
    winv = w.inverse
    try:
        vmap = tuple(g.index[w * x if twisted else x * winv] for x in g.vertices)
    except KeyError as exc:
        raise SymmetryError(f"vertex set is not stable under {w}: {exc.args[0]} missing") from None
    sym = GraphSymmetry(vmap, w, twisted)
    for k, e in enumerate(g.edges):
        target = g.edge_lookup.get(frozenset((vmap[e.u], vmap[e.v])))
        image = sym.map_form(e.weight)
        if not target or not any(image.equals_up_to_sign(t) for t in target):
            want = "w(alpha)" if twisted else "alpha"
            raise SymmetryError(f"edge {k} is not carried to an edge with weight ±{want} by {w}")
    return sym


def apply_symmetry(g: MomentGraph, w: Permutation) -> GraphSymmetry:
    """Left translation x -> w x, checked to carry edges to edges with weight ±w(alpha)."""
    return _translation(g, w, twisted=True)


def apply_right_symmetry(g: MomentGraph, w: Permutation) -> GraphSymmetry:
    """Right translation x -> x w^{-1}, checked to carry edges to edges with the same weight.

    This is a left action on vertices that leaves weights alone, so it commutes
    with the polynomial scalars. On the Bruhat graph it is the fixed-point
    shadow of W acting on G/B = K/T from the right.
    """
    return _translation(g, w, twisted=False)


SYMMETRY_KINDS = {"left": apply_symmetry, "right": apply_right_symmetry}


def symmetry_group(g: MomentGraph, kind: str = "left") -> list[Permutation]:
    """All of S_n, after checking each element is a symmetry of ``g`` of the given kind."""
    make = SYMMETRY_KINDS[kind]
    group = all_permutations(g.nvars)
    for w in group:
        make(g, w)
    return group


def available_symmetries(g: MomentGraph, kind: str = "left") -> list[Permutation]:
    """The elements of S_n that act on ``g`` (a subgroup; may be just the identity)."""
    make = SYMMETRY_KINDS[kind]
    if not g.permutation_vertices():
        return []
    out = []
    for w in all_permutations(g.nvars):
        try:
            make(g, w)
        except SymmetryError:
            continue
        out.append(w)
    return out
