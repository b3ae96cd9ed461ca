"""Symmetric groups as type-A Weyl groups.

Permutations are stored in one-line notation on ``1..n``. Composition is
``(v * w)(i) = v(w(i))`` and ``w`` acts on the torus coordinates by
``w(x_i) = x_{w(i)}``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .exact import LinearForm, Polynomial
from .exact.poly import DimensionError

Partition = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(3, (1, 2, 3))`` sends 1->2->3->1."""
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line notation such as ``"2,3,1"``."""
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise DimensionError(f"S_{self.n} * S_{other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    @cached_property
    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    @cached_property
    def length(self) -> int:
        """Number of inversions."""
        w = self.images
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def act_on_form(self, alpha: LinearForm) -> LinearForm:
        return weyl_act_on_form(self, alpha)

    def act_on_polynomial(self, p: Polynomial) -> Polynomial:
        if p.nvars != self.n:
            raise DimensionError(f"S_{self.n} acting on {p.nvars} variables")
        return p.permute_variables([j - 1 for j in self.images])

    def __str__(self):
        return ",".join(map(str, self.images))

    def __repr__(self):
        return f"Permutation({self})"


def all_permutations(n: int) -> list[Permutation]:
    """S_n in lexicographic order of one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def simple_reflections(n: int) -> list[Permutation]:
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


def weyl_act_on_form(w: Permutation, alpha: LinearForm) -> LinearForm:
    """Coefficient of x_{w(i)} in the result is the coefficient of x_i in ``alpha``."""
    if alpha.nvars != w.n:
        raise DimensionError(f"S_{w.n} acting on a form in {alpha.nvars} variables")
    out = [0] * w.n
    for i, c in enumerate(alpha.coefficients, start=1):
        out[w(i) - 1] = c
    return LinearForm(out)


@dataclass(frozen=True)
class RootSystemA:
    """Roots x_i - x_j of gl_n; W = S_n."""

    n: int

    @cached_property
    def positive_roots(self) -> list[LinearForm]:
        return [LinearForm.root(self.n, i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]

    def reflections(self) -> list[tuple[Permutation, LinearForm]]:
        return reflections(self.n)


def reflections(n: int) -> list[tuple[Permutation, LinearForm]]:
    """Transpositions (i j), i < j, each paired with its positive root x_i - x_j."""
    if n < 2:
        raise ValueError("need n >= 2")
    return [
        (Permutation.transposition(n, i, j), LinearForm.root(n, i, j))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]


def _rank_table(w: Permutation) -> list[list[int]]:
    # r[i][k] = #{a <= i : w(a) >= k}, 1 <= i, k <= n
    n = w.n
    table = [[0] * (n + 2) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            table[i][k] = table[i - 1][k] + (1 if w(i) >= k else 0)
    return table


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    """Bruhat order via the rank-matrix criterion."""
    if x.n != y.n:
        raise DimensionError(f"S_{x.n} vs S_{y.n}")
    if x.length > y.length:
        return False
    rx, ry = _rank_table(x), _rank_table(y)
    return all(rx[i][k] <= ry[i][k] for i in range(1, x.n + 1) for k in range(1, x.n + 1))


def bruhat_interval(w: Permutation) -> list[Permutation]:
    """{x : x <= w}, in lexicographic order."""
    return [x for x in all_permutations(w.n) if bruhat_leq(x, w)]


def longest_element(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def is_composition(blocks: Sequence[int]) -> bool:
    return len(blocks) > 0 and all(isinstance(b, int) and b > 0 for b in blocks)


@dataclass(frozen=True)
class YoungSubgroup:
    """S_{b1} x ... x S_{bm} acting on consecutive blocks of 1..n."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        if not is_composition(blocks):
            raise ValueError(f"{self.blocks} is not a composition")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def order(self) -> int:
        return math.prod(math.factorial(b) for b in self.blocks)

    def block_ranges(self) -> list[range]:
        out, start = [], 1
        for b in self.blocks:
            out.append(range(start, start + b))
            start += b
        return out

    def block_of(self) -> list[int]:
        """Block index of each point 1..n (0-based list)."""
        out = []
        for k, b in enumerate(self.blocks):
            out.extend([k] * b)
        return out

    def contains(self, w: Permutation) -> bool:
        if w.n != self.n:
            return False
        block = self.block_of()
        return all(block[i - 1] == block[w(i) - 1] for i in range(1, self.n + 1))

    def __contains__(self, w: Permutation) -> bool:
        return self.contains(w)

    def elements(self) -> Iterator[Permutation]:
        ranges = self.block_ranges()
        for parts in itertools.product(*(itertools.permutations(r) for r in ranges)):
            yield Permutation(tuple(itertools.chain.from_iterable(parts)))


def coset_reps(n: int, H: YoungSubgroup) -> list[Permutation]:
    """Minimal-length representatives of the left cosets w*H, lexicographic order.

    The minimal element of w*H is the unique one increasing on every block.
    """
    if H.n != n:
        raise ValueError(f"Young subgroup of S_{H.n} used in S_{n}")
    ranges = H.block_ranges()
    return [
        w
        for w in all_permutations(n)
        if all(w(i) < w(i + 1) for r in ranges for i in r if i + 1 in r)
    ]


def coset_rep_of(w: Permutation, H: YoungSubgroup) -> Permutation:
    """Minimal representative of w*H: sort the values of w within each block."""
    images = list(w.images)
    for r in H.block_ranges():
        lo, hi = r.start - 1, r.stop - 1
        images[lo:hi] = sorted(images[lo:hi])
    return Permutation(tuple(images))


def conjugacy_class_of(w: Permutation) -> Partition:
    return w.cycle_type()


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order: (n), (n-1, 1), ..., (1^n)."""

    def gen(rest: int, largest: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def is_partition(parts: Sequence[int]) -> bool:
    return (
        len(parts) > 0
        and all(isinstance(p, int) and p > 0 for p in parts)
        and all(a >= b for a, b in zip(parts, parts[1:]))
    )


def parse_partition(text: str) -> Partition:
    parts = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    if not is_partition(parts):
        raise ValueError(f"{text!r} is not a partition")
    return parts
