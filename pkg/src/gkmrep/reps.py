"""Characters of symmetric groups.

Class functions on S_n are stored as value tuples aligned with ``classes(n)``:
cycle types in increasing lexicographic order, so the identity class (1^n)
comes first. Irreducibles are listed the other way round, (n) first. Class
functions on a Young subgroup S_{b1} x ... x S_{bm} are keyed by tuples of
partitions, one per block.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .exact import as_rational
from .weyl import (
    Partition,
    Permutation,
    YoungSubgroup,
    all_permutations,
    coset_rep_of,
    coset_reps,
    is_partition,
    partitions,
    simple_reflections,
)


class NotACharacterError(ValueError):
    """A class function whose irreducible multiplicities are not nonnegative integers."""


class RepresentationError(ValueError):
    """Data that should come from a group action or representation does not."""


def z(lam: Partition) -> int:
    """Centralizer order of a permutation of cycle type ``lam``."""
    return math.prod(k**m * math.factorial(m) for k, m in Counter(lam).items())


def class_size(lam: Partition) -> int:
    return math.factorial(sum(lam)) // z(lam)


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > k) for k in range(lam[0])) if lam else ()


@lru_cache(maxsize=None)
def classes(n: int) -> tuple[Partition, ...]:
    """Conjugacy classes of S_n by cycle type, identity first."""
    return tuple(reversed(partitions(n)))


def partition_key(lam: Partition) -> str:
    return ",".join(map(str, lam))


def _check_n(n: int):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class CharacterVector:
    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(as_rational(v) for v in self.values)
        if len(vals) != len(classes(self.n)):
            raise ValueError(f"S_{self.n} has {len(classes(self.n))} classes, got {len(vals)} values")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_class_function(cls, n: int, f: Callable[[Partition], object]) -> "CharacterVector":
        return cls(n, tuple(f(lam) for lam in classes(n)))

    @classmethod
    def from_mapping(cls, n: int, values: Mapping[Partition, object]) -> "CharacterVector":
        return cls(n, tuple(values[lam] for lam in classes(n)))

    @classmethod
    def from_group_function(cls, n: int, f: Callable[[Permutation], object]) -> "CharacterVector":
        """Evaluate on every element, checking the values are constant on classes."""
        seen: dict[Partition, Fraction] = {}
        for w in all_permutations(n):
            lam, v = w.cycle_type(), as_rational(f(w))
            if seen.setdefault(lam, v) != v:
                raise RepresentationError(f"value not constant on class {partition_key(lam)}")
        return cls.from_mapping(n, seen)

    @classmethod
    def trivial(cls, n: int) -> "CharacterVector":
        return cls.from_class_function(n, lambda lam: 1)

    @classmethod
    def sign(cls, n: int) -> "CharacterVector":
        return cls.from_class_function(n, lambda lam: (-1) ** (n - len(lam)))

    @classmethod
    def regular(cls, n: int) -> "CharacterVector":
        return cls.from_class_function(n, lambda lam: math.factorial(n) if lam == (1,) * n else 0)

    @classmethod
    def zero(cls, n: int) -> "CharacterVector":
        return cls.from_class_function(n, lambda lam: 0)

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.values[class_index(self.n)[tuple(lam)]]

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(zip(classes(self.n), self.values))

    @property
    def dim(self) -> Fraction:
        return self[(1,) * self.n]

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        if other.n != self.n:
            raise ValueError("characters of different groups")
        return CharacterVector(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "CharacterVector") -> "CharacterVector":
        return self + other.scale(-1)

    def __mul__(self, other: "CharacterVector") -> "CharacterVector":
        """Pointwise product (character of the inner tensor product)."""
        if other.n != self.n:
            raise ValueError("characters of different groups")
        return CharacterVector(self.n, tuple(a * b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "CharacterVector":
        c = as_rational(c)
        return CharacterVector(self.n, tuple(c * v for v in self.values))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@lru_cache(maxsize=None)
def class_index(n: int) -> dict[Partition, int]:
    return {lam: k for k, lam in enumerate(classes(n))}


def inner_product(chi: CharacterVector, psi: CharacterVector) -> Fraction:
    """(1/n!) sum over classes |C| chi(C) psi(C); characters of S_n are real."""
    if chi.n != psi.n:
        raise ValueError("characters of different groups")
    total = sum(
        (class_size(lam) * a * b for lam, a, b in zip(classes(chi.n), chi.values, psi.values)),
        Fraction(0),
    )
    return total / math.factorial(chi.n)


def _mn(lam: Partition, mu: Partition) -> int:
    """Murnaghan-Nakayama on beta-sets: strip a rim hook of length mu[0] each step."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in beta_set:
            continue
        sign = (-1) ** sum(1 for x in beta if c < x < b)
        new_beta = sorted((beta_set - {b}) | {c}, reverse=True)
        new_lam = tuple(x - (k - 1 - i) for i, x in enumerate(new_beta))
        total += sign * _mn_cached(tuple(p for p in new_lam if p > 0), rest)
    return total


@lru_cache(maxsize=None)
def _mn_cached(lam: Partition, mu: Partition) -> int:
    return _mn(lam, mu)


@lru_cache(maxsize=None)
def irreducible_character(lam: Partition) -> CharacterVector:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    n = sum(lam)
    return CharacterVector.from_class_function(n, lambda mu: _mn_cached(lam, mu))


def character_table(n: int) -> dict[Partition, CharacterVector]:
    return {lam: irreducible_character(lam) for lam in partitions(n)}


def decompose(chi: CharacterVector) -> dict[Partition, int]:
    """Irreducible multiplicities, nonzero ones only, (n) first."""
    out: dict[Partition, int] = {}
    for lam in partitions(chi.n):
        m = inner_product(chi, irreducible_character(lam))
        if m.denominator != 1 or m < 0:
            raise NotACharacterError(f"multiplicity of {partition_key(lam)} is {m}")
        if m:
            out[lam] = int(m)
    if sum(m * irreducible_character(lam).dim for lam, m in out.items()) != chi.dim:
        raise NotACharacterError("multiplicities do not account for the dimension")
    return out


def permutation_character(
    n: int,
    points: Sequence[Hashable],
    act: Callable[[Permutation, Hashable], Hashable],
) -> CharacterVector:
    """Fixed-point counts of an action of S_n on ``points``, after checking it is an action."""
    _check_n(n)
    point_set = set(points)
    if len(point_set) != len(points):
        raise RepresentationError("repeated points")
    group = all_permutations(n)
    images = {}
    for w in group:
        img = tuple(act(w, p) for p in points)
        if set(img) != point_set:
            raise RepresentationError(f"{w} does not permute the points")
        images[w] = dict(zip(points, img))
    e = Permutation.identity(n)
    if any(images[e][p] != p for p in points):
        raise RepresentationError("identity moves a point")
    for s in simple_reflections(n):
        for w in group:
            sw = s * w
            if any(images[s][images[w][p]] != images[sw][p] for p in points):
                raise RepresentationError(f"act({s}, act({w}, .)) != act({sw}, .)")
    return CharacterVector.from_group_function(n, lambda w: sum(1 for p in points if images[w][p] == p))


def coset_permutation_character(H: YoungSubgroup) -> CharacterVector:
    """S_n acting on the left cosets S_n / H."""
    cosets = coset_reps(H.n, H)
    return permutation_character(H.n, cosets, lambda w, c: coset_rep_of(w * c, H))


# class functions on Young subgroups

YoungClass = tuple[Partition, ...]


@dataclass(frozen=True)
class YoungCharacter:
    """Class function on S_{b1} x ... x S_{bm}, keyed by one partition per block."""

    blocks: tuple[int, ...]
    values: tuple[tuple[YoungClass, Fraction], ...]

    def __post_init__(self):
        expected = set(young_classes(self.blocks))
        got = {k for k, _ in self.values}
        if got != expected:
            raise ValueError("values must be given on every class of the Young subgroup exactly once")

    def __getitem__(self, key: YoungClass) -> Fraction:
        return dict(self.values)[tuple(key)]

    @property
    def dim(self) -> Fraction:
        return self[tuple((1,) * b for b in self.blocks)]

    def as_dict(self) -> dict[YoungClass, Fraction]:
        return dict(self.values)


def young_classes(blocks: Sequence[int]) -> list[YoungClass]:
    return list(itertools.product(*(partitions(b) for b in blocks)))


def tensor(*chars: CharacterVector) -> YoungCharacter:
    """Outer tensor product: a class function on the product of the factors' groups."""
    blocks = tuple(c.n for c in chars)
    vals = tuple(
        (key, math.prod((c[k] for c, k in zip(chars, key)), start=Fraction(1)))
        for key in young_classes(blocks)
    )
    return YoungCharacter(blocks, vals)


def trivial_young(blocks: Sequence[int]) -> YoungCharacter:
    return tensor(*(CharacterVector.trivial(b) for b in blocks))


def _union(key: YoungClass) -> Partition:
    return tuple(sorted(itertools.chain.from_iterable(key), reverse=True))


def induce_character(H: YoungSubgroup, chi_H: YoungCharacter, n: int | None = None) -> CharacterVector:
    """Frobenius induction: Ind(mu) = z_mu * sum over H-classes inside mu of chi_H / z_H."""
    n = H.n if n is None else n
    if n != H.n:
        raise ValueError(f"Young subgroup of S_{H.n} induced to S_{n}")
    if tuple(chi_H.blocks) != H.blocks:
        raise ValueError(f"class function on blocks {chi_H.blocks} does not match {H.blocks}")
    acc: dict[Partition, Fraction] = {lam: Fraction(0) for lam in classes(n)}
    for key, v in chi_H.values:
        acc[_union(key)] += v / math.prod(z(k) for k in key)
    return CharacterVector.from_class_function(n, lambda mu: z(mu) * acc[mu])


def induced_trivial(H: YoungSubgroup, n: int | None = None) -> CharacterVector:
    return induce_character(H, trivial_young(H.blocks), n)


def restrict_to_young(chi: CharacterVector, H: YoungSubgroup) -> YoungCharacter:
    if chi.n != H.n:
        raise ValueError("restriction to a subgroup of a different S_n")
    return YoungCharacter(H.blocks, tuple((key, chi[_union(key)]) for key in young_classes(H.blocks)))


def young_inner_product(a: YoungCharacter, b: YoungCharacter) -> Fraction:
    if a.blocks != b.blocks:
        raise ValueError("class functions on different Young subgroups")
    bd = b.as_dict()
    return sum((v * bd[k] / math.prod(z(p) for p in k) for k, v in a.values), Fraction(0))


def format_decomposition(mult: Mapping[Partition, int]) -> dict[str, int]:
    return {partition_key(lam): m for lam, m in mult.items()}


def character_from_traces(n: int, traces: Mapping[Permutation, object]) -> CharacterVector:
    missing = [w for w in all_permutations(n) if w not in traces]
    if missing:
        raise RepresentationError(f"no trace for {missing[0]}")
    return CharacterVector.from_group_function(n, lambda w: traces[w])


def sum_characters(chars: Iterable[CharacterVector], n: int) -> CharacterVector:
    total = CharacterVector.zero(n)
    for c in chars:
        total = total + c
    return total
