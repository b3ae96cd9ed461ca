"""Springer characters in type A as induced characters.

For a nilpotent of Jordan type lambda, regular in the Levi with blocks
lambda, the Springer representation on the cohomology of the fibre is
Ind from S_lambda to S_n of the trivial character. The Levi recursion
reaches the same character in two steps, through a coarser Levi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .report import Report
from .reps import (
    CharacterVector,
    YoungCharacter,
    conjugate,
    coset_permutation_character,
    induce_character,
    induced_trivial,
    tensor,
)
from .weyl import Partition, Permutation, YoungSubgroup, coset_rep_of, coset_reps, is_partition


@dataclass(frozen=True)
class SpringerInstance:
    n: int
    jordan_type: Partition

    def __post_init__(self):
        lam = tuple(self.jordan_type)
        if not is_partition(lam) or sum(lam) != self.n:
            raise ValueError(f"{lam} is not a partition of {self.n}")
        object.__setattr__(self, "jordan_type", lam)

    @property
    def levi(self) -> YoungSubgroup:
        return YoungSubgroup(self.jordan_type)

    def fixed_point_count(self) -> int:
        return math.factorial(self.n) // math.prod(math.factorial(p) for p in self.jordan_type)

    def is_regular(self) -> bool:
        return self.jordan_type == (self.n,)


def springer_character(inst: SpringerInstance) -> CharacterVector:
    return induced_trivial(inst.levi, inst.n)


def _distributions(parts: Sequence[int], blocks: Sequence[int]) -> Iterator[tuple[Partition, ...]]:
    """Ways to split the multiset ``parts`` into partitions of each block size."""
    if not blocks:
        if not parts:
            yield ()
        return
    size, rest_blocks = blocks[0], blocks[1:]

    def pick(pool: list[int], need: int, start: int, chosen: list[int]):
        if need == 0:
            yield tuple(chosen), pool
            return
        last = None
        for k in range(start, len(pool)):
            p = pool[k]
            if p > need or p == last:
                continue
            last = p
            yield from pick(pool[:k] + pool[k + 1:], need - p, k, chosen + [p])

    seen = set()
    for first, rest in pick(sorted(parts, reverse=True), size, 0, []):
        key = (first, tuple(rest))
        if key in seen:
            continue
        seen.add(key)
        for tail in _distributions(rest, rest_blocks):
            yield (first,) + tail


def block_type_assignments(lam: Partition, levi_blocks: Sequence[int]) -> list[tuple[Partition, ...]]:
    """All ways the Jordan blocks of ``lam`` can sit inside the Levi blocks."""
    return list(_distributions(list(lam), list(levi_blocks)))


def _block_character(size: int, block_type: Partition) -> CharacterVector:
    # bottom of the recursion: regular in the block gives the trivial character
    if block_type == (size,):
        return CharacterVector.trivial(size)
    inner = SpringerInstance(size, block_type)
    return springer_via_levi_recursion(inner, block_type, tuple((p,) for p in block_type))


def springer_via_levi_recursion(
    inst: SpringerInstance,
    levi_blocks: Sequence[int],
    block_types: Sequence[Partition] | None = None,
) -> CharacterVector:
    """Induce the tensor product of the block Springer characters from the Levi.

    ``block_types[j]`` is the Jordan type of the nilpotent restricted to Levi
    block j; if omitted the first compatible assignment is used.
    """
    blocks = tuple(int(b) for b in levi_blocks)
    if sum(blocks) != inst.n or any(b <= 0 for b in blocks):
        raise ValueError(f"{blocks} is not a composition of {inst.n}")
    if block_types is None:
        options = block_type_assignments(inst.jordan_type, blocks)
        if not options:
            raise ValueError(f"Jordan type {inst.jordan_type} does not fit in Levi blocks {blocks}")
        block_types = options[0]
    block_types = tuple(tuple(t) for t in block_types)
    if len(block_types) != len(blocks):
        raise ValueError("one Jordan type per Levi block is needed")
    for b, t in zip(blocks, block_types):
        if not is_partition(t) or sum(t) != b:
            raise ValueError(f"{t} is not a partition of the block size {b}")
    union = tuple(sorted((p for t in block_types for p in t), reverse=True))
    if union != inst.jordan_type:
        raise ValueError(f"block types {block_types} do not make up Jordan type {inst.jordan_type}")
    chi_L: YoungCharacter = tensor(*(_block_character(b, t) for b, t in zip(blocks, block_types)))
    return induce_character(YoungSubgroup(blocks), chi_L, inst.n)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    for mask in range(2 ** (n - 1)):
        parts, cur = [], 1
        for k in range(n - 1):
            if mask >> k & 1:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        yield tuple(parts)


def compatible_levis(inst: SpringerInstance) -> list[tuple[tuple[int, ...], tuple[Partition, ...]]]:
    """Every (Levi composition, block type assignment) pair containing the nilpotent."""
    return [
        (blocks, types)
        for blocks in compositions(inst.n)
        for types in block_type_assignments(inst.jordan_type, blocks)
    ]


@dataclass(frozen=True)
class OrbitModel:
    cosets: tuple[Permutation, ...]
    act: Callable[[Permutation, Permutation], Permutation]
    character: CharacterVector


def fixed_point_orbit_model(inst: SpringerInstance) -> OrbitModel:
    """S_n permuting the cosets S_n / S_lambda, checked against springer_character."""
    H = inst.levi
    cosets = tuple(coset_reps(inst.n, H))

    def act(w: Permutation, c: Permutation) -> Permutation:
        return coset_rep_of(w * c, H)

    chi = coset_permutation_character(H)
    if chi != springer_character(inst):
        raise AssertionError(f"coset model {chi} disagrees with the induced character")
    return OrbitModel(cosets, act, chi)


def parametrization_check(n: int) -> Report:
    """Which reading of the Levi (Jordan type or its conjugate) fits the anchor cases.

    x = 0 has Jordan type (1^n) and its fibre is the whole flag variety, whose
    representation is regular; a regular x has a one-point fibre.
    """
    rep = Report(f"Levi parametrization n={n}")
    zero, regular = SpringerInstance(n, (1,) * n), SpringerInstance(n, (n,))
    direct = {
        "zero": induced_trivial(YoungSubgroup(zero.jordan_type)),
        "regular": induced_trivial(YoungSubgroup(regular.jordan_type)),
    }
    dual = {
        "zero": induced_trivial(YoungSubgroup(conjugate(zero.jordan_type))),
        "regular": induced_trivial(YoungSubgroup(conjugate(regular.jordan_type))),
    }
    reg, triv = CharacterVector.regular(n), CharacterVector.trivial(n)
    direct_ok = direct["zero"] == reg and direct["regular"] == triv
    dual_ok = dual["zero"] == reg and dual["regular"] == triv
    rep.check("Jordan-type reading fits x = 0 and x regular", direct_ok)
    rep.observe("conjugate reading fits x = 0 and x regular", dual_ok)
    rep.data.update({"direct": direct_ok, "dual": dual_ok})
    return rep
