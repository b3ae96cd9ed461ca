"""Brute-force reference computations, kept independent of the main pipeline.

None of these use linear algebra or the GKM machinery; they count
permutations or tableaux directly.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from typing import Sequence

from .weyl import Partition, Permutation, all_permutations


def q_factorial(n: int) -> tuple[int, ...]:
    """Coefficients of [1]_q [2]_q ... [n]_q."""
    coeffs = [1]
    for k in range(1, n + 1):
        out = [0] * (len(coeffs) + k - 1)
        for i, c in enumerate(coeffs):
            for j in range(k):
                out[i + j] += c
        coeffs = out
    return tuple(coeffs)


def inversions(w: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def length_census(n: int) -> tuple[int, ...]:
    counts = Counter(inversions(w) for w in itertools.permutations(range(1, n + 1)))
    return tuple(counts[k] for k in range(max(counts) + 1))


def eulerian(n: int) -> tuple[int, ...]:
    """Permutations of n counted by descents."""
    counts = Counter(
        sum(1 for i in range(n - 1) if w[i] > w[i + 1]) for w in itertools.permutations(range(1, n + 1))
    )
    return tuple(counts[k] for k in range(n))


def hessenberg_betti(n: int, h: Sequence[int]) -> tuple[int, ...]:
    """Permutations counted by h-inversions: i < j <= h(i) with w(i) > w(j)."""
    counts = Counter(
        sum(1 for i in range(n) for j in range(i + 1, h[i]) if w[i] > w[j])
        for w in itertools.permutations(range(1, n + 1))
    )
    return tuple(counts[k] for k in range(max(counts) + 1))


def bruhat_leq_tableau(x: Sequence[int], y: Sequence[int]) -> bool:
    """Tableau criterion: sorted prefixes of x are entrywise below those of y."""
    return all(
        all(a <= b for a, b in zip(sorted(x[:i]), sorted(y[:i]))) for i in range(1, len(x))
    )


def schubert_betti(w: Sequence[int]) -> tuple[int, ...]:
    """Elements of the lower interval [e, w] counted by length."""
    n = len(w)
    counts = Counter(inversions(x) for x in itertools.permutations(range(1, n + 1)) if bruhat_leq_tableau(x, w))
    return tuple(counts[k] for k in range(max(counts) + 1))


def class_sizes_by_enumeration(n: int) -> dict[Partition, int]:
    return dict(Counter(w.cycle_type() for w in all_permutations(n)))


def _ssyt_count(shape: Partition, content: Sequence[int]) -> int:
    """Semistandard tableaux of ``shape`` with ``content[k]`` entries equal to k+1.

    Fills entries 1, 2, ... in turn: the cells holding value k form a
    horizontal strip added to the shape filled so far.
    """

    def strips(inner: tuple[int, ...], outer: Partition, size: int):
        rows = len(outer)
        inner = inner + (0,) * (rows - len(inner))

        def rec(r: int, left: int, acc: list[int]):
            if r == rows:
                if left == 0:
                    yield tuple(acc)
                return
            # horizontal strip: new row length at most the old length of the row above
            cap = outer[r] if r == 0 else min(outer[r], inner[r - 1])
            for new in range(inner[r], cap + 1):
                if new - inner[r] > left:
                    break
                yield from rec(r + 1, left - (new - inner[r]), acc + [new])

        yield from rec(0, size, [])

    def count(filled: tuple[int, ...], k: int) -> int:
        if k == len(content):
            return 1 if filled == tuple(shape) + (0,) * (len(filled) - len(shape)) else 0
        return sum(count(nxt, k + 1) for nxt in strips(filled, shape, content[k]))

    return count(tuple(0 for _ in shape), 0)


def kostka(nu: Partition, lam: Sequence[int]) -> int:
    """K_{nu, lam}: semistandard tableaux of shape nu and content lam."""
    if sum(nu) != sum(lam):
        return 0
    return _ssyt_count(tuple(nu), tuple(lam))


def young_subgroup_coset_count(lam: Sequence[int]) -> int:
    return math.factorial(sum(lam)) // math.prod(math.factorial(p) for p in lam)


def fixed_points(n: int, act, points) -> dict[Permutation, int]:
    return {w: sum(1 for p in points if act(w, p) == p) for w in all_permutations(n)}
