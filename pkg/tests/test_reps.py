import math

import pytest
from hypothesis import given, strategies as st

from gkmrep.oracles import class_sizes_by_enumeration, kostka
from gkmrep.reps import (
    CharacterVector,
    NotACharacterError,
    RepresentationError,
    class_size,
    classes,
    conjugate,
    coset_permutation_character,
    decompose,
    induce_character,
    induced_trivial,
    inner_product,
    irreducible_character,
    permutation_character,
    restrict_to_young,
    tensor,
    trivial_young,
    young_inner_product,
)
from gkmrep.springer import compositions
from gkmrep.weyl import YoungSubgroup, all_permutations, partitions


def cv(n, *values):
    return CharacterVector(n, values)


def test_class_order_identity_first():
    assert classes(3) == ((1, 1, 1), (2, 1), (3,))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_class_sizes_match_enumeration(n):
    assert {lam: class_size(lam) for lam in partitions(n)} == class_sizes_by_enumeration(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_trivial_and_sign(n):
    assert irreducible_character((n,)) == CharacterVector.trivial(n)
    assert irreducible_character((1,) * n) == CharacterVector.sign(n)


def test_standard_character_s3():
    assert irreducible_character((2, 1)) == cv(3, 2, 0, -1)


def test_conjugate_tensors_with_sign():
    for lam in partitions(5):
        assert irreducible_character(conjugate(lam)) == irreducible_character(lam) * CharacterVector.sign(5)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_orthogonality(n):
    for a in partitions(n):
        for b in partitions(n):
            total = sum(
                class_size(mu) * irreducible_character(a)[mu] * irreducible_character(b)[mu] for mu in partitions(n)
            )
            assert total == (math.factorial(n) if a == b else 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_dimensions_square_sum(n):
    assert sum(irreducible_character(lam).dim ** 2 for lam in partitions(n)) == math.factorial(n)


def test_permutation_character_examples():
    assert permutation_character(3, ["*"], lambda w, p: p) == CharacterVector.trivial(3)
    assert permutation_character(3, all_permutations(3), lambda w, x: w * x) == cv(3, 6, 0, 0)
    assert coset_permutation_character(YoungSubgroup((2, 1))) == cv(3, 3, 1, 0)


def test_permutation_character_rejects_non_actions():
    with pytest.raises(RepresentationError):
        permutation_character(3, all_permutations(3), lambda w, x: x * w)


def test_induced_trivial_examples():
    assert induced_trivial(YoungSubgroup((3,))) == CharacterVector.trivial(3)
    for n in (2, 3, 4):
        assert induced_trivial(YoungSubgroup((1,) * n)) == CharacterVector.regular(n)
    assert induced_trivial(YoungSubgroup((2, 1))) == cv(3, 3, 1, 0)


def test_induce_character_examples():
    H = YoungSubgroup((2, 1))
    assert induce_character(H, trivial_young((2, 1)), 3) == induced_trivial(H)
    chi = induce_character(H, tensor(CharacterVector.sign(2), CharacterVector.trivial(1)), 3)
    assert chi.dim == 3 and decompose(chi) == {(2, 1): 1, (1, 1, 1): 1}
    std = irreducible_character((2, 1))
    assert induce_character(YoungSubgroup((3,)), tensor(std), 3) == std


def test_decompose_examples():
    assert decompose(CharacterVector.regular(3)) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    assert decompose(cv(3, 3, 1, 0)) == {(3,): 1, (2, 1): 1}
    assert decompose(CharacterVector.trivial(4)) == {(4,): 1}
    assert list(decompose(CharacterVector.regular(3))) == [(3,), (2, 1), (1, 1, 1)]


def test_decompose_rejects_virtual():
    with pytest.raises(NotACharacterError):
        decompose(cv(3, 1, 0, 0))
    with pytest.raises(NotACharacterError):
        decompose(CharacterVector.trivial(3) - CharacterVector.sign(3))


def test_wrong_length_rejected():
    with pytest.raises(ValueError):
        cv(3, 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_frobenius_matches_cosets(n):
    for blocks in compositions(n):
        H = YoungSubgroup(blocks)
        assert induced_trivial(H) == coset_permutation_character(H)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_young_multiplicities_are_kostka(n):
    for lam in partitions(n):
        mult = decompose(induced_trivial(YoungSubgroup(lam)))
        assert {nu: mult.get(nu, 0) for nu in partitions(n)} == {nu: kostka(nu, lam) for nu in partitions(n)}


def test_kostka_oracle_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3, 2), (1,) * 5) == 5
    assert kostka((2, 2), (3, 1)) == 0
    assert kostka((3, 1), (2, 2)) == 1


cases = st.integers(2, 5).flatmap(
    lambda n: st.tuples(st.sampled_from(list(compositions(n))), st.sampled_from(partitions(n)))
)


@given(cases, st.data())
def test_frobenius_reciprocity(case, data):
    blocks, nu = case
    H = YoungSubgroup(blocks)
    parts = [data.draw(st.sampled_from(partitions(b))) for b in blocks]
    chi_H = tensor(*(irreducible_character(p) for p in parts))
    chi = irreducible_character(nu)
    assert inner_product(induce_character(H, chi_H), chi) == young_inner_product(chi_H, restrict_to_young(chi, H))
