import math

import pytest

from gkmrep.oracles import kostka
from gkmrep.reps import CharacterVector, decompose
from gkmrep.springer import (
    SpringerInstance,
    block_type_assignments,
    compatible_levis,
    fixed_point_orbit_model,
    parametrization_check,
    springer_character,
    springer_via_levi_recursion,
)
from gkmrep.weyl import Permutation, partitions

ALL = [(n, lam) for n in range(1, 6) for lam in partitions(n)]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_anchor_cases(n):
    assert springer_character(SpringerInstance(n, (n,))) == CharacterVector.trivial(n)
    assert springer_character(SpringerInstance(n, (1,) * n)) == CharacterVector.regular(n)


def test_22():
    chi = springer_character(SpringerInstance(4, (2, 2)))
    assert chi.dim == 6
    assert decompose(chi) == {(4,): 1, (3, 1): 1, (2, 2): 1}


@pytest.mark.parametrize("n,lam", ALL)
def test_dimension_is_fixed_point_count(n, lam):
    inst = SpringerInstance(n, lam)
    assert springer_character(inst).dim == math.factorial(n) // math.prod(math.factorial(p) for p in lam)
    assert springer_character(inst).dim == inst.fixed_point_count()


@pytest.mark.parametrize("n,lam", ALL)
def test_multiplicities_are_kostka(n, lam):
    mult = decompose(springer_character(SpringerInstance(n, lam)))
    assert mult[lam] == 1
    assert all(mult.get(nu, 0) == kostka(nu, lam) for nu in partitions(n))


def test_levi_recursion_examples():
    inst = SpringerInstance(3, (2, 1))
    assert springer_via_levi_recursion(inst, (3,)) == springer_character(inst)
    assert springer_via_levi_recursion(inst, (2, 1), ((2,), (1,))) == CharacterVector(3, (3, 1, 0))
    inst = SpringerInstance(4, (2, 1, 1))
    chi = springer_via_levi_recursion(inst, (2, 2), ((2,), (1, 1)))
    assert chi == springer_character(inst) and chi.dim == 12


@pytest.mark.parametrize("n,lam", [c for c in ALL if c[0] <= 4])
def test_levi_recursion_all_compatible(n, lam):
    inst = SpringerInstance(n, lam)
    target = springer_character(inst)
    pairs = compatible_levis(inst)
    assert pairs
    for blocks, types in pairs:
        assert springer_via_levi_recursion(inst, blocks, types) == target


def test_compatible_levi_count():
    assert sum(len(compatible_levis(SpringerInstance(n, lam))) for n in range(1, 5) for lam in partitions(n)) == 34


def test_block_assignments():
    assert block_type_assignments((2, 1, 1), (2, 2)) == [((2,), (1, 1)), ((1, 1), (2,))]
    assert block_type_assignments((3,), (2, 1)) == []


def test_recursion_rejects_bad_blocks():
    inst = SpringerInstance(4, (2, 2))
    with pytest.raises(ValueError):
        springer_via_levi_recursion(inst, (3, 1))
    with pytest.raises(ValueError):
        springer_via_levi_recursion(inst, (2, 2), ((2,), (1, 1)))
    with pytest.raises(ValueError):
        SpringerInstance(4, (3, 2))


def test_orbit_model():
    m = fixed_point_orbit_model(SpringerInstance(3, (3,)))
    assert len(m.cosets) == 1 and m.character == CharacterVector.trivial(3)
    m = fixed_point_orbit_model(SpringerInstance(3, (2, 1)))
    assert len(m.cosets) == 3 and m.character == CharacterVector(3, (3, 1, 0))
    m = fixed_point_orbit_model(SpringerInstance(3, (1, 1, 1)))
    assert len(m.cosets) == 6 and m.character == CharacterVector.regular(3)
    e = Permutation.identity(3)
    # simply transitive: only the identity fixes a coset
    for w in m.cosets:
        fixed = [c for c in m.cosets if m.act(w, c) == c]
        assert (w == e and len(fixed) == 6) or (w != e and not fixed)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_parametrization(n):
    rep = parametrization_check(n)
    assert rep.ok and rep.data == {"direct": True, "dual": False}
