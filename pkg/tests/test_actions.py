import pytest
from hypothesis import given, strategies as st

from gkmrep.actions import (
    act_on_class,
    action_on_ordinary,
    character_of_action,
    degree_characters,
    invariant_dim,
    left_action_on_class,
    right_action_on_class,
    stability_failures,
    total_character,
    vertex_permutation_character,
)
from gkmrep.exact import LinearForm, Polynomial
from gkmrep.gkm import gkm_piece, is_gkm_class
from gkmrep.graph import SymmetryError, available_symmetries, bruhat_graph, hessenberg_graph, schubert_graph
from gkmrep.reps import CharacterVector, RepresentationError, decompose
from gkmrep.weyl import Permutation, all_permutations

P = Permutation.parse
B2, B3 = bruhat_graph(2), bruhat_graph(3)
HEX = hessenberg_graph(3, (2, 3, 3))
S = P("2,1")
ALPHA = LinearForm([1, -1]).to_polynomial()
ZERO2 = Polynomial.zero(2)


def test_identity_acts_trivially():
    e = Permutation.identity(3)
    for cls in gkm_piece(B3, 2).basis:
        assert right_action_on_class(B3, e, cls) == cls
        assert left_action_on_class(B3, e, cls) == cls


def test_bruhat2_examples():
    one = Polynomial.constant(2, 1)
    assert right_action_on_class(B2, S, (one, one)) == (one, one)
    assert left_action_on_class(B2, S, (one, one)) == (one, one)
    assert right_action_on_class(B2, S, (ZERO2, ALPHA)) == (ALPHA, ZERO2)
    assert left_action_on_class(B2, S, (ZERO2, ALPHA)) == (-ALPHA, ZERO2)
    assert is_gkm_class(B2, (ALPHA, ZERO2))


def test_degree_zero_is_trivial():
    for g in (B2, B3, HEX):
        am = action_on_ordinary(g, "left", 0)
        assert all(m.is_identity() for m in am.matrices.values())


def test_left_action_trivial_on_flag_variety():
    for i in range(4):
        am = action_on_ordinary(B3, "left", i)
        assert all(m.is_identity() for m in am.matrices.values())


def test_right_degree_one_character():
    am = action_on_ordinary(B3, "right", 1)
    assert am.dim == 2
    chi = character_of_action(am)
    assert (chi[(1, 1, 1)], chi[(2, 1)], chi[(3,)]) == (2, 0, -1)


def test_right_degree_characters_bruhat3():
    chars = [str(c) for c in degree_characters(B3, "right")]
    assert chars == ["(1, 1, 1)", "(2, 0, -1)", "(2, 0, -1)", "(1, -1, 1)"]


@pytest.mark.parametrize("n", [2, 3])
def test_right_total_is_regular(n):
    g = bruhat_graph(n)
    total = total_character(g, "right")
    assert total == CharacterVector.regular(n) == vertex_permutation_character(g, "right")


def test_regular_decomposition():
    assert decompose(total_character(B3, "right")) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}


@pytest.mark.parametrize("kind", ["left", "right"])
def test_homomorphism_on_s3(kind):
    for i in range(4):
        assert action_on_ordinary(B3, kind, i).is_homomorphism()


@pytest.mark.parametrize("kind", ["left", "right"])
def test_stability_exhaustive_n3(kind):
    tested, bad = stability_failures(B3, kind, range(4))
    assert tested == 6 * sum(gkm_piece(B3, i).dim for i in range(4))
    assert bad == []


@pytest.mark.parametrize("kind", ["left", "right"])
def test_stability_sampled_n4(kind):
    g = bruhat_graph(4)
    group = [P("2,1,3,4"), P("1,3,2,4"), P("1,2,4,3"), P("4,3,2,1"), P("2,3,4,1")]
    _, bad = stability_failures(g, kind, range(3), group)
    assert bad == []


def test_hessenberg_left_action():
    chars = [str(c) for c in degree_characters(HEX, "left")]
    assert chars == ["(1, 1, 1)", "(4, 2, 1)", "(1, 1, 1)"]
    am = action_on_ordinary(HEX, "left", 1)
    assert invariant_dim(am) == 2
    assert decompose(character_of_action(am)) == {(3,): 2, (2, 1): 1}


def test_hessenberg_has_no_full_right_action():
    with pytest.raises(SymmetryError):
        total_character(HEX, "right")


def test_partial_group_has_no_character():
    s231 = schubert_graph(3, P("2,3,1"))
    am = action_on_ordinary(s231, "right", 1, group=available_symmetries(s231, "right"))
    assert am.is_homomorphism()
    with pytest.raises(RepresentationError):
        character_of_action(am)


def test_unknown_kind():
    with pytest.raises(ValueError):
        action_on_ordinary(B3, "diagonal", 1)


perms3 = st.sampled_from(all_permutations(3))
classes3 = st.integers(0, 2).flatmap(lambda i: st.sampled_from(gkm_piece(B3, i).basis))
scalars3 = st.lists(st.integers(-2, 2), min_size=3, max_size=3).map(lambda c: LinearForm(c).to_polynomial())


@given(perms3, classes3, scalars3)
def test_right_action_is_linear_over_scalars(w, cls, p):
    scaled = tuple(p * f for f in cls)
    image = right_action_on_class(B3, w, cls)
    assert right_action_on_class(B3, w, scaled) == tuple(p * f for f in image)


@given(perms3, classes3, scalars3)
def test_left_action_twisted_rule(w, cls, p):
    scaled = tuple(p * f for f in cls)
    image = left_action_on_class(B3, w, cls)
    wp = w.act_on_polynomial(p)
    assert left_action_on_class(B3, w, scaled) == tuple(wp * f for f in image)


@given(perms3, perms3, classes3)
def test_left_action_composes(v, w, cls):
    assert act_on_class(B3, "left", v * w, cls) == act_on_class(B3, "left", v, act_on_class(B3, "left", w, cls))


@given(perms3, perms3, classes3)
def test_right_action_composes(v, w, cls):
    # f . (vw) = (f . v) . w
    assert act_on_class(B3, "right", v * w, cls) == act_on_class(B3, "right", w, act_on_class(B3, "right", v, cls))
