import itertools

import pytest
from hypothesis import given, strategies as st

from gkmrep.exact import LinearForm
from gkmrep.graph import (
    Edge,
    MomentGraph,
    SymmetryError,
    apply_right_symmetry,
    apply_symmetry,
    available_symmetries,
    bruhat_graph,
    hessenberg_graph,
    hessenberg_is_degenerate,
    schubert_graph,
    symmetry_group,
    validate,
)
from gkmrep.oracles import q_factorial
from gkmrep.weyl import Permutation, all_permutations, longest_element

P = Permutation.parse
HEX = hessenberg_graph(3, (2, 3, 3))


def hessenberg_functions(n):
    for h in itertools.product(range(1, n + 1), repeat=n):
        if all(h[i] >= i + 1 for i in range(n)) and all(a <= b for a, b in zip(h, h[1:])):
            yield h


def builtins():
    out = [bruhat_graph(n) for n in (1, 2, 3, 4)]
    out += [schubert_graph(3, w) for w in all_permutations(3)]
    out += [hessenberg_graph(n, h) for n in (3, 4) for h in hessenberg_functions(n)]
    return out


@pytest.mark.parametrize("g", builtins(), ids=lambda g: g.name)
def test_builtins_validate(g):
    assert validate(g).ok


@pytest.mark.parametrize("n,v,e", [(2, 2, 1), (3, 6, 9), (4, 24, 72)])
def test_bruhat_sizes(n, v, e):
    g = bruhat_graph(n)
    assert (len(g.vertices), len(g.edges)) == (v, e)


def test_bruhat_2_weight():
    g = bruhat_graph(2)
    assert [edge.weight for edge in g.edges] == [LinearForm([1, -1])]


def test_zero_weight_is_invalid():
    g = bruhat_graph(2)
    bad = MomentGraph(2, g.vertices, (Edge(0, 1, LinearForm([0, 0])),), g.orientation)
    assert validate(bad).kinds() == {"zero-weight"}


def test_orientation_orthogonal_is_invalid():
    g = bruhat_graph(2)
    bad = MomentGraph(2, g.vertices, g.edges, (1, 1))
    assert "orientation" in validate(bad).kinds()


def test_schubert_examples():
    e = schubert_graph(3, Permutation.identity(3))
    assert (len(e.vertices), len(e.edges)) == (1, 0)
    assert len(schubert_graph(3, P("2,3,1")).vertices) == 4
    top = schubert_graph(3, longest_element(3))
    full = bruhat_graph(3)
    assert set(top.vertices) == set(full.vertices) and len(top.edges) == len(full.edges)


def test_hessenberg_full_h_is_bruhat():
    for n in (2, 3, 4):
        g = hessenberg_graph(n, (n,) * n)
        assert g.vertices == bruhat_graph(n).vertices and g.edges == bruhat_graph(n).edges


def test_permutohedral_hexagon():
    assert len(HEX.vertices) == 6 and len(HEX.edges) == 6
    degree = [0] * 6
    for e in HEX.edges:
        degree[e.u] += 1
        degree[e.v] += 1
    assert degree == [2] * 6
    assert HEX.in_degree_census() == (1, 4, 1)


def test_degenerate_hessenberg_flagged():
    g = hessenberg_graph(3, (1, 2, 3))
    assert hessenberg_is_degenerate(3, (1, 2, 3))
    assert len(g.edges) == 0 and g.components() == 6


@pytest.mark.parametrize("h", [(0, 2, 3), (2, 1, 3), (3, 2, 3), (2, 3)])
def test_bad_hessenberg_rejected(h):
    with pytest.raises(ValueError):
        hessenberg_graph(3, h)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_bruhat_census_is_q_factorial(n):
    assert bruhat_graph(n).in_degree_census() == q_factorial(n)


def test_json_roundtrip():
    for g in (bruhat_graph(3), HEX, schubert_graph(3, P("2,3,1"))):
        back = MomentGraph.from_json(g.to_json())
        assert back == g and back.name == g.name


def test_malformed_json():
    with pytest.raises(ValueError):
        MomentGraph.from_dict({"nvars": 2, "vertices": [[1, 2]]})


def test_identity_symmetry():
    g = bruhat_graph(3)
    assert apply_symmetry(g, Permutation.identity(3)).vertex_map == tuple(range(6))


def test_left_translation_acts_on_bruhat_and_hessenberg():
    assert len(symmetry_group(bruhat_graph(3))) == 6
    assert len(symmetry_group(HEX)) == 6


def test_available_symmetries():
    assert len(available_symmetries(bruhat_graph(3), "right")) == 6
    assert [str(w) for w in available_symmetries(HEX, "right")] == ["1,2,3", "3,2,1"]
    s231 = schubert_graph(3, P("2,3,1"))
    assert [str(w) for w in available_symmetries(s231, "left")] == ["1,2,3", "2,1,3"]
    assert [str(w) for w in available_symmetries(s231, "right")] == ["1,2,3", "1,3,2"]
    with pytest.raises(SymmetryError):
        apply_right_symmetry(HEX, P("1,3,2"))


@pytest.mark.parametrize("make", [apply_symmetry, apply_right_symmetry])
def test_symmetries_compose(make):
    g = bruhat_graph(3)
    for v, w in itertools.product(all_permutations(3), repeat=2):
        assert make(g, w).compose(make(g, v)).vertex_map == make(g, w * v).vertex_map


def test_right_symmetry_preserves_weights():
    g = bruhat_graph(3)
    for w in all_permutations(3):
        vmap = apply_right_symmetry(g, w).vertex_map
        for e in g.edges:
            image = g.edge_lookup[frozenset((vmap[e.u], vmap[e.v]))]
            assert any(e.weight.equals_up_to_sign(a) for a in image)


def _edge_set(g):
    return {frozenset((g.vertices[e.u], g.vertices[e.v])) for e in g.edges}


pairs4 = st.tuples(st.sampled_from(list(hessenberg_functions(4))), st.sampled_from(list(hessenberg_functions(4))))


@given(pairs4)
def test_hessenberg_edges_monotone(pair):
    h, k = pair
    if all(a <= b for a, b in zip(h, k)):
        assert _edge_set(hessenberg_graph(4, h)) <= _edge_set(hessenberg_graph(4, k))
