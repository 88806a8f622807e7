import pytest
from hypothesis import given, strategies as st

from qlfd import (Quiver, cartan_matrix, classify_graph, euler_form,
                  euler_matrix, is_tree, quiver_from_json, quiver_to_json,
                  rep_dimension, sinks, sources, stages, sym_form, tits_form)
from qlfd.errors import CyclicQuiver, QuiverInputError
from qlfd.roots import reflect

from conftest import E7_JSON, a2, a3, cycle, d4_in, kronecker


def test_euler_matrix_a2():
    assert euler_matrix(a2()) == [[1, -1], [0, 1]]


def test_euler_matrix_single_vertex():
    assert euler_matrix(Quiver(("v",), ())) == [[1]]


def test_euler_matrix_d4():
    e = euler_matrix(d4_in())
    expect = [[1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1], [0, 0, 0, 1]]
    assert e == expect


def test_euler_form_examples(e7_pair):
    assert euler_form(a2(), (1, 1), (1, 1)) == 1
    assert euler_form(kronecker(), (1, 1), (1, 1)) == 0
    q7, d7 = e7_pair
    assert euler_form(q7, d7, d7) == 1


def test_euler_form_length_mismatch():
    with pytest.raises(QuiverInputError):
        euler_form(a2(), (1, 1, 1), (1, 1))


def test_cartan_and_tits():
    assert cartan_matrix(a2()) == [[2, -1], [-1, 2]]
    assert tits_form(kronecker(), (1, 1)) == 0
    assert tits_form(d4_in(), (1, 1, 1, 2)) == 1


def test_classify_dynkin_and_tame():
    assert classify_graph(a3()).kind == "dynkin"
    assert classify_graph(a3()).name == "A3"
    gk = classify_graph(kronecker())
    assert gk.kind == "tame" and gk.delta == (1, 1)


def test_classify_e8_delta(e8_pair):
    q8, _ = e8_pair
    gc = classify_graph(q8)
    assert gc.kind == "tame" and gc.name == "E~8"
    assert tits_form(q8, gc.delta) == 0
    # delta is the standard affine E8 imaginary root for this labelling
    assert gc.delta == (2, 4, 6, 5, 4, 3, 2, 1, 3)


def test_classify_wild():
    triple = Quiver(("1", "2"), (("1", "2"),) * 3)
    assert classify_graph(triple).kind == "wild"


def test_classify_affine_cycle():
    gc = classify_graph(cycle(3))
    assert gc.kind == "tame" and gc.name == "A~2" and gc.delta == (1, 1, 1)


def test_tree_sources_sinks():
    q = a3((1, 1))
    assert is_tree(q)
    assert sources(q) == ["1"] and sinks(q) == ["3"]
    assert not is_tree(cycle(3))
    assert not is_tree(kronecker())


def test_stages_path():
    st = stages(a3((1, 1)))
    assert st.levels == (("1",), ("2",), ("3",))
    assert min(st.h.values()) == 0


def test_stages_cycle_fails():
    with pytest.raises(CyclicQuiver):
        stages(cycle(3))


def test_stages_d4_bipartite():
    st = stages(d4_in())
    assert st.levels == (("1", "2", "3"), ("4",))
    assert st.top == 1


small_dims = st.lists(st.integers(min_value=-4, max_value=4), min_size=2,
                      max_size=2).map(tuple)


@given(m=small_dims, n=small_dims)
def test_bilinear_identity(m, n):
    q = kronecker()
    assert euler_form(q, m, n) + euler_form(q, n, m) == sym_form(q, m, n)


@given(d=st.lists(st.integers(min_value=-3, max_value=3), min_size=4,
                  max_size=4).map(tuple),
       k=st.sampled_from(["1", "2", "3", "4"]))
def test_weyl_invariance_of_tits_form(d, k):
    q = d4_in()
    assert tits_form(q, reflect(q, k, d)) == tits_form(q, d)


def test_tree_iff_edge_count():
    for q in (a2(), a3(), d4_in(), cycle(3), cycle(4)):
        if q.is_connected():
            assert is_tree(q) == (q.n_arrows == q.n_vertices - 1)


def test_tame_delta_radical(e7_pair):
    q7, _ = e7_pair
    gc = classify_graph(q7)
    assert tits_form(q7, gc.delta) == 0
    n = q7.n_vertices
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        assert sym_form(q7, gc.delta, e) == 0


def test_rep_dimension(e7_pair, e8_pair):
    assert rep_dimension(*e7_pair) == 27
    assert rep_dimension(*e8_pair) == 87


def test_json_roundtrip():
    q, d = quiver_from_json(E7_JSON)
    again = quiver_to_json(q, d)
    assert again["vertices"] == E7_JSON["vertices"]
    assert again["arrows"] == E7_JSON["arrows"]
    assert again["dim"] == E7_JSON["dim"]


def test_json_errors():
    with pytest.raises(QuiverInputError):
        quiver_from_json({"vertices": ["1"], "arrows": [["1", "2"]]})
    with pytest.raises(QuiverInputError):
        quiver_from_json({"vertices": ["1", "1"], "arrows": []})
    with pytest.raises(QuiverInputError):
        quiver_from_json({"vertices": ["1", "2"], "arrows": [["1", "2"]],
                          "dim": {"1": 1}})
