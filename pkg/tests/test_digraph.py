import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from oriented_ramsey.constructions import witness
from oriented_ramsey.digraph import (
    AntisymmetryError,
    ArcListFormatError,
    GraphError,
    GraphSizeError,
    LoopError,
    OrientedGraph,
    add_arc,
    arc_count,
    canonical_code,
    canonical_form,
    format_arc_list,
    induced_subgraph,
    members,
    neighborhoods,
    new_graph,
    parse_arc_list,
    vertex_set,
)

from oracles import arc_set, naive_isomorphic, random_arcs


def test_new_graph_bounds():
    g = new_graph(3)
    assert g.order == 3 and arc_count(g) == 0
    assert new_graph(64).order == 64
    with pytest.raises(GraphSizeError):
        new_graph(65)
    with pytest.raises(GraphSizeError):
        new_graph(0)


def test_add_arc():
    g = add_arc(new_graph(3), 0, 1)
    assert g.has_arc(0, 1) and not g.has_arc(1, 0)
    with pytest.raises(AntisymmetryError):
        add_arc(add_arc(new_graph(3), 1, 0), 0, 1)
    with pytest.raises(LoopError):
        add_arc(g, 2, 2)
    with pytest.raises(GraphError):
        add_arc(g, 0, 3)


def test_add_arc_is_idempotent_and_pure():
    g = new_graph(3)
    h = add_arc(g, 0, 1)
    assert arc_count(g) == 0
    assert add_arc(h, 0, 1) == h


def test_neighborhoods_w8():
    n_out, n_in, indep = neighborhoods(witness("W8"), 0)
    assert members(n_out) == [1, 6]
    assert members(n_in) == [2, 7]
    assert members(indep) == [3, 4, 5]


def test_neighborhoods_trivial():
    assert neighborhoods(new_graph(5), 0) == (0, 0, vertex_set([1, 2, 3, 4]))
    assert neighborhoods(new_graph(1), 0) == (0, 0, 0)


def test_induced_subgraph():
    w8 = witness("W8")
    assert induced_subgraph(w8, w8.universe) == w8
    pair = induced_subgraph(w8, vertex_set([0, 1]))
    assert pair.order == 2 and list(pair.arcs()) == [(0, 1)]
    single = induced_subgraph(w8, vertex_set([5]))
    assert single.order == 1 and arc_count(single) == 0
    with pytest.raises(GraphError):
        induced_subgraph(w8, 0)


def test_arc_counts():
    assert arc_count(witness("W8")) == 16
    assert arc_count(witness("W14")) == 42
    assert arc_count(new_graph(9)) == 0


def test_canonical_code_examples():
    w8 = witness("W8")
    perm = [3, 7, 0, 5, 1, 6, 2, 4]
    assert canonical_code(w8) == canonical_code(w8.relabel(perm))
    a = OrientedGraph.from_arcs(2, [(0, 1)])
    b = OrientedGraph.from_arcs(2, [(1, 0)])
    assert canonical_code(a) == canonical_code(b)
    cyclic = OrientedGraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    transitive = OrientedGraph.from_arcs(3, [(0, 1), (1, 2), (0, 2)])
    assert not naive_isomorphic(3, arc_set(cyclic), arc_set(transitive))
    assert canonical_code(cyclic) != canonical_code(transitive)


def test_canonical_code_order_limit():
    with pytest.raises(GraphSizeError):
        canonical_code(witness("W14"))


def test_canonical_code_invariant_under_relabeling():
    rng = random.Random(11)
    for _ in range(30):
        order = rng.randint(1, 8)
        g = OrientedGraph.from_arcs(order, random_arcs(rng, order, rng.random()))
        code = canonical_code(g)
        for _ in range(100):
            perm = list(range(order))
            rng.shuffle(perm)
            assert canonical_code(g.relabel(perm)) == code


def test_canonical_code_separates_exactly_on_small_graphs():
    # every labelled graph on four vertices, compared against brute-force isomorphism
    rng = random.Random(5)
    graphs = [OrientedGraph.from_arcs(4, random_arcs(rng, 4, 0.7)) for _ in range(60)]
    for g in graphs[:20]:
        for h in graphs:
            same = naive_isomorphic(4, arc_set(g), arc_set(h))
            assert (canonical_code(g) == canonical_code(h)) == same


def test_canonical_form_is_isomorphic_and_stable():
    g = OrientedGraph.from_arcs(5, [(0, 1), (1, 2), (3, 1), (4, 0), (2, 4)])
    c = canonical_form(g)
    assert naive_isomorphic(5, arc_set(g), arc_set(c))
    for perm in list(permutations(range(5)))[::17]:
        assert canonical_form(g.relabel(perm)) == c


@st.composite
def arc_streams(draw):
    order = draw(st.integers(1, 9))
    stream = draw(
        st.lists(st.tuples(st.integers(0, order - 1), st.integers(0, order - 1)), max_size=40)
    )
    return order, stream


@settings(max_examples=150, deadline=None)
@given(arc_streams())
def test_random_arc_stream_keeps_invariants(data):
    order, stream = data
    g = new_graph(order)
    for u, v in stream:
        try:
            g = add_arc(g, u, v)
        except (LoopError, AntisymmetryError):
            assert u == v or g.has_arc(v, u)
    for v in range(order):
        assert not g.out_adj[v] >> v & 1
        assert not g.out_adj[v] & g.in_adj[v]
        for w in range(order):
            assert bool(g.out_adj[v] >> w & 1) == bool(g.in_adj[w] >> v & 1)
        n_out, n_in, indep = neighborhoods(g, v)
        parts = [n_out, n_in, indep, 1 << v]
        assert sum(p.bit_count() for p in parts) == order
        assert n_out | n_in | indep | (1 << v) == g.universe


def test_induced_subgraph_composes():
    rng = random.Random(3)
    for _ in range(50):
        g = OrientedGraph.from_arcs(10, random_arcs(rng, 10))
        s = vertex_set(rng.sample(range(10), rng.randint(1, 10)))
        s_members = members(s)
        t = vertex_set(rng.sample(range(len(s_members)), rng.randint(1, len(s_members))))
        composed = induced_subgraph(induced_subgraph(g, s), t)
        direct = induced_subgraph(g, vertex_set(s_members[i] for i in members(t)))
        assert composed == direct


# -- arc-list format ---------------------------------------------------------


def test_format_w8_bit_exact():
    text = format_arc_list(witness("W8"))
    assert text.startswith("n 8\n0 1\n0 6\n1 2\n1 7\n")
    assert text.endswith("\n") and "\r" not in text and " \n" not in text


def test_round_trip():
    rng = random.Random(8)
    for _ in range(40):
        order = rng.randint(1, 20)
        g = OrientedGraph.from_arcs(order, random_arcs(rng, order))
        text = format_arc_list(g)
        assert parse_arc_list(text) == g
        assert format_arc_list(parse_arc_list(text)) == text


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("", 1),
        ("n 3\n0 1\n1 0\n", 3),
        ("n 3\n0 1\n2 2\n", 3),
        ("n 3\n1 2\n0 1\n", 3),
        ("n 3\n0 1\n0 1\n", 3),
        ("n 3\n0 3\n", 2),
        ("n 3\n0 1 \n", 2),
        ("n 3\r\n0 1\n", 1),
        ("m 3\n", 1),
        ("n 65\n", 1),
        ("n 3\n0 -1\n", 2),
        ("n 3\n01 2\n", 2),
    ],
)
def test_parse_rejects_with_line_number(text, lineno):
    with pytest.raises(ArcListFormatError) as exc:
        parse_arc_list(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_reversed_pair_diagnostic_names_both_arcs():
    with pytest.raises(ArcListFormatError, match="1->0"):
        parse_arc_list("n 2\n0 1\n1 0\n")
