from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from bruijn_mis.budget import BudgetExceeded
from bruijn_mis.words import (
    adjacent,
    build_graph,
    cycle_of,
    export_dot,
    pack,
    parse_word,
    theta,
    theta_cycles,
    unpack,
    word_str,
)


def w(s):
    return parse_word(s)


def test_theta_examples():
    assert theta(w("012")) == w("120")
    assert theta(w("000")) == w("000")
    assert theta(w("010")) == w("100")


def test_build_graph_b33():
    g = build_graph(3, 3)
    assert g.num_nodes == 27
    assert len(g.three_cycles()) == 8
    assert len(g.loops()) == 3


def test_build_graph_single_letter():
    g = build_graph(1, 3)
    assert list(g.nodes()) == [(0, 0, 0)]
    assert g.three_cycles() == []


def test_b25_orbit_sizes():
    # frozen from a naive rotation closure: two fixed points, six 5-orbits
    sizes = sorted(len(c) for c in theta_cycles(2, 5))
    assert sizes == [1, 1, 5, 5, 5, 5, 5, 5]
    assert build_graph(2, 5).num_nodes == 32


def test_adjacent():
    assert adjacent(w("012"), w("120"))
    assert adjacent(w("110"), w("100"))
    g = build_graph(2, 3)
    assert g.has_edge(w("000"), w("000"))
    assert not build_graph(2, 3, drop_self_loops=True).has_edge(w("000"), w("000"))
    with pytest.raises(ValueError):
        adjacent(w("01"), w("010"))


def test_cycle_of():
    assert cycle_of(w("010")) == {w("010"), w("100"), w("001")}
    assert cycle_of(w("111")) == {w("111")}
    assert cycle_of(w("101")) == {w("101"), w("011"), w("110")}


def test_export_dot_b23():
    dot = export_dot(build_graph(2, 3))
    assert dot.count("->") == 16
    assert sum(1 for line in dot.splitlines() if line.strip().startswith('"') and "->" not in line) == 8
    assert export_dot(build_graph(2, 3)) == dot


def test_export_dot_highlight():
    mis = [w(s) for s in ("000", "010", "011", "012", "020", "022", "210", "211", "212")]
    dot = export_dot(build_graph(3, 3), highlight=mis)
    assert dot.count("fillcolor=lightgray") == 9
    with pytest.raises(ValueError):
        export_dot(build_graph(2, 3), highlight=[w("012")])


def test_bold_theta_marks_only_cycle_edges():
    dot = export_dot(build_graph(2, 3), bold_theta=True)
    # two 3-cycles, three θ-edges each; loops are not bold
    assert dot.count("style=bold") == 6


def test_budget_guard(monkeypatch):
    with pytest.raises(BudgetExceeded):
        build_graph(10, 7)
    monkeypatch.setenv("BRUIJN_MIS_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        build_graph(3, 3)


def test_word_str_wide_alphabet():
    assert word_str((0, 1, 2)) == "012"
    assert word_str((0, 11, 2), 12) == "0,11,2"


@pytest.mark.parametrize("d", range(1, 7))
def test_orbit_partition(d):
    cycles = theta_cycles(d, 3)
    nodes = [x for c in cycles for x in c]
    assert len(nodes) == len(set(nodes)) == d**3
    assert sum(len(c) == 3 for c in cycles) == (d**3 - d) // 3
    assert sum(len(c) == 1 for c in cycles) == d


@given(st.integers(1, 5), st.integers(1, 5))
def test_edge_count(d, D):
    g = build_graph(d, D)
    assert g.num_edges == d ** (D + 1) == sum(1 for _ in g.edges())
    assert build_graph(d, D, drop_self_loops=True).num_edges == g.num_edges - d


words3 = st.integers(1, 9).flatmap(lambda d: st.tuples(*[st.integers(0, d - 1)] * 3).map(lambda t: (d, t)))


@given(words3)
def test_theta_cubed_is_identity(dw):
    _, x = dw
    assert theta(theta(theta(x))) == x


@given(words3)
def test_theta_edge_on_non_loops(dw):
    _, x = dw
    if len(set(x)) > 1:
        assert adjacent(x, theta(x))


@given(words3)
def test_pack_roundtrip(dw):
    d, x = dw
    assert unpack(pack(x, d), d, 3) == x
