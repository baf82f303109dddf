"""Edge-set machinery, bridge detection, poset enumeration, and the
deletion-contraction chromatic oracle, cross-checked against networkx."""

import math
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupcolor.graphs import (
    EdgeSet,
    canonical_bits,
    chromatic_oracle,
    components,
    containment_count,
    enumerate_poset,
    girth,
    is_isthmus_free,
    iso_class_blocks,
    poset_to_json,
    vertex_pairs,
)
from groupcolor.posetlin import RationalPoly


def _nx_graph(edge_set: EdgeSet) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(edge_set.v))
    g.add_edges_from(edge_set.edges())
    return g


def test_vertex_pairs_lexicographic():
    assert vertex_pairs(4) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def test_edgeset_text_round_trip(c4_v4):
    text = c4_v4.to_text()
    assert text == "v=4;edges=01,03,12,23"
    assert EdgeSet.from_text(text) == c4_v4
    mask_text = c4_v4.to_text(mask_form=True)
    assert EdgeSet.from_text(mask_text) == c4_v4
    assert EdgeSet.from_text("v=3;edges=") == EdgeSet(3, 0)


def test_edgeset_rejects_bad_input():
    with pytest.raises(ValueError):
        EdgeSet.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        EdgeSet.from_edges(3, [(0, 5)])
    with pytest.raises(ValueError):
        EdgeSet(3, 1 << 3)
    with pytest.raises(ValueError):
        EdgeSet.from_text("v=3;edges=0x")
    with pytest.raises(ValueError):
        EdgeSet.from_text("edges=01")


def test_components_examples(k4_v4):
    assert components(EdgeSet(4, 0)) == 4
    triangle = EdgeSet.from_edges(4, [(1, 2), (1, 3), (2, 3)])
    assert components(triangle) == 2
    assert components(k4_v4) == 1


def test_is_isthmus_free_examples(c4_v4):
    assert is_isthmus_free(EdgeSet(4, 0)) is True
    assert is_isthmus_free(EdgeSet.from_edges(3, [(0, 1)])) is False
    assert is_isthmus_free(c4_v4) is True
    pendant = EdgeSet.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert is_isthmus_free(pendant) is False


def test_girth_examples(k3_v3, c4_v4):
    assert girth(k3_v3) == 3
    assert girth(c4_v4) == 4
    assert girth(EdgeSet(4, 0)) == math.inf


def test_poset_counts(p3, p4):
    assert len(p3) == 2
    assert len(p4) == 15
    assert len(enumerate_poset(2)) == 1
    assert p3.members[0].bits == 0
    assert p4.members[0].bits == 0


def test_poset_rejects_out_of_cap():
    with pytest.raises(ValueError):
        enumerate_poset(1)
    with pytest.raises(ValueError):
        enumerate_poset(7)
    # the cap is configurable in both directions
    with pytest.raises(ValueError):
        enumerate_poset(5, cap=4)
    assert len(enumerate_poset(4, cap=4)) == 15


@pytest.mark.parametrize("v", [2, 3, 4, 5])
def test_poset_matches_networkx_bridge_filter(v):
    expected = 0
    for bits in range(1 << comb(v, 2)):
        es = EdgeSet(v, bits)
        bridge_free = not any(True for _ in nx.bridges(_nx_graph(es)))
        assert is_isthmus_free(es) == bridge_free
        expected += bridge_free
    assert len(enumerate_poset(v, cap=6)) == expected


def test_linear_extension_property(p4, p5):
    for poset in (p4, p5):
        for i in range(len(poset)):
            for j in range(len(poset)):
                if poset.leq(i, j):
                    assert i <= j


def test_sorted_by_edge_count_then_mask(p5):
    keys = [(m.edge_count, m.bits) for m in p5.members]
    assert keys == sorted(keys)


def test_girth_and_cycles_on_poset_members(p4, p5):
    for poset in (p4, p5):
        for member in poset.members:
            if member.edge_count == 0:
                assert girth(member) == math.inf
                continue
            g = girth(member)
            assert g <= member.edge_count
            assert g == nx.girth(_nx_graph(member))


def test_components_match_networkx(p5):
    for member in p5.members:
        assert components(member) == nx.number_connected_components(_nx_graph(member))


def test_iso_class_sizes(p3, p4):
    assert [len(ix) for _, ix in iso_class_blocks(p3)] == [1, 1]
    blocks = iso_class_blocks(p4)
    assert [len(ix) for _, ix in blocks] == [1, 6, 3, 4, 1]
    assert [label for label, _ in blocks] == ["K4", "diamond", "C4", "K3", "empty"]


def test_iso_class_incidence_patterns(p4):
    blocks = dict(iso_class_blocks(p4))
    for c4 in blocks["C4"]:
        assert containment_count(p4, c4, blocks["diamond"]) == 2
    for tri in blocks["K3"]:
        assert containment_count(p4, tri, blocks["diamond"]) == 3
    for dia in blocks["diamond"]:
        inside_c4 = sum(1 for c in blocks["C4"] if p4.leq(c, dia))
        inside_tri = sum(1 for t in blocks["K3"] if p4.leq(t, dia))
        assert inside_c4 == 1 and inside_tri == 2


def test_canonical_bits_is_relabeling_invariant():
    es = EdgeSet.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    relabeled = EdgeSet.from_edges(4, [(2, 0), (0, 3), (3, 1), (2, 1)])
    assert canonical_bits(4, es.bits) == canonical_bits(4, relabeled.bits)


def test_chromatic_oracle_classics(k3_v3, k4_v4, c4_v4):
    assert chromatic_oracle(k3_v3) == RationalPoly.of([0, 2, -3, 1])  # f(f-1)(f-2)
    assert chromatic_oracle(k4_v4) == RationalPoly.of([0, -6, 11, -6, 1])
    assert chromatic_oracle(EdgeSet(4, 0)) == RationalPoly.monomial(4)
    # C4: (f-1)^4 + (f-1)
    assert chromatic_oracle(c4_v4) == RationalPoly.of([0, -3, 6, -4, 1])


def test_chromatic_oracle_handles_bridges_and_isolated_vertices():
    # single edge plus two isolated vertices: f(f-1) * f^2
    edge = EdgeSet.from_edges(4, [(0, 1)])
    assert chromatic_oracle(edge) == RationalPoly.of([0, 0, 0, -1, 1])


def test_chromatic_oracle_matches_networkx_on_p4(p4):
    try:
        from networkx.algorithms.polynomials import chromatic_polynomial
    except ImportError:
        pytest.skip("networkx without chromatic_polynomial")
    import sympy

    f = sympy.Symbol("x")
    for member in p4.members:
        ours = chromatic_oracle(member)
        theirs = sympy.Poly(chromatic_polynomial(_nx_graph(member)), f)
        coeffs = list(reversed(theirs.all_coeffs()))
        assert [int(c) for c in coeffs] == [int(c) for c in ours.coeffs]


def test_poset_json_shape(p4):
    import json

    data = json.loads(poset_to_json(p4))
    assert data["count"] == 15
    assert data["members"][0]["girth"] == "inf"
    assert data["members"][-1]["iso_class"] == "K4"
    assert {"index", "mask", "edges", "edge_count", "components", "girth", "iso_class"} <= set(
        data["members"][0]
    )


@given(st.integers(min_value=2, max_value=5), st.data())
@settings(max_examples=80, deadline=None)
def test_bridge_detection_matches_networkx(v, data):
    bits = data.draw(st.integers(min_value=0, max_value=(1 << comb(v, 2)) - 1))
    es = EdgeSet(v, bits)
    has_bridge = any(True for _ in nx.bridges(_nx_graph(es)))
    assert is_isthmus_free(es) == (not has_bridge)
