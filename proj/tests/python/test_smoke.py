import bihyp
import pytest


def test_version():
    assert bihyp.__version__ == "0.1.0"


def test_complete_family_threshold():
    assert bihyp.decide_colorable(bihyp.make_knlm(4, 3, 3))["status"] == "colorable"
    verdict = bihyp.decide_colorable(bihyp.make_knlm(5, 3, 3))
    assert verdict["status"] == "uncolorable"
    assert verdict["witness"] is None
    assert verdict["nodes_explored"] > 0


def test_chain_colorings():
    h2 = bihyp.make_hk(2)
    colorings = bihyp.enumerate_proper_colorings(h2)
    assert len(colorings) == 3
    assert colorings[0] == [0, 0, 1, 1, 1, 0]
    for c in colorings:
        assert bihyp.is_proper(h2, c)
        assert len(set(c)) == 2


def test_upper_chromatic_number():
    assert bihyp.upper_chromatic_number(bihyp.make_fano()) == 3
    assert bihyp.upper_chromatic_number(bihyp.make_knlm(5, 3, 3)) is None


def test_minimality():
    assert bihyp.is_minimal_uncolorable(bihyp.make_muc(6))
    assert not bihyp.is_minimal_uncolorable(bihyp.make_knlm(6, 3, 3))


def test_bounds_shape():
    reports = bihyp.bounds(bihyp.make_fano())
    assert [r["bound"] for r in reports] == ["lll-size", "lll-incidence", "degree"]
    assert all(not r["satisfied"] for r in reports)
    assert reports[0]["measured"] == 7.0
    assert reports[0]["threshold"] == 4.0


def test_canonical_invariance():
    a = bihyp.MixedHypergraph.bi(4, [[0, 1, 2]])
    b = bihyp.MixedHypergraph.bi(4, [[1, 2, 3]])
    assert bihyp.canonical_form(a) == bihyp.canonical_form(b)
    assert bihyp.are_isomorphic(a, b)
    n, edges, digest = bihyp.canonical_form(a)
    assert n == 4
    assert len(edges) == 1
    assert len(digest) == 16


def test_json_round_trip():
    h = bihyp.make_muc(7)
    again = bihyp.from_json(bihyp.to_json(h))
    assert again == h
    assert again.is_bi()
    assert again.uniformity() == 3


def test_graph_accessors():
    h = bihyp.MixedHypergraph(3, [[0, 1, 2]], [[0, 1]])
    assert h.n == 3
    assert h.c_edges == [[0, 1, 2]]
    assert h.d_edges == [[0, 1]]
    assert not h.is_bi()
    assert h.degree(0) == 2
    assert h.neighborhood(2) == [0, 1]


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        bihyp.MixedHypergraph(2, [[0, 1, 5]], [])
