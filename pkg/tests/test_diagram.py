import pytest
from hypothesis import given

from conftest import braid_words
from skein.diagram import (
    BraidIndexError,
    DanglingEdgeError,
    DiagramError,
    FramedBraidWord,
    OddEndpointError,
    ParseError,
    PlanarityError,
    TangleDiagram,
    braid_to_tangle,
    closure,
    connected_sum,
    disjoint_union,
    from_pd,
    parse_braid,
    parse_tangle,
    stack,
)


def test_unknot_text():
    d = parse_tangle("endpoints 0; loops 1")
    assert d.n_endpoints == 0 and d.loops == 1 and not d.crossings


def test_nested_caps():
    d = parse_tangle("endpoints 4; arc 1-2; arc 3-4")
    assert d.boundary[0] == d.boundary[1] != d.boundary[2] == d.boundary[3]


def test_comments_and_lines():
    d = parse_tangle("# a trefoil\nendpoints 0\nX(1,4,2,5)  # first\nX[3,6,4,1]\nX(5,2,6,3)\n")
    assert len(d.crossings) == 3


def test_dangling_edge():
    with pytest.raises(DanglingEdgeError):
        parse_tangle("endpoints 0; X(1,4,2,3); X(3,2,4,5)")


def test_odd_endpoints():
    with pytest.raises(OddEndpointError):
        parse_tangle("endpoints 3")


def test_crossing_arcs_are_not_planar():
    with pytest.raises(PlanarityError):
        parse_tangle("endpoints 4; arc 1-3; arc 2-4")


@pytest.mark.parametrize("text,line", [("endpoints 0\nfoo", 2), ("endpoints 2\nendpoints 2", 2), ("X(1,2", 1)])
def test_parse_error_reports_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_tangle(text)
    assert info.value.line == line


def test_nonplanar_pd():
    # two kinks glued crosswise: the rotation system has genus one
    with pytest.raises(PlanarityError):
        from_pd([(1, 2, 3, 4), (1, 3, 2, 4)])


def test_braid_parsing():
    w = parse_braid("s1 s2^-1 t3 t1^-1", 3)
    assert w.letters == (("s", 1, 1), ("s", 2, -1), ("t", 3, 1), ("t", 1, -1))
    assert str(w) == "s1 s2^-1 t3 t1^-1"
    assert parse_braid("", 2) == FramedBraidWord.identity(2)


@pytest.mark.parametrize("text,strands", [("s3", 3), ("s0", 2), ("t4", 3)])
def test_braid_index_out_of_range(text, strands):
    with pytest.raises(BraidIndexError):
        parse_braid(text, strands)


def test_braid_garbage():
    with pytest.raises(DiagramError):
        parse_braid("x1", 2)


def test_single_generator_tangle():
    d = braid_to_tangle(parse_braid("s1", 2))
    assert len(d.crossings) == 1 and d.n_endpoints == 4


@given(braid_words(3))
def test_braid_tangles_are_planar_and_round_trip(w):
    d = braid_to_tangle(w)
    assert d.n_endpoints == 6
    assert len(d.crossings) == len(w)
    again = parse_tangle(d.to_text())
    assert again.key() == d.key()
    c = closure(d)
    assert c.n_endpoints == 0 and len(c.crossings) == len(w)


def test_stack_counts():
    lower = braid_to_tangle(parse_braid("s1", 2))
    upper = braid_to_tangle(parse_braid("s1^-1", 2))
    d = stack(lower, upper, 2, 2)
    assert d.n_endpoints == 4 and len(d.crossings) == 2


def test_sums_and_unions(corpus):
    t = corpus["trefoil"]
    s = connected_sum(t, t.mirror())
    assert len(s.crossings) == 6 and s.n_endpoints == 0
    u = disjoint_union(t, TangleDiagram(0, loops=2))
    assert len(u.crossings) == 3 and u.loops == 2


def test_double_mirror_only_reverses_under_strands(corpus):
    for d in corpus.values():
        twice = d.mirror().mirror()
        assert twice.crossings == tuple(x[2:] + x[:2] for x in d.crossings)


def test_every_edge_bounds_two_faces(corpus):
    for d in corpus.values():
        darts = [dart for f in d.faces() for dart in f]
        assert len(darts) == len(set(darts)) == 4 * len(d.crossings) + d.n_endpoints
