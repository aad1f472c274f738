import itertools
import json

import pytest
from hypothesis import given, strategies as st

from conftest import skein_vectors
from skein.diagram import DiagramError, braid_to_tangle, parse_braid, parse_tangle
from skein.laurent import A, A_INV, DELTA
from skein.tlskein import (
    Matching,
    SkeinVector,
    cap_insert,
    catalan,
    compose_rect,
    contract,
    e_rect,
    enumerate_basis,
    identity_rect,
    reduce,
)

M = Matching.from_pairs


def vec(*pairs, size=None):
    m = M(pairs) if pairs else Matching.empty()
    return SkeinVector.basis(m)


def rejection_count(n):
    """All perfect matchings of 2n points, keeping the ones with no interleaved pair."""

    def matchings(points):
        if not points:
            yield []
            return
        a = points[0]
        for k in range(1, len(points)):
            rest = points[1:k] + points[k + 1 :]
            for m in matchings(rest):
                yield [(a, points[k])] + m

    def crossing(p, q):
        (a, b), (c, d) = sorted(p), sorted(q)
        return a < c < b < d or c < a < d < b

    return sum(
        1
        for m in matchings(list(range(1, 2 * n + 1)))
        if not any(crossing(p, q) for p, q in itertools.combinations(m, 2))
    )


@pytest.mark.parametrize("n", range(7))
def test_basis_count_against_rejection(n):
    assert len(enumerate_basis(n)) == catalan(n) == rejection_count(n)


def test_small_bases():
    assert enumerate_basis(0) == (Matching.empty(),)
    assert set(enumerate_basis(2)) == {M([(1, 2), (3, 4)]), M([(1, 4), (2, 3)])}


def test_crossing_matching_rejected():
    with pytest.raises(DiagramError):
        M([(1, 3), (2, 4)])


def test_reduce_matching_diagram():
    d = parse_tangle("endpoints 4; arc 1-2; arc 3-4")
    assert reduce(d) == vec((1, 2), (3, 4))


def test_reduce_single_crossing():
    v = reduce(braid_to_tangle(parse_braid("s1", 2)))
    assert v == SkeinVector(4, [(M([(1, 4), (2, 3)]), A), (M([(1, 2), (3, 4)]), A_INV)])


def test_reduce_free_loop():
    d = parse_tangle("endpoints 2; loops 1; arc 1-2")
    assert reduce(d) == vec((1, 2)).scale(DELTA)


def test_cap_insert_examples():
    assert cap_insert(vec(), 1) == vec((1, 2))
    assert cap_insert(vec((1, 2)), 2) == vec((1, 4), (2, 3))
    assert cap_insert(vec((1, 2)), 1) == vec((1, 2), (3, 4))


def test_contract_examples():
    assert contract(vec((1, 2)), 1) == vec().scale(DELTA)
    assert contract(vec((1, 4), (2, 3)), 1) == vec((1, 2))
    assert contract(cap_insert(vec(), 1), 1) == vec().scale(DELTA)


@pytest.mark.parametrize("n", range(1, 5))
def test_contract_of_cap_is_delta(n):
    for m in enumerate_basis(n - 1):
        for i in range(1, 2 * n):
            v = SkeinVector.basis(m)
            assert contract(cap_insert(v, i), i) == v.scale(DELTA)


@pytest.mark.parametrize("n", range(1, 6))
def test_temperley_lieb(n):
    one = identity_rect(n)
    e = [None] + [e_rect(n, i) for i in range(1, n)]
    for i in range(1, n):
        assert compose_rect(one, e[i]) == e[i] == compose_rect(e[i], one)
        assert compose_rect(e[i], e[i]) == e[i].scale(DELTA)
        for j in range(1, n):
            if abs(i - j) == 1:
                assert compose_rect(compose_rect(e[i], e[j]), e[i]) == e[i]
            elif abs(i - j) > 1:
                assert compose_rect(e[i], e[j]) == compose_rect(e[j], e[i])


@given(st.data())
def test_compose_is_associative(data):
    n = data.draw(st.integers(1, 3))
    x, y, z = (data.draw(skein_vectors(n)) for _ in range(3))
    assert compose_rect(compose_rect(x, y), z) == compose_rect(x, compose_rect(y, z))


@given(st.integers(0, 4).flatmap(skein_vectors))
def test_text_and_json_round_trip(v):
    assert SkeinVector.parse(str(v), v.size) == v
    assert SkeinVector.from_json(json.loads(v.dumps())) == v


def test_vector_text_form():
    v = SkeinVector(4, [(M([(1, 2), (3, 4)]), DELTA), (M([(1, 4), (2, 3)]), A)])
    assert str(v) == "(-A^2 - A^-2) * {(1,2),(3,4)} + A * {(1,4),(2,3)}"
    assert str(SkeinVector(2)) == "0"


def test_mismatched_sizes():
    with pytest.raises(DiagramError):
        vec((1, 2)) + vec()
