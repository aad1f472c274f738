import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import braid_words, skein_vectors
from skein import glue
from skein.braid import act, braid_vector, invert
from skein.bracket import kauffman_bracket
from skein.diagram import DiagramError, FramedBraidWord, braid_to_tangle, closure, parse_braid
from skein.glue import (
    AnnularElement,
    InconsistencyError,
    QuotientConfig,
    across,
    annular_trace,
    check_bigon_relation,
    check_braiding_relation,
    check_conjugation_relation,
    crossing_balls,
    pair,
    quotient_rank,
    split_diagram,
)
from skein.laurent import DELTA, ONE, LaurentPoly
from skein.tlskein import Matching, SkeinVector, e_rect, enumerate_basis, identity_rect, reduce

M = Matching.from_pairs


def vec(*pairs):
    return SkeinVector.basis(M(pairs) if pairs else Matching.empty())


def test_pair_examples():
    assert pair(vec(), vec()) == 1
    assert pair(vec((1, 2)), vec((1, 2))) == DELTA
    assert pair(vec((1, 2), (3, 4)), vec((1, 4), (2, 3))) == DELTA
    assert pair(vec((1, 2), (3, 4)), vec((1, 2), (3, 4))) == DELTA**2


def test_pair_reads_second_ball_in_its_own_coordinates():
    # point i of one ball is point 2n+1-i of the other
    a = vec((1, 2), (3, 6), (4, 5))
    assert pair(a, a.mirror()) == DELTA**3


def test_pair_size_mismatch():
    with pytest.raises(DiagramError):
        pair(vec((1, 2)), vec())


@given(st.data())
def test_pair_is_bilinear(data):
    n = data.draw(st.integers(0, 3))
    a, a2, b = (data.draw(skein_vectors(n)) for _ in range(3))
    c = LaurentPoly.parse("A^3 - 2")
    assert pair(a + a2, b) == pair(a, b) + pair(a2, b)
    assert pair(a.scale(c), b) == c * pair(a, b) == pair(a, b.scale(c))


def test_split_reproduces_bracket(corpus):
    for name, d in corpus.items():
        whole = kauffman_bracket(d)
        balls = list(crossing_balls(d)) or [set()]
        for inside in balls:
            x, y = split_diagram(d, inside)
            assert x.n_endpoints == y.n_endpoints
            assert pair(reduce(x), reduce(y)) == whole, (name, inside)


def test_split_rejects_disconnected_inside(corpus):
    d = corpus["trefoil-plus-hopf"]
    with pytest.raises(DiagramError):
        split_diagram(d, {0, 4})


def test_braiding_examples():
    assert check_braiding_relation(vec((1, 2)), vec((1, 2)), parse_braid("s1", 2))
    assert check_braiding_relation(vec((1, 2), (3, 4)), vec((1, 4), (2, 3)), FramedBraidWord.identity(4))


@given(st.data())
def test_braiding_random(data):
    n = data.draw(st.integers(1, 3))
    w = data.draw(braid_words(2 * n, 6))
    a, b = data.draw(skein_vectors(n)), data.draw(skein_vectors(n))
    assert check_braiding_relation(a, b, w)


def test_untransported_inverse_is_not_enough():
    # sigma^-1 has to be read from the second ball; applied verbatim the identity breaks
    a = b = SkeinVector.basis(enumerate_basis(2)[0])
    w = parse_braid("s1 s2", 4)
    assert pair(act(w, a), act(invert(w), b)) != pair(a, b)
    assert check_braiding_relation(a, b, w)


def test_across_is_an_involution():
    w = parse_braid("s1 t3^-1 s3 s2^-1", 4)
    assert across(across(w)) == w
    assert str(across(w)) == "s2^-1 s1 t2^-1 s3"


def test_bigon_examples():
    assert check_bigon_relation(vec(), vec((1, 2)), 1)
    for i in (1, 2, 3):
        assert check_bigon_relation(vec((1, 2)), vec((1, 4), (2, 3)), i)
    with pytest.raises(DiagramError):
        check_bigon_relation(vec(), vec(), 1)


def test_trace_examples():
    assert annular_trace(identity_rect(2)) == AnnularElement.from_dict({2: ONE})
    assert annular_trace(e_rect(2, 1)) == AnnularElement.from_dict({0: DELTA})
    assert annular_trace(vec()) == AnnularElement.from_dict({0: ONE})


@given(braid_words(3, 6))
def test_trace_at_delta_is_closure_bracket(w):
    # forgetting the hole sends z to delta
    closed = kauffman_bracket(closure(braid_to_tangle(w)))
    assert annular_trace(braid_vector(w)).substitute(DELTA) == closed


def test_annular_text_and_json():
    x = AnnularElement.from_dict({0: DELTA, 2: ONE})
    assert str(x) == "z^0: -A^2 - A^-2; z^2: 1"
    assert AnnularElement.from_json(json.loads(json.dumps(x.to_json()))) == x
    assert str(AnnularElement()) == "0"


def test_conjugation_examples():
    assert check_conjugation_relation(e_rect(2, 1), parse_braid("s1", 2))
    assert check_conjugation_relation(identity_rect(3), FramedBraidWord.identity(3))


@given(st.data())
def test_conjugation_random(data):
    n = data.draw(st.integers(1, 3))
    w = data.draw(braid_words(n, 6))
    assert check_conjugation_relation(data.draw(skein_vectors(n)), w)


@pytest.mark.parametrize("n_max", [0, 1, 2])
def test_quotient_rank_is_one(n_max):
    for cutoff in (4, 6):
        res = quotient_rank(QuotientConfig(n_max=n_max, word_cutoff=cutoff))
        assert res.dimension == 1
        assert set(res.rational_ranks) == {res.rank}


def test_rank_disagreement_is_reported(monkeypatch):
    real = glue.rational_rank
    monkeypatch.setattr(glue, "rational_rank", lambda rows, a: (0, []) if a == Fraction(-3, 5) else real(rows, a))
    with pytest.raises(InconsistencyError):
        quotient_rank(QuotientConfig(n_max=1))
