import random

import pytest
from hypothesis import settings, strategies as st

from skein.corpus import named_diagrams, random_braid_word
from skein.laurent import LaurentPoly
from skein.tlskein import SkeinVector, enumerate_basis

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

CORPUS = named_diagrams()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


@pytest.fixture
def rng():
    return random.Random(20261019)


laurent_polys = st.dictionaries(
    st.integers(-12, 12), st.integers(-9, 9), max_size=6
).map(LaurentPoly)


def braid_words(strands, max_length=6):
    return st.randoms(use_true_random=False).map(lambda r: random_braid_word(r, strands, r.randint(0, max_length)))


@st.composite
def skein_vectors(draw, n):
    basis = enumerate_basis(n)
    picks = draw(st.lists(st.sampled_from(basis), max_size=4))
    coeffs = draw(st.lists(laurent_polys, min_size=len(picks), max_size=len(picks)))
    return SkeinVector(2 * n, list(zip(picks, coeffs)))
