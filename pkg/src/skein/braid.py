"""
Framed braid group action on skein vectors.

A braid word is read bottom to top. The left action glues the braid below a vector and the right action glues it on
top, so that act(s * t, v) == act(s, act(t, v)) and act_right(act_right(v, s), t) == act_right(v, s * t).

A vector on 2n points is acted on in the disk view by braids on 2n strands (all its points sit on the bottom edge);
a vector in the rectangle view (n bottom, n top points) is acted on by braids on n strands.
"""

from __future__ import annotations

import dataclasses
import enum
import functools

from .diagram import DiagramError, FramedBraidWord, braid_to_tangle, stack
from .tlskein import Matching, SkeinVector, compose, reduce


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclasses.dataclass(frozen=True)
class BraidAction:
    word: FramedBraidWord
    side: Side = Side.LEFT

    def __call__(self, v: SkeinVector) -> SkeinVector:
        return act(self.word, v) if self.side is Side.LEFT else act_right(v, self.word)


def invert(w: FramedBraidWord) -> FramedBraidWord:
    return FramedBraidWord(w.strands, tuple((g, i, -p) for g, i, p in reversed(w.letters)))


def reverse(w: FramedBraidWord) -> FramedBraidWord:
    """Same letters in the opposite order (the braid turned upside down)."""
    return FramedBraidWord(w.strands, tuple(reversed(w.letters)))


@functools.lru_cache(maxsize=None)
def letter_vector(strands: int, letter: tuple[str, int, int]) -> SkeinVector:
    """One generator as a reduced rectangle element."""
    return reduce(braid_to_tangle(FramedBraidWord(strands, (letter,))))


def braid_vector(w: FramedBraidWord) -> SkeinVector:
    """The reduced rectangle element of a whole word."""
    m = w.strands
    out = reduce(braid_to_tangle(FramedBraidWord(m, ())))
    for letter in w.letters:
        out = compose(out, letter_vector(m, letter), m, m)
    return out


def _view(w: FramedBraidWord, v: SkeinVector) -> tuple[int, int]:
    """(bottom, top) of the rectangle the vector is read in."""
    if w.strands == v.size:
        return v.size, 0
    if 2 * w.strands == v.size:
        return w.strands, w.strands
    raise DiagramError(f"braid on {w.strands} strands cannot act on a vector on {v.size} points")


@functools.lru_cache(maxsize=None)
def _left_image(strands: int, letter: tuple[str, int, int], m: Matching, top: int) -> SkeinVector:
    return compose(letter_vector(strands, letter), SkeinVector.basis(m), strands, top)


@functools.lru_cache(maxsize=None)
def _right_image(strands: int, letter: tuple[str, int, int], m: Matching) -> SkeinVector:
    return compose(SkeinVector.basis(m), letter_vector(strands, letter), strands, strands)


def act(w: FramedBraidWord, v: SkeinVector) -> SkeinVector:
    """sigma . v: glue the braid into the boundary collar below v and reduce."""
    _, top = _view(w, v)
    for letter in reversed(w.letters):
        v = v.map_basis(lambda m, letter=letter: _left_image(w.strands, letter, m, top), v.size)
    return v


def act_right(v: SkeinVector, w: FramedBraidWord) -> SkeinVector:
    """v . sigma: glue the braid on top of a rectangle-view vector and reduce."""
    if 2 * w.strands != v.size:
        raise DiagramError(f"right action needs a rectangle with {w.strands} top points, got {v.size} points")
    for letter in w.letters:
        v = v.map_basis(lambda m, letter=letter: _right_image(w.strands, letter, m), v.size)
    return v


def act_diagrammatic(w: FramedBraidWord, v: SkeinVector) -> SkeinVector:
    """Reference path for act: stack the braid diagram under each matching diagram and reduce the whole thing."""
    bottom, top = _view(w, v)
    out = SkeinVector(v.size)
    tangle = braid_to_tangle(w)
    for m, c in v.items():
        glued = stack(tangle, m.to_diagram(), w.strands, top)
        out = out + reduce(glued).scale(c)
    return out


def generator_matrix(strands: int, letter: tuple[str, int, int], n: int) -> dict[Matching, SkeinVector]:
    """Images of the basis of K_n under one generator (disk view if strands == 2n, else rectangle view)."""
    from .tlskein import enumerate_basis

    w = FramedBraidWord(strands, (letter,))
    return {m: act(w, SkeinVector.basis(m)) for m in enumerate_basis(n)}


__all__ = [
    "Side",
    "BraidAction",
    "act",
    "act_right",
    "act_diagrammatic",
    "invert",
    "reverse",
    "braid_vector",
    "generator_matrix",
    "letter_vector",
]
