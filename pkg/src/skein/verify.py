"""
Exhaustive relation suites over bases and short braid words.

Every check is linear in each skein argument, so a word is checked once per distinct linear map it induces: words
are enumerated breadth-first and a word whose operator was already seen adds nothing new. This is still a check of
every word up to the cutoff.
"""

from __future__ import annotations

import dataclasses
import functools
import random
from typing import Callable, Iterator

from .braid import act, act_right, invert
from .diagram import FramedBraidWord
from .glue import across, annular_trace, check_bigon_relation, glued_loops, pair
from .laurent import DELTA, ZERO, LaurentPoly
from .tlskein import Matching, SkeinVector, compose_rect, enumerate_basis

Images = dict[Matching, SkeinVector]


@dataclasses.dataclass
class RelationReport:
    relation: str
    n: int
    cases: int = 0
    failures: int = 0
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, witness: str) -> None:
        self.failures += 1
        if self.witness is None:
            self.witness = witness

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "n": self.n,
            "cases": self.cases,
            "failures": self.failures,
            "status": "pass" if self.passed else "fail",
            "witness": self.witness,
        }

    def line(self) -> str:
        out = f"relation={self.relation} n={self.n} cases={self.cases} failures={self.failures} "
        out += "status=" + ("pass" if self.passed else "fail")
        if self.witness:
            out += f" witness={self.witness}"
        return out


def all_letters(strands: int) -> list[tuple[str, int, int]]:
    out = []
    for p in (1, -1):
        out += [("s", i, p) for i in range(1, strands)]
        out += [("t", i, p) for i in range(1, strands + 1)]
    return out


def _apply(images: Images, v: SkeinVector) -> SkeinVector:
    acc = SkeinVector(v.size)
    for m, c in v.items():
        acc = acc + images[m].scale(c)
    return acc


def _then(first: Images, second: Images) -> Images:
    """Images of v -> second(first(v))."""
    return {m: _apply(second, v) for m, v in first.items()}


def _key(images: Images) -> tuple:
    return tuple(sorted(images.items()))


def distinct_word_maps(
    strands: int,
    cutoff: int,
    maps: Callable[[FramedBraidWord], tuple[Images, ...]],
    extend: Callable[[tuple[Images, ...], tuple[Images, ...]], tuple[Images, ...]],
    normalize: Callable[[tuple[Images, ...]], tuple] | None = None,
) -> Iterator[tuple[FramedBraidWord, tuple[Images, ...]]]:
    """
    Breadth-first over words of length <= cutoff, yielding one representative word per distinct induced map.

    ``maps(letter_word)`` gives the maps of a single letter and ``extend(maps(w), maps(g))`` the maps of w g.
    """
    letters = all_letters(strands)
    gens = [(g, maps(FramedBraidWord(strands, (g,)))) for g in letters]
    normalize = normalize or (lambda ms: tuple(_key(m) for m in ms))
    empty = FramedBraidWord(strands, ())
    start = maps(empty)
    seen = {normalize(start)}
    yield empty, start
    frontier = [(empty, start)]
    for _ in range(cutoff):
        nxt = []
        for w, ms in frontier:
            for g, gm in gens:
                new = extend(ms, gm)
                k = normalize(new)
                if k in seen:
                    continue
                seen.add(k)
                word = FramedBraidWord(strands, w.letters + (g,))
                nxt.append((word, new))
                yield word, new
        frontier = nxt


def _basis_images(n: int, f: Callable[[SkeinVector], SkeinVector]) -> Images:
    return {m: f(SkeinVector.basis(m)) for m in enumerate_basis(n)}


@functools.lru_cache(maxsize=None)
def gram(n: int) -> dict[tuple[Matching, Matching], LaurentPoly]:
    basis = enumerate_basis(n)
    return {(a, b): DELTA ** glued_loops(a, b.mirror()) for a in basis for b in basis}


def _pair_images(n: int, left: Images, right: Images) -> Iterator[tuple[Matching, Matching, bool]]:
    G = gram(n)
    for m1, u in left.items():
        for m2, v in right.items():
            acc = ZERO
            for k, c in u.items():
                for l, d in v.items():
                    acc = acc + c * d * G[(k, l)]
            yield m1, m2, acc == G[(m1, m2)]


def _unit_normalize(ms: tuple[Images, Images]) -> tuple:
    """Key of left (x) right up to moving a unit +-A^k from one factor to the other."""
    left, right = ms
    first = next(c for _, v in sorted(left.items()) for _, c in v.items())
    e, c = first.items()[0]
    sign = 1 if c > 0 else -1
    u, ui = LaurentPoly.monomial(e, sign), LaurentPoly.monomial(-e, sign)
    return (
        tuple(sorted((m, v.scale(ui)) for m, v in left.items())),
        tuple(sorted((m, v.scale(u)) for m, v in right.items())),
    )


def verify_braiding(n: int, cutoff: int) -> RelationReport:
    """pair(sigma a, sigma^-1 b) == pair(a, b) for all basis pairs and all words of length <= cutoff on 2n strands."""
    report = RelationReport("braiding", n)
    strands = 2 * n

    def maps(w):
        return (_basis_images(n, lambda v: act(w, v)), _basis_images(n, lambda v: act(across(invert(w)), v)))

    def extend(ms, gm):
        # rho(w g) = rho(w) rho(g); the transported side composes the same way
        return (_then(gm[0], ms[0]), _then(gm[1], ms[1]))

    if n == 0:
        report.cases = 1
        if pair(SkeinVector.basis(Matching.empty()), SkeinVector.basis(Matching.empty())) != 1:
            report.fail("n=0")
        return report
    for w, (left, right) in distinct_word_maps(strands, cutoff, maps, extend, _unit_normalize):
        for m1, m2, ok in _pair_images(n, left, right):
            report.cases += 1
            if not ok:
                report.fail(f"word='{w}' a={m1} b={m2}")
    return report


def verify_braiding_random(n: int, count: int, max_length: int, seed: int = 0) -> RelationReport:
    from .glue import check_braiding_relation

    rng = random.Random(seed)
    report = RelationReport("braiding-random", n)
    basis = enumerate_basis(n)
    letters = all_letters(2 * n)
    for _ in range(count):
        w = FramedBraidWord(2 * n, tuple(rng.choice(letters) for _ in range(rng.randint(0, max_length))))
        a, b = SkeinVector.basis(rng.choice(basis)), SkeinVector.basis(rng.choice(basis))
        report.cases += 1
        if not check_braiding_relation(a, b, w):
            report.fail(f"word='{w}' a={a} b={b}")
    return report


def verify_bigon(n: int) -> RelationReport:
    """All a over K_{n-1}, b over K_n and cap positions i."""
    report = RelationReport("bigon", n)
    if n == 0:
        return report
    for m1 in enumerate_basis(n - 1):
        for m2 in enumerate_basis(n):
            for i in range(1, 2 * n):
                report.cases += 1
                if not check_bigon_relation(SkeinVector.basis(m1), SkeinVector.basis(m2), i):
                    report.fail(f"a={m1} b={m2} i={i}")
    return report


def verify_conjugation(n: int, cutoff: int) -> RelationReport:
    """trace(sigma a sigma^-1) == trace(a) for a over the basis and all words of length <= cutoff on n strands."""
    report = RelationReport("conjugation", n)
    if n == 0:
        report.cases = 1
        return report

    def maps(w):
        inv = invert(w)
        return (_basis_images(n, lambda v: act(w, act_right(v, inv))),)

    def extend(ms, gm):
        # a -> w g a g^-1 w^-1
        return (_then(gm[0], ms[0]),)

    for w, (conj,) in distinct_word_maps(n, cutoff, maps, extend):
        for m, v in conj.items():
            report.cases += 1
            if annular_trace(v) != annular_trace(SkeinVector.basis(m)):
                report.fail(f"word='{w}' a={m}")
    return report


def verify_trace_cyclicity(n: int) -> RelationReport:
    report = RelationReport("trace-cyclicity", n)
    basis = [SkeinVector.basis(m) for m in enumerate_basis(n)]
    for x in basis:
        for y in basis:
            report.cases += 1
            if annular_trace(compose_rect(x, y)) != annular_trace(compose_rect(y, x)):
                report.fail(f"x={x} y={y}")
    return report


RELATIONS = ("braiding", "bigon", "conjugation")


def run_relations(relations: tuple[str, ...], n_max: int, cutoff: int) -> list[RelationReport]:
    out = []
    for rel in relations:
        for n in range(n_max + 1):
            if rel == "braiding":
                out.append(verify_braiding(n, cutoff))
            elif rel == "bigon":
                if n:
                    out.append(verify_bigon(n))
            elif rel == "conjugation":
                out.append(verify_conjugation(n, cutoff))
            else:
                raise ValueError(f"unknown relation {rel!r}")
    return out
