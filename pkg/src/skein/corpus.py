"""Named closed diagrams and a random planar diagram generator used by the tests and scripts."""

from __future__ import annotations

import random

from .bracket import apply_r2, r2_sites
from .diagram import (
    FramedBraidWord,
    TangleDiagram,
    braid_to_tangle,
    closure,
    connected_sum,
    disjoint_union,
    from_pd,
    parse_braid,
)

TREFOIL_PD = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]
FIGURE_EIGHT_PD = [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)]
CINQUEFOIL_PD = [(1, 6, 2, 7), (3, 8, 4, 9), (5, 10, 6, 1), (7, 2, 8, 3), (9, 4, 10, 5)]
THREE_TWIST_PD = [(1, 4, 2, 5), (3, 8, 4, 9), (5, 10, 6, 1), (9, 6, 10, 7), (7, 2, 8, 3)]
WHITEHEAD_PD = [(6, 1, 7, 2), (10, 7, 5, 8), (4, 5, 1, 6), (2, 10, 3, 9), (8, 4, 9, 3)]
HOPF_PD = [(4, 1, 3, 2), (2, 3, 1, 4)]


def braid_closure(text: str, strands: int) -> TangleDiagram:
    return closure(braid_to_tangle(parse_braid(text, strands)))


def _kinked(sign: int, count: int = 1) -> TangleDiagram:
    return braid_closure(" ".join([f"t1^{sign}"] * count), 1)


def named_diagrams() -> dict[str, TangleDiagram]:
    trefoil = from_pd(TREFOIL_PD)
    unknot = TangleDiagram(0, loops=1)
    r2 = next(s for s in r2_sites(unknot))
    return {
        "empty": TangleDiagram(0),
        "unknot": unknot,
        "kink+": _kinked(1),
        "kink-": _kinked(-1),
        "double-kink": _kinked(1, 2),
        "hopf": from_pd(HOPF_PD),
        "hopf-mirror": from_pd(HOPF_PD).mirror(),
        "trefoil": trefoil,
        "trefoil-mirror": trefoil.mirror(),
        "figure-eight": from_pd(FIGURE_EIGHT_PD),
        "granny": connected_sum(trefoil, trefoil),
        "square": connected_sum(trefoil, trefoil.mirror()),
        "cinquefoil": from_pd(CINQUEFOIL_PD),
        "three-twist": from_pd(THREE_TWIST_PD),
        "whitehead": from_pd(WHITEHEAD_PD),
        "borromean": braid_closure("s1 s2^-1 s1 s2^-1 s1 s2^-1", 3),
        "torus-2-4": braid_closure("s1 s1 s1 s1", 2),
        "two-unknots": TangleDiagram(0, loops=2),
        "trefoil-plus-hopf": disjoint_union(trefoil, from_pd(HOPF_PD)),
        "r2-unknot": apply_r2(unknot, r2),
    }


def random_braid_word(rng: random.Random, strands: int, length: int, framing: bool = True) -> FramedBraidWord:
    letters = []
    for _ in range(length):
        if framing and rng.random() < 0.2:
            letters.append(("t", rng.randint(1, strands), rng.choice((1, -1))))
        elif strands > 1:
            letters.append(("s", rng.randint(1, strands - 1), rng.choice((1, -1))))
        else:
            letters.append(("t", 1, rng.choice((1, -1))))
    return FramedBraidWord(strands, tuple(letters))


def random_closed_diagram(rng: random.Random, max_crossings: int = 10) -> TangleDiagram:
    """Closure of a random framed braid; planar by construction and with at most max_crossings crossings."""
    strands = rng.randint(1, 4)
    length = rng.randint(0, max_crossings)
    return closure(braid_to_tangle(random_braid_word(rng, strands, length)))
