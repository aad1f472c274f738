"""
Kauffman bracket of framed diagrams.

Smoothing a crossing X(a, b, c, d) (PD order, counterclockwise from the incoming under-strand):

    <X> = A <a-b, c-d> + A^-1 <a-d, b-c>

The first term is the zero smoothing, the second the infinity smoothing. A free loop is worth delta = -A^2 - A^-2 and
the empty diagram is worth 1.

Also contains the Reidemeister moves used by the test harness (apply_r2, remove_r2, apply_r3, add_kink).
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .diagram import BOUNDARY, Dart, DiagramError, TangleDiagram, _assemble
from .laurent import A, A_INV, DELTA, NEGATIVE_KINK, ONE, POSITIVE_KINK, ZERO, LaurentPoly


class Choice(enum.Enum):
    ZERO = 0
    INFINITY = 1


@dataclass(frozen=True)
class Smoothing:
    crossing: int
    choice: Choice


_ZERO_PAIRS = ((0, 1), (2, 3))
_INF_PAIRS = ((0, 3), (1, 2))


def smooth(d: TangleDiagram, c: int, choice: Choice) -> TangleDiagram:
    if not 0 <= c < len(d.crossings):
        raise DiagramError(f"no crossing with id {c}")
    x = d.crossings[c]
    pairs = _ZERO_PAIRS if choice is Choice.ZERO else _INF_PAIRS
    rest = d.crossings[:c] + d.crossings[c + 1 :]
    return _assemble(d.n_endpoints, rest, d.boundary, [(x[i], x[j]) for i, j in pairs], d.loops)


def resolve_crossing(d: TangleDiagram, c: int) -> tuple[TangleDiagram, TangleDiagram]:
    """(zero smoothing, infinity smoothing) at crossing c; <d> = A <d0> + A^-1 <dinf>."""
    return smooth(d, c, Choice.ZERO), smooth(d, c, Choice.INFINITY)


def kink_sign(x: tuple[int, int, int, int]) -> int:
    """+1 / -1 if the crossing is a nugatory kink of that sign, else 0."""
    if x[0] == x[1] or x[2] == x[3]:
        return 1
    if x[0] == x[3] or x[1] == x[2]:
        return -1
    return 0


def _straighten(d: TangleDiagram, c: int, sign: int) -> TangleDiagram:
    # the surviving smoothing is the one that does not close the kink loop
    return smooth(d, c, Choice.INFINITY if sign == 1 else Choice.ZERO)


def boundary_pairing(d: TangleDiagram) -> tuple[tuple[int, int], ...]:
    """Pairing of boundary points of a crossingless diagram, as sorted 1-based pairs."""
    if d.crossings:
        raise DiagramError("diagram still has crossings")
    first: dict[int, int] = {}
    pairs = []
    for k, e in enumerate(d.boundary, start=1):
        if e in first:
            pairs.append((first.pop(e), k))
        else:
            first[e] = k
    return tuple(sorted(pairs))


def expand(d: TangleDiagram, _memo: dict | None = None) -> dict[tuple[tuple[int, int], ...], LaurentPoly]:
    """Resolve every crossing recursively; map each boundary pairing to its coefficient."""
    memo = {} if _memo is None else _memo
    key = d.key()
    if key in memo:
        return memo[key]
    if not d.crossings:
        result = {boundary_pairing(d): DELTA**d.loops}
    else:
        result = None
        for c, x in enumerate(d.crossings):
            s = kink_sign(x)
            if s:
                factor = POSITIVE_KINK if s == 1 else NEGATIVE_KINK
                result = {m: factor * v for m, v in expand(_straighten(d, c, s), memo).items()}
                break
        if result is None:
            d0, dinf = resolve_crossing(d, 0)
            result = {}
            for coeff, sub in ((A, d0), (A_INV, dinf)):
                for m, v in expand(sub, memo).items():
                    result[m] = result.get(m, ZERO) + coeff * v
            result = {m: v for m, v in result.items() if v}
    memo[key] = result
    return result


def kauffman_bracket(d: TangleDiagram) -> LaurentPoly:
    if d.n_endpoints:
        raise DiagramError(f"bracket needs a closed diagram, got {d.n_endpoints} endpoints")
    return expand(d).get((), ZERO)


def _state_counts(crossings, loops: int, masks: range) -> dict[tuple[int, int], int]:
    n = len(crossings)
    # slot nodes 4*i + s; the label of each node is joined to its partner incidence
    partner = {}
    seen: dict[int, int] = {}
    for i, x in enumerate(crossings):
        for s, e in enumerate(x):
            node = 4 * i + s
            if e in seen:
                partner[node] = seen[e]
                partner[seen[e]] = node
            else:
                seen[e] = node
    counts: dict[tuple[int, int], int] = {}
    for mask in masks:
        parent = list(range(4 * n))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        def union(u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv

        for u, v in partner.items():
            union(u, v)
        for i in range(n):
            if mask >> i & 1:
                union(4 * i, 4 * i + 3)
                union(4 * i + 1, 4 * i + 2)
            else:
                union(4 * i, 4 * i + 1)
                union(4 * i + 2, 4 * i + 3)
        circles = len({find(u) for u in range(4 * n)}) + loops
        inf = bin(mask).count("1")
        key = (n - 2 * inf, circles)
        counts[key] = counts.get(key, 0) + 1
    return counts


def state_sum_oracle(d: TangleDiagram, workers: int = 1) -> LaurentPoly:
    """Sum over all 2^c states of A^(#zero - #infinity) delta^(#circles). Deliberately naive."""
    if d.n_endpoints:
        raise DiagramError(f"oracle needs a closed diagram, got {d.n_endpoints} endpoints")
    n = len(d.crossings)
    total = 1 << n
    if workers > 1 and total >= 4096:
        step = -(-total // workers)
        chunks = [range(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_state_counts, [d.crossings] * len(chunks), [d.loops] * len(chunks), chunks))
    else:
        parts = [_state_counts(d.crossings, d.loops, range(total))]
    counts: dict[tuple[int, int], int] = {}
    for part in parts:
        for k, v in part.items():
            counts[k] = counts.get(k, 0) + v
    result = ZERO
    for (exp, circles), mult in sorted(counts.items()):
        result = result + LaurentPoly.monomial(exp, mult) * DELTA**circles
    return result


# ---------------------------------------------------------------------------------------------------------------
# Reidemeister moves


@dataclass(frozen=True)
class R2Site:
    """Push the edge at dart ``first`` across the edge at dart ``second``; both darts must bound the same face.

    ``first_over`` selects which strand passes over. ``free_loop`` ignores the darts and folds a free loop.
    """

    first: Dart | None = None
    second: Dart | None = None
    first_over: bool = True
    free_loop: bool = False


def _fresh(d: TangleDiagram, k: int) -> list[int]:
    top = max(d.labels(), default=0)
    return list(range(top + 1, top + 1 + k))


def apply_r2(d: TangleDiagram, site: R2Site) -> TangleDiagram:
    xs = [list(x) for x in d.crossings]
    bd = list(d.boundary)
    e2, e3, f2, f3 = _fresh(d, 4)
    loops = d.loops
    if site.free_loop:
        if not loops:
            raise DiagramError("no free loop for R2")
        loops -= 1
        e1, f1 = f3, e3
    else:
        face = next((f for f in d.faces() if site.first in f), None)
        if face is None or site.second not in face or site.first == site.second:
            raise DiagramError("R2 site darts must be distinct and bound a common face")
        inc = d.incidences()

        def other(dart):
            a, b = inc[d.label_at(dart)]
            return b if a == dart else a

        def put(dart, label):
            v, s = dart
            if v == BOUNDARY:
                bd[s] = label
            else:
                xs[v][s] = label

        def get(dart):
            v, s = dart
            return bd[s] if v == BOUNDARY else xs[v][s]

        u, v = other(site.first), site.first
        x, y = other(site.second), site.second
        put(v, e3)
        put(y, f3)
        e1, f1 = get(u), get(x)
    if site.first_over:
        xs.append([f2, e2, f3, e1])
        xs.append([f1, e2, f2, e3])
    else:
        xs.append([e1, f2, e2, f3])
        xs.append([e3, f1, e2, f2])
    return TangleDiagram.trusted(d.n_endpoints, [tuple(x) for x in xs], bd, loops).canonical()


def r2_sites(d: TangleDiagram) -> list[R2Site]:
    sites = []
    for face in d.faces():
        for i, a in enumerate(face):
            for b in face[i + 1 :]:
                for over in (True, False):
                    sites.append(R2Site(a, b, over))
    if d.loops:
        sites.extend([R2Site(free_loop=True), R2Site(free_loop=True, first_over=False)])
    return sites


def remove_r2(d: TangleDiagram, c1: int, c2: int) -> TangleDiagram:
    """Undo an R2 move: crossings c1, c2 bound a bigon with one strand over at both."""
    if c1 == c2 or not (0 <= c1 < len(d.crossings) and 0 <= c2 < len(d.crossings)):
        raise DiagramError("R2 removal needs two distinct crossings")
    x1, x2 = d.crossings[c1], d.crossings[c2]
    shared = [(i, j) for i in range(4) for j in range(4) if x1[i] == x2[j]]
    if len(shared) != 2 or len({x1[i] for i, _ in shared}) != 2:
        raise DiagramError("crossings do not share exactly two edges")
    (i1, j1), (i2, j2) = shared
    if (i1 - i2) % 2 == 0 or (i1 - j1) % 2 or (i2 - j2) % 2:
        raise DiagramError("crossings do not form a removable bigon")
    joins = [(x1[(i1 + 2) % 4], x2[(j1 + 2) % 4]), (x1[(i2 + 2) % 4], x2[(j2 + 2) % 4])]
    rest = [x for k, x in enumerate(d.crossings) if k not in (c1, c2)]
    return _assemble(d.n_endpoints, rest, d.boundary, joins, d.loops)


def r3_sites(d: TangleDiagram) -> list[list[Dart]]:
    out = []
    for face in d.faces():
        if len(face) != 3 or any(v == BOUNDARY for v, _ in face):
            continue
        if len({v for v, _ in face}) != 3:
            continue
        try:
            _r3_roles(d, face)
        except DiagramError:
            continue
        out.append(face)
    return out


def _r3_roles(d: TangleDiagram, face: list[Dart]):
    inc = d.incidences()

    def other(dart):
        a, b = inc[d.label_at(dart)]
        return b if a == dart else a

    (P, sp), (Q, qb), (R, rc) = face
    qa = other((P, sp))[1]
    rb = other((Q, qb))[1]
    pc = other((R, rc))[1]
    if other((P, sp))[0] != Q or other((Q, qb))[0] != R or other((R, rc))[0] != P:
        raise DiagramError("face is not a triangle of crossings")
    strands = [((P, sp), (Q, qa)), ((Q, qb), (R, rb)), ((R, rc), (P, pc))]
    if not any(s1 % 2 == 1 and s2 % 2 == 1 for (_, s1), (_, s2) in strands):
        raise DiagramError("no strand passes over both of its triangle crossings")
    return P, Q, R, sp, qa, qb, rb, rc, pc


def apply_r3(d: TangleDiagram, face: list[Dart]) -> TangleDiagram:
    """Slide one strand of a triangular face across the opposite crossing."""
    P, Q, R, sp, qa, qb, rb, rc, pc = _r3_roles(d, face)
    old = [list(x) for x in d.crossings]
    xP, xQ, xR = old[P], old[Q], old[R]
    a, b, c = xP[sp], xQ[qb], xR[rc]
    ext_P1, ext_Q1 = xP[(sp + 2) % 4], xQ[(qa + 2) % 4]
    ext_Q2, ext_R2 = xQ[(qb + 2) % 4], xR[(rb + 2) % 4]
    ext_R3, ext_P3 = xR[(rc + 2) % 4], xP[(pc + 2) % 4]
    new = [list(x) for x in d.crossings]
    new[Q][qa], new[Q][(qa + 2) % 4], new[Q][(qb + 2) % 4], new[Q][qb] = ext_P1, a, b, ext_R2
    new[P][(sp + 2) % 4], new[P][sp], new[P][pc], new[P][(pc + 2) % 4] = a, ext_Q1, ext_R3, c
    new[R][rb], new[R][(rb + 2) % 4], new[R][(rc + 2) % 4], new[R][rc] = ext_Q2, b, c, ext_P3
    return TangleDiagram.trusted(d.n_endpoints, [tuple(x) for x in new], d.boundary, d.loops).canonical()


def add_kink(d: TangleDiagram, dart: Dart, sign: int) -> TangleDiagram:
    """Insert a kink of the given sign on the edge at ``dart`` (R1)."""
    xs = [list(x) for x in d.crossings]
    bd = list(d.boundary)
    e = d.label_at(dart)
    g, k = _fresh(d, 2)
    v, s = dart
    if v == BOUNDARY:
        bd[s] = g
    else:
        xs[v][s] = g
    xs.append([k, k, g, e] if sign > 0 else [e, k, k, g])
    return TangleDiagram.trusted(d.n_endpoints, [tuple(x) for x in xs], bd, d.loops).canonical()


__all__ = [
    "Choice",
    "Smoothing",
    "resolve_crossing",
    "kauffman_bracket",
    "state_sum_oracle",
    "expand",
    "apply_r2",
    "remove_r2",
    "apply_r3",
    "add_kink",
    "r2_sites",
    "r3_sites",
    "R2Site",
    "ONE",
]
