"""
Gluing two balls along their common boundary sphere.

Both factors are written in their own counterclockwise coordinates. Seen from the second ball, the shared boundary
points run the other way round, so point i of the first ball is point 2n + 1 - i of the second. ``pair`` applies
that relabelling (the mirror of b's matching) and counts closed loops. Anything moved across the gluing surface
(a bigon position, a collar braid) goes through the same relabelling: see ``across_position`` and ``across``.

The annular side of the module lives here too: closing a rectangle element around the core of an annulus and
reading the result in Z[A, A^-1][z], where z is the essential loop.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .braid import act, act_right, invert
from .diagram import BOUNDARY, DiagramError, FramedBraidWord, TangleDiagram
from .laurent import DELTA, ONE, ZERO, LaurentPoly
from .linalg import bareiss_echelon, dot, kernel_basis, rational_rank
from .tlskein import Matching, SkeinVector, cap_insert, contract, enumerate_basis


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


# ---------------------------------------------------------------- pairing


@functools.lru_cache(maxsize=None)
def glued_loops(m1: Matching, m2: Matching) -> int:
    """Closed loops formed by m1 and m2 after identifying point i with point i."""
    p1, p2 = m1.partner(), m2.partner()
    seen: set[int] = set()
    count = 0
    for start in p1:
        if start in seen:
            continue
        count += 1
        x = start
        while True:
            seen.add(x)
            y = p1[x]
            seen.add(y)
            x = p2[y]
            if x == start:
                break
    return count


def pair(a: SkeinVector, b: SkeinVector) -> LaurentPoly:
    """<a, b>: glue a (first ball) to b (second ball, own coordinates) and evaluate each closed state."""
    if a.size != b.size:
        raise DiagramError(f"cannot glue {a.size} boundary points to {b.size}")
    acc = ZERO
    for m2, c2 in b.items():
        mm = m2.mirror()
        for m1, c1 in a.items():
            acc = acc + c1 * c2 * DELTA ** glued_loops(m1, mm)
    return acc


def across_position(i: int, size: int) -> int:
    """The arc between points i, i+1 of one ball is the arc between points size-i, size-i+1 of the other."""
    return size - i


def across(w: FramedBraidWord) -> FramedBraidWord:
    """A collar braid as seen from the other ball: letter order reversed and positions relabelled."""
    m = w.strands
    return FramedBraidWord(m, tuple((g, m - i if g == "s" else m + 1 - i, p) for g, i, p in reversed(w.letters)))


def check_braiding_relation(a: SkeinVector, b: SkeinVector, sigma: FramedBraidWord) -> bool:
    """sigma pushed through the gluing sphere: <sigma a, sigma^-1 b> == <a, b> with sigma^-1 read from ball two."""
    return pair(act(sigma, a), act(across(invert(sigma)), b)) == pair(a, b)


def check_bigon_relation(a: SkeinVector, b: SkeinVector, i: int) -> bool:
    """A cap at position i of ball one slides across the sphere into a contraction of ball two."""
    if b.size != a.size + 2:
        raise DiagramError("bigon relation needs b with two more points than a")
    return pair(cap_insert(a, i), b) == pair(a, contract(b, across_position(i, b.size)))


# ---------------------------------------------------------------- annulus


@dataclasses.dataclass(frozen=True)
class AnnularElement:
    """A polynomial in the essential loop z with Laurent coefficients."""

    coeffs: tuple[tuple[int, LaurentPoly], ...] = ()

    @classmethod
    def from_dict(cls, d: dict[int, LaurentPoly]) -> AnnularElement:
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict[int, LaurentPoly]:
        return dict(self.coeffs)

    def __add__(self, other: AnnularElement) -> AnnularElement:
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, ZERO) + v
        return AnnularElement.from_dict(d)

    def scale(self, c: LaurentPoly) -> AnnularElement:
        return AnnularElement.from_dict({k: v * c for k, v in self.coeffs})

    def substitute(self, z: LaurentPoly) -> LaurentPoly:
        """Evaluate at z := value; z := delta is the image under the inclusion into the ball."""
        acc = ZERO
        for k, v in self.coeffs:
            acc = acc + v * z**k
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return "; ".join(f"z^{k}: {v}" for k, v in self.coeffs)

    def to_json(self) -> dict:
        return {str(k): v.to_json() for k, v in self.coeffs}

    @classmethod
    def from_json(cls, data: dict) -> AnnularElement:
        return cls.from_dict({int(k): LaurentPoly.from_json(v) for k, v in data.items()})


@functools.lru_cache(maxsize=None)
def _close_matching(m: Matching) -> tuple[int, int]:
    """(trivial loops, essential loops) after joining top position j to bottom position j around the annulus."""
    size = m.size
    half = size // 2
    inner = m.partner()
    seen: set[int] = set()
    trivial = essential = 0
    for start in range(1, size + 1):
        if start in seen:
            continue
        x, winding = start, 0
        while True:
            seen.add(x)
            y = inner[x]
            seen.add(y)
            # the closing strand from y: top label -> bottom winds +1
            winding += 1 if y > half else -1
            x = size + 1 - y
            if x == start:
                break
        if winding:
            essential += 1
        else:
            trivial += 1
    return trivial, essential


def annular_trace(v: SkeinVector) -> AnnularElement:
    """Close a rectangle-view element (n bottom, n top) around the annulus."""
    if v.size % 2:
        raise DiagramError("annular closure needs an even number of points")
    d: dict[int, LaurentPoly] = {}
    for m, c in v.items():
        trivial, essential = _close_matching(m)
        d[essential] = d.get(essential, ZERO) + c * DELTA**trivial
    return AnnularElement.from_dict(d)


def check_conjugation_relation(a: SkeinVector, sigma: FramedBraidWord) -> bool:
    """tr(sigma a sigma^-1) == tr(a): a collar braid slides once around the annulus."""
    return annular_trace(act(sigma, act_right(a, invert(sigma)))) == annular_trace(a)


# ---------------------------------------------------------------- splitting closed diagrams


def split_diagram(d: TangleDiagram, inside: Iterable[int]) -> tuple[TangleDiagram, TangleDiagram]:
    """
    Cut a closed diagram along a sphere into (x, y), both in their own coordinates.

    ``inside`` is a set of crossing indices connected through shared edges; x is a regular neighbourhood of a
    spanning tree of it and y is everything else. ``pair(reduce(x), reduce(y)) == kauffman_bracket(d)``.
    """
    if d.n_endpoints:
        raise DiagramError("only closed diagrams can be split")
    S = sorted(set(inside))
    if not S:
        return TangleDiagram(0), d
    if any(not 0 <= c < len(d.crossings) for c in S):
        raise DiagramError("crossing index out of range")
    inc = d.incidences()
    other: dict[tuple, tuple] = {}
    for ds in inc.values():
        other[ds[0]], other[ds[1]] = ds[1], ds[0]

    # spanning tree over S
    in_s = set(S)
    tree: set[int] = set()
    reached = {S[0]}
    stack = [S[0]]
    while stack:
        v = stack.pop()
        for s in range(4):
            w, _ = other[(v, s)]
            if w in in_s and w not in reached:
                reached.add(w)
                tree.add(d.crossings[v][s])
                stack.append(w)
    if reached != in_s:
        raise DiagramError("inside crossings must be connected")

    # walk around the tree: cut darts in counterclockwise order around the neighbourhood
    cuts: list[tuple[int, int]] = []
    dart = (S[0], 0)
    start = None
    while dart != start:
        if start is None:
            start = dart
        v, s = dart
        if d.crossings[v][s] in tree:
            w, t = other[dart]
            dart = (w, (t + 1) % 4)
        else:
            cuts.append(dart)
            dart = (v, (s + 1) % 4)
    size = len(cuts)
    fresh = itertools.count(max(d.labels(), default=0) + 1)

    x_cross = {v: list(d.crossings[v]) for v in S}
    x_boundary = []
    for v, s in cuts:
        lab = next(fresh)
        x_cross[v][s] = lab
        x_boundary.append(lab)
    x = TangleDiagram(size, tuple(tuple(x_cross[v]) for v in S), tuple(x_boundary)).canonical()

    # y: point k of x is point size + 1 - k of y
    cut_pos = {dart: k for k, dart in enumerate(cuts)}
    y_boundary = [0] * size
    y_cross = {v: list(c) for v, c in enumerate(d.crossings) if v not in in_s}
    for k, dart in enumerate(cuts):
        far = other[dart]
        yk = size - 1 - k
        if far[0] in in_s:  # edge runs straight back into x: an arc in y
            j = cut_pos[far]
            if k < j:
                lab = next(fresh)
                y_boundary[yk] = y_boundary[size - 1 - j] = lab
        else:
            y_boundary[yk] = d.label_at(far)
    y = TangleDiagram(size, tuple(tuple(c) for _, c in sorted(y_cross.items())), tuple(y_boundary), d.loops)
    return x, y.canonical()


def crossing_balls(d: TangleDiagram) -> Iterator[set[int]]:
    """Connected crossing sets grown breadth-first from each crossing (all radii)."""
    inc = d.incidences()
    nbrs: dict[int, set[int]] = {i: set() for i in range(len(d.crossings))}
    for ds in inc.values():
        (v, _), (w, _) = ds
        if v != BOUNDARY and w != BOUNDARY and v != w:
            nbrs[v].add(w)
            nbrs[w].add(v)
    for c in nbrs:
        ball = {c}
        frontier = {c}
        while True:
            yield set(ball)
            frontier = {w for v in frontier for w in nbrs[v]} - ball
            if not frontier:
                break
            ball |= frontier


# ---------------------------------------------------------------- two-ball quotient


@dataclasses.dataclass(frozen=True)
class QuotientConfig:
    n_max: int = 2
    word_cutoff: int = 4
    points: tuple[Fraction, ...] = (Fraction(2), Fraction(-3, 5))


@dataclasses.dataclass(frozen=True)
class QuotientResult:
    n_max: int
    word_cutoff: int
    dimension: int
    columns: int
    rows: int
    rank: int
    rational_ranks: tuple[int, ...]


def _columns(n_max: int) -> dict[tuple[int, Matching, Matching], int]:
    cols = {}
    for n in range(n_max + 1):
        for m1 in enumerate_basis(n):
            for m2 in enumerate_basis(n):
                cols[(n, m1, m2)] = len(cols)
    return cols


def _operator(images: dict[Matching, SkeinVector]) -> tuple:
    return tuple(sorted(images.items()))


def _compose_images(outer: dict[Matching, SkeinVector], inner: dict[Matching, SkeinVector]) -> dict:
    """Images of the map v -> outer(inner(v)) on basis vectors."""
    out = {}
    for m, v in inner.items():
        acc = SkeinVector(v.size)
        for k, c in v.items():
            acc = acc + outer[k].scale(c)
        out[m] = acc
    return out


def braid_operators(n: int, cutoff: int) -> list[tuple[dict, dict]]:
    """Distinct pairs (rho(w), rho(across(w^-1))) for words of length <= cutoff in the positive generators."""
    m = 2 * n
    basis = enumerate_basis(n)
    letters = [("s", i, 1) for i in range(1, m)] + [("t", i, 1) for i in range(1, m + 1)]

    def images(w: FramedBraidWord) -> dict:
        return {b: act(w, SkeinVector.basis(b)) for b in basis}

    gens = []
    for letter in letters:
        w = FramedBraidWord(m, (letter,))
        gens.append((images(w), images(across(invert(w)))))
    ident = {b: SkeinVector.basis(b) for b in basis}
    seen = {(_operator(ident), _operator(ident))}
    frontier = [(ident, ident)]
    found = []
    for _ in range(cutoff):
        nxt = []
        for left, right in frontier:
            for gl, gr in gens:
                # w -> w g; the transported word across(inv(w g)) = across(inv(w)) across(inv(g))
                pair_ = (_compose_images(left, gl), _compose_images(right, gr))
                key = (_operator(pair_[0]), _operator(pair_[1]))
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(pair_)
                found.append(pair_)
        frontier = nxt
    return found


def relation_rows(n_max: int, cutoff: int) -> tuple[list[dict[int, LaurentPoly]], int]:
    """Sparse rows spanning the relations of the two-ball quotient, and the number of columns."""
    cols = _columns(n_max)
    rows: list[dict[int, LaurentPoly]] = []
    seen: set[tuple] = set()

    def emit(row: dict[int, LaurentPoly]) -> None:
        row = {c: v for c, v in row.items() if v}
        key = tuple(sorted(row.items()))
        if row and key not in seen:
            seen.add(key)
            rows.append(row)

    def add_tensor(row: dict, n: int, u: SkeinVector, v: SkeinVector, sign: int) -> None:
        for m1, c1 in u.items():
            for m2, c2 in v.items():
                col = cols[(n, m1, m2)]
                row[col] = row.get(col, ZERO) + c1 * c2 * sign

    for n in range(1, n_max + 1):
        basis = enumerate_basis(n)
        for left, right in braid_operators(n, cutoff):
            for m1 in basis:
                for m2 in basis:
                    row: dict[int, LaurentPoly] = {cols[(n, m1, m2)]: ONE}
                    add_tensor(row, n, left[m1], right[m2], -1)
                    emit(row)
        size = 2 * n
        for small in enumerate_basis(n - 1):
            s = SkeinVector.basis(small)
            for big in basis:
                b = SkeinVector.basis(big)
                for i in range(1, size):
                    j = across_position(i, size)
                    row = {}
                    add_tensor(row, n, cap_insert(s, i), b, 1)
                    add_tensor(row, n - 1, s, contract(b, j), -1)
                    emit(row)
                    row = {}
                    add_tensor(row, n, b, cap_insert(s, j), 1)
                    add_tensor(row, n - 1, contract(b, i), s, -1)
                    emit(row)
    return rows, len(cols)


def exact_rank(rows: Sequence[dict[int, LaurentPoly]], ncols: int, seed_point: Fraction = Fraction(2)) -> int:
    """
    Rank over Q(A). A rational evaluation picks candidate rows; fraction-free elimination gives their exact rank
    and an integral kernel; every row is then checked against that kernel, and any row outside the span joins
    the candidates.
    """
    _, chosen = rational_rank(rows, seed_point)
    candidates = list(chosen)
    while True:
        echelon, pivots = bareiss_echelon([rows[k] for k in candidates], ncols)
        kernel = kernel_basis(echelon, pivots, ncols)
        outside = [k for k, r in enumerate(rows) if any(dot(r, x) for x in kernel)]
        if not outside:
            return len(pivots)
        candidates.append(outside[0])


def quotient_rank(config: QuotientConfig = QuotientConfig()) -> QuotientResult:
    """Dimension over Q(A) of the span of K_0 (x) K_0 + ... + K_N (x) K_N modulo braiding and bigon relations."""
    rows, ncols = relation_rows(config.n_max, config.word_cutoff)
    rank = exact_rank(rows, ncols, config.points[0])
    rational = tuple(rational_rank(rows, p)[0] for p in config.points)
    if any(r != rank for r in rational):
        raise InconsistencyError(f"exact rank {rank} but rational ranks {rational}")
    return QuotientResult(config.n_max, config.word_cutoff, ncols - rank, ncols, len(rows), rank, rational)
