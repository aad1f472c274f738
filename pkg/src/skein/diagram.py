"""
Planar tangle diagrams with blackboard framing, and framed braid words.

A TangleDiagram has 2n boundary points numbered 1..2n counterclockwise around the disk, a list of crossings in
PD form and a count of crossing-free closed loops. Each crossing X(a, b, c, d) lists the four edge labels met going
counterclockwise, starting from the incoming under-strand, so the under-strand runs a -> c and the over-strand
joins b and d. ``boundary[k - 1]`` is the label of the edge ending at boundary point k. Every edge label has exactly
two incidences, where a boundary point counts as one.

When a diagram is viewed as a rectangle with ``b`` points on the bottom and ``t`` on top, the bottom points carry
labels 1..b from left to right and the top points carry labels b+t, ..., b+1 from left to right. This keeps the
labels counterclockwise and is the only convention used for stacking.
"""

from __future__ import annotations

import dataclasses
import re
from collections import defaultdict
from typing import Iterable, Sequence

Crossing = tuple[int, int, int, int]
Dart = tuple[object, int]

BOUNDARY = "B"


class DiagramError(ValueError):
    """Base class for malformed diagrams and braid words."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ParseError(DiagramError):
    pass


class DanglingEdgeError(DiagramError):
    pass


class OddEndpointError(DiagramError):
    pass


class PlanarityError(DiagramError):
    pass


class BraidIndexError(DiagramError):
    pass


@dataclasses.dataclass(frozen=True)
class TangleDiagram:
    n_endpoints: int
    crossings: tuple[Crossing, ...] = ()
    boundary: tuple[int, ...] = ()
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(x) for x in self.crossings))
        object.__setattr__(self, "boundary", tuple(self.boundary))
        check_structure(self)
        if not validate_planarity(self):
            raise PlanarityError("incidence structure has no planar embedding with the given boundary order")

    @classmethod
    def trusted(cls, n_endpoints: int, crossings, boundary, loops: int = 0) -> TangleDiagram:
        """Build without validation; for internal transformations that preserve planarity."""
        d = object.__new__(cls)
        object.__setattr__(d, "n_endpoints", n_endpoints)
        object.__setattr__(d, "crossings", tuple(crossings))
        object.__setattr__(d, "boundary", tuple(boundary))
        object.__setattr__(d, "loops", loops)
        return d

    @property
    def n(self) -> int:
        return self.n_endpoints // 2

    def labels(self) -> set[int]:
        out = set(self.boundary)
        for x in self.crossings:
            out.update(x)
        return out

    def incidences(self) -> dict[int, list[Dart]]:
        inc: dict[int, list[Dart]] = defaultdict(list)
        for k, e in enumerate(self.boundary):
            inc[e].append((BOUNDARY, k))
        for i, x in enumerate(self.crossings):
            for s, e in enumerate(x):
                inc[e].append((i, s))
        return inc

    def label_at(self, dart: Dart) -> int:
        v, s = dart
        return self.boundary[s] if v == BOUNDARY else self.crossings[v][s]

    def canonical(self) -> TangleDiagram:
        """Relabel edges 1, 2, ... in order of first appearance (boundary first, then crossings)."""
        relabel: dict[int, int] = {}
        for e in self.boundary:
            relabel.setdefault(e, len(relabel) + 1)
        for x in self.crossings:
            for e in x:
                relabel.setdefault(e, len(relabel) + 1)
        return TangleDiagram.trusted(
            self.n_endpoints,
            tuple(tuple(relabel[e] for e in x) for x in self.crossings),
            tuple(relabel[e] for e in self.boundary),
            self.loops,
        )

    def key(self) -> tuple:
        c = self.canonical()
        return (c.n_endpoints, c.crossings, c.boundary, c.loops)

    def mirror(self) -> TangleDiagram:
        """Switch every crossing (over and under strands exchange)."""
        return TangleDiagram.trusted(
            self.n_endpoints, tuple(x[1:] + x[:1] for x in self.crossings), self.boundary, self.loops
        )

    def with_loops(self, loops: int) -> TangleDiagram:
        return TangleDiagram.trusted(self.n_endpoints, self.crossings, self.boundary, loops)

    def faces(self) -> list[list[Dart]]:
        """Faces of the embedding as dart cycles; each dart's edge is traversed with the face on its right."""
        inc = self.incidences()
        other: dict[Dart, Dart] = {}
        for ds in inc.values():
            other[ds[0]] = ds[1]
            other[ds[1]] = ds[0]
        seen: set[Dart] = set()
        faces = []
        for d in sorted(other, key=_dart_sort_key):
            if d in seen:
                continue
            face = []
            cur = d
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                cur = self._rotate(other[cur])
            faces.append(face)
        return faces

    def _rotate(self, dart: Dart) -> Dart:
        v, s = dart
        if v == BOUNDARY:
            # the outer vertex sees the boundary points clockwise
            return (BOUNDARY, (s - 1) % self.n_endpoints)
        return (v, (s + 1) % 4)

    def to_text(self) -> str:
        c = self.canonical()
        lines = [f"endpoints {c.n_endpoints}"]
        if c.loops:
            lines.append(f"loops {c.loops}")
        inc = c.incidences()
        done = set()
        for k, e in enumerate(c.boundary):
            if e in done:
                continue
            done.add(e)
            ends = inc[e]
            if all(v == BOUNDARY for v, _ in ends):
                lines.append(f"arc {ends[0][1] + 1}-{ends[1][1] + 1}")
            else:
                lines.append(f"edge {e} b{k + 1} *")
        for x in c.crossings:
            lines.append("X({},{},{},{})".format(*x))
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.to_text()


def _dart_sort_key(d: Dart):
    v, s = d
    return (0, 0, s) if v == BOUNDARY else (1, v, s)


def check_structure(d: TangleDiagram) -> None:
    if d.n_endpoints < 0 or d.n_endpoints % 2:
        raise OddEndpointError(f"endpoint count must be even and non-negative, got {d.n_endpoints}")
    if len(d.boundary) != d.n_endpoints:
        raise DanglingEdgeError(f"{d.n_endpoints} endpoints declared but {len(d.boundary)} boundary edges given")
    if d.loops < 0:
        raise DiagramError("negative loop count")
    for x in d.crossings:
        if len(x) != 4:
            raise DiagramError(f"crossing {x} does not have four edges")
    for e, ds in d.incidences().items():
        if len(ds) != 2:
            raise DanglingEdgeError(f"edge {e} has {len(ds)} incidences, expected 2")


def validate_planarity(d: TangleDiagram) -> bool:
    """True iff the rotation system (crossings counterclockwise, boundary on the outer face) has genus zero."""
    if not d.crossings and not d.boundary:
        return True
    inc = d.incidences()
    vertices: list[object] = list(range(len(d.crossings)))
    if d.n_endpoints:
        vertices.append(BOUNDARY)
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for ds in inc.values():
        a, b = find(ds[0][0]), find(ds[1][0])
        if a != b:
            parent[a] = b
    components = len({find(v) for v in vertices})
    euler = len(vertices) - len(inc) + len(d.faces())
    return euler == 2 * components


# ---------------------------------------------------------------------------------------------------------------
# Assembly helpers


def _assemble(
    n_endpoints: int,
    crossings: Sequence[Crossing],
    boundary: Sequence[int],
    joins: Iterable[tuple[int, int]],
    loops: int,
) -> TangleDiagram:
    """Identify pairs of labels (each join consumes two dangling ends) and renormalize; closed cycles become loops."""
    parent: dict[int, int] = {}

    def find(e):
        parent.setdefault(e, e)
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    joined = []
    for a, b in joins:
        ra, rb = find(a), find(b)
        joined.append(a)
        if ra == rb:
            continue
        parent[ra] = rb
    xs = tuple(tuple(find(e) for e in x) for x in crossings)
    bd = tuple(find(e) for e in boundary)
    alive = set(bd)
    for x in xs:
        alive.update(x)
    closed = {find(e) for e in joined} - alive
    return TangleDiagram.trusted(n_endpoints, xs, bd, loops + len(closed)).canonical()


def _offset(d: TangleDiagram, k: int) -> tuple[tuple[Crossing, ...], tuple[int, ...]]:
    return (
        tuple(tuple(e + k for e in x) for x in d.crossings),
        tuple(e + k for e in d.boundary),
    )


def _max_label(d: TangleDiagram) -> int:
    return max(d.labels(), default=0)


def stack(lower: TangleDiagram, upper: TangleDiagram, lower_bottom: int, upper_top: int) -> TangleDiagram:
    """Place ``upper`` on top of ``lower``; the middle points (lower's top, upper's bottom) are joined."""
    mid = lower.n_endpoints - lower_bottom
    if upper.n_endpoints - upper_top != mid:
        raise DiagramError(f"cannot stack: {mid} points on lower top, {upper.n_endpoints - upper_top} on upper bottom")
    lx, lb = _offset(lower, 0)
    ux, ub = _offset(upper, _max_label(lower))
    b1, t2 = lower_bottom, upper_top
    joins = [(lb[b1 + mid - j], ub[j - 1]) for j in range(1, mid + 1)]
    bottom = list(lb[:b1])
    top = [ub[mid + t2 - j] for j in range(1, t2 + 1)]  # top position j, left to right
    boundary = bottom + top[::-1]
    return _assemble(b1 + t2, lx + ux, boundary, joins, lower.loops + upper.loops)


def closure(d: TangleDiagram) -> TangleDiagram:
    """Close a rectangle tangle with m bottom and m top points by joining top position i to bottom position i."""
    m = d.n
    joins = [(d.boundary[i - 1], d.boundary[2 * m - i]) for i in range(1, m + 1)]
    return _assemble(0, d.crossings, (), joins, d.loops)


def disjoint_union(d1: TangleDiagram, *rest: TangleDiagram) -> TangleDiagram:
    """Split union of closed diagrams."""
    xs = list(d1.crossings)
    loops = d1.loops
    k = _max_label(d1)
    if d1.n_endpoints or any(d.n_endpoints for d in rest):
        raise DiagramError("disjoint union is defined for closed diagrams only")
    for d in rest:
        ox, _ = _offset(d, k)
        xs.extend(ox)
        k += _max_label(d)
        loops += d.loops
    return TangleDiagram.trusted(0, xs, (), loops).canonical()


def connected_sum(d1: TangleDiagram, d2: TangleDiagram) -> TangleDiagram:
    """Band d1 and d2 together, cutting the edges at slot 0 of their first crossings."""
    if d1.n_endpoints or d2.n_endpoints or not d1.crossings or not d2.crossings:
        raise DiagramError("connected sum needs two closed diagrams with crossings")
    k = _max_label(d1)
    x2_base, _ = _offset(d2, k)
    e, f = d1.crossings[0][0], x2_base[0][0]
    g = k + _max_label(d2) + 1
    for second_slot in _slots_of(x2_base, f):
        x1 = [list(x) for x in d1.crossings]
        x2 = [list(x) for x in x2_base]
        # one end of e meets one end of f through the new edge g; the remaining ends share label e
        x1[0][0] = g
        x2[second_slot[0]][second_slot[1]] = g
        for x in x2:
            for s, lab in enumerate(x):
                if lab == f:
                    x[s] = e
        try:
            return TangleDiagram(0, [tuple(x) for x in x1 + x2], (), d1.loops + d2.loops).canonical()
        except PlanarityError:
            continue
    raise PlanarityError("no planar band found")


def _slots_of(xs, label) -> list[tuple[int, int]]:
    return [(i, s) for i, x in enumerate(xs) for s, lab in enumerate(x) if lab == label]


# ---------------------------------------------------------------------------------------------------------------
# Text format

_STMT_RE = re.compile(
    r"""^(?:
        endpoints\s+(?P<endpoints>-?\d+)
      | loops\s+(?P<loops>\d+)
      | arc\s+(?P<p>\d+)\s*-\s*(?P<q>\d+)
      | X\s*[(\[]\s*(?P<x>[^)\]]*)[)\]]
      | edge\s+(?P<eid>\w+)\s+(?P<end1>\S+)\s+(?P<end2>\S+)
    )$""",
    re.VERBOSE,
)


def parse_tangle(text: str) -> TangleDiagram:
    n_endpoints: int | None = None
    loops = 0
    crossings: list[list[str]] = []
    bends: dict[int, str] = {}
    edge_lines: dict[str, tuple[list[str], int]] = {}
    arc_count = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for stmt in raw.split("#", 1)[0].split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            m = _STMT_RE.match(stmt)
            if not m:
                raise ParseError(f"unrecognized statement {stmt!r}", lineno)
            if m.group("endpoints") is not None:
                if n_endpoints is not None:
                    raise ParseError("endpoints declared twice", lineno)
                n_endpoints = int(m.group("endpoints"))
                if n_endpoints < 0 or n_endpoints % 2:
                    raise OddEndpointError(f"endpoint count must be even, got {n_endpoints}", lineno)
            elif m.group("loops") is not None:
                loops += int(m.group("loops"))
            elif m.group("p") is not None:
                arc_count += 1
                eid = f"@arc{arc_count}"
                for k in (int(m.group("p")), int(m.group("q"))):
                    _claim_endpoint(bends, k, eid, lineno)
                edge_lines[eid] = (["b" + m.group("p"), "b" + m.group("q")], lineno)
            elif m.group("x") is not None:
                labels = [t.strip() for t in m.group("x").split(",")]
                if len(labels) != 4 or not all(re.fullmatch(r"\w+", t) for t in labels):
                    raise ParseError(f"crossing needs four edge labels: {stmt!r}", lineno)
                crossings.append(labels)
            else:
                eid = m.group("eid")
                if eid in edge_lines:
                    raise ParseError(f"edge {eid} declared twice", lineno)
                ends = [m.group("end1"), m.group("end2")]
                for end in ends:
                    if end == "*":
                        continue
                    bm = re.fullmatch(r"b(\d+)", end)
                    if not bm:
                        raise ParseError(f"edge end must be b<k> or *, got {end!r}", lineno)
                    _claim_endpoint(bends, int(bm.group(1)), eid, lineno)
                edge_lines[eid] = (ends, lineno)
    if n_endpoints is None:
        raise ParseError("missing 'endpoints' declaration")
    for k in bends:
        if not 1 <= k <= n_endpoints:
            raise ParseError(f"boundary point {k} out of range 1..{n_endpoints}", edge_lines[bends[k]][1])
    if len(bends) != n_endpoints:
        missing = sorted(set(range(1, n_endpoints + 1)) - set(bends))
        raise DanglingEdgeError(f"boundary points {missing} have no edge")

    counts: dict[str, int] = defaultdict(int)
    for x in crossings:
        for t in x:
            counts[t] += 1
    for eid, (ends, lineno) in edge_lines.items():
        stars = ends.count("*")
        if counts.get(eid, 0) != stars:
            raise DanglingEdgeError(
                f"edge {eid} declares {stars} crossing ends but appears {counts.get(eid, 0)} times in crossings",
                lineno,
            )
    for t, c in counts.items():
        if t not in edge_lines and c != 2:
            raise DanglingEdgeError(f"edge {t} appears {c} time(s) among crossings, expected 2")

    ids: dict[str, int] = {}

    def lab(t: str) -> int:
        return ids.setdefault(t, len(ids) + 1)

    boundary = tuple(lab(bends[k]) for k in range(1, n_endpoints + 1))
    xs = tuple(tuple(lab(t) for t in x) for x in crossings)
    return TangleDiagram(n_endpoints, xs, boundary, loops)


def _claim_endpoint(bends: dict[int, str], k: int, eid: str, lineno: int) -> None:
    if k in bends:
        raise ParseError(f"boundary point {k} used twice", lineno)
    bends[k] = eid


def from_pd(pd: Iterable[Sequence[int]], loops: int = 0) -> TangleDiagram:
    """Closed diagram from a PD code."""
    return TangleDiagram(0, [tuple(x) for x in pd], (), loops)


# ---------------------------------------------------------------------------------------------------------------
# Framed braid words


@dataclasses.dataclass(frozen=True)
class FramedBraidWord:
    """A word in s_1..s_{m-1} (crossings) and t_1..t_m (framing twists), read bottom to top."""

    strands: int
    letters: tuple[tuple[str, int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(tuple(x) for x in self.letters))
        for g, i, p in self.letters:
            if g not in ("s", "t") or p not in (1, -1):
                raise DiagramError(f"bad braid letter {(g, i, p)}")
            top = self.strands - 1 if g == "s" else self.strands
            if not 1 <= i <= top:
                raise BraidIndexError(f"{g}{i} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: FramedBraidWord) -> FramedBraidWord:
        if self.strands != other.strands:
            raise DiagramError("strand counts differ")
        return FramedBraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(f"{g}{i}" + ("" if p == 1 else "^-1") for g, i, p in self.letters)

    @classmethod
    def identity(cls, strands: int) -> FramedBraidWord:
        return cls(strands, ())


_LETTER_RE = re.compile(r"([st])(\d+)(?:\^(-?1))?")


def parse_braid(text: str, strands: int) -> FramedBraidWord:
    letters = []
    for tok in text.split():
        m = _LETTER_RE.fullmatch(tok)
        if not m:
            raise ParseError(f"unknown braid token {tok!r}")
        letters.append((m.group(1), int(m.group(2)), int(m.group(3) or 1)))
    return FramedBraidWord(strands, tuple(letters))


def braid_to_tangle(w: FramedBraidWord) -> TangleDiagram:
    """The braid as a rectangle tangle with w.strands points on the bottom and on the top."""
    m = w.strands
    fresh = iter(range(1, 10**9))
    bottom = [next(fresh) for _ in range(m)]
    cur = list(bottom)
    xs: list[Crossing] = []
    for g, i, p in w.letters:
        if g == "s":
            sw, se = cur[i - 1], cur[i]
            nw, ne = next(fresh), next(fresh)
            xs.append((se, ne, nw, sw) if p == 1 else (sw, se, ne, nw))
            cur[i - 1], cur[i] = nw, ne
        else:
            below, above, loop = cur[i - 1], next(fresh), next(fresh)
            xs.append((loop, loop, above, below) if p == 1 else (below, loop, loop, above))
            cur[i - 1] = above
    boundary = bottom + cur[::-1]
    return TangleDiagram.trusted(2 * m, xs, boundary, 0).canonical()
