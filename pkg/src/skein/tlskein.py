"""
The relative skein module K_n of the ball in its crossingless matching basis.

Boundary points are labelled 1..2n counterclockwise on the disk. The rectangle view used for stacking puts points
1..b on the bottom (left to right) and b+t..b+1 on the top (left to right), so it is a relabelling of the disk view
owned by ``rect_label``/``rect_position``; with b = t = n this is the Temperley-Lieb picture.
"""

from __future__ import annotations

import dataclasses
import functools
import json
import re
from typing import Iterable, Iterator, Mapping

from .bracket import expand
from .diagram import DiagramError, TangleDiagram
from .laurent import DELTA, ONE, ZERO, LaurentPoly


def rect_label(side: str, j: int, bottom: int, top: int) -> int:
    """Disk label of the j-th point (1-based, left to right) on the given side of a bottom/top rectangle."""
    if side == "bottom":
        if not 1 <= j <= bottom:
            raise ValueError(f"bottom position {j} out of range")
        return j
    if not 1 <= j <= top:
        raise ValueError(f"top position {j} out of range")
    return bottom + top + 1 - j


def rect_position(label: int, bottom: int, top: int) -> tuple[str, int]:
    if 1 <= label <= bottom:
        return ("bottom", label)
    if bottom < label <= bottom + top:
        return ("top", bottom + top + 1 - label)
    raise ValueError(f"label {label} out of range")


@dataclasses.dataclass(frozen=True, order=False)
class Matching:
    """A crossingless perfect matching of the points 1..size."""

    pairs: tuple[tuple[int, int], ...]
    size: int

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        seen = [p for pr in pairs for p in pr]
        if sorted(seen) != list(range(1, self.size + 1)):
            raise DiagramError(f"{pairs} is not a perfect matching of 1..{self.size}")
        for a, b in pairs:
            for c, d in pairs:
                if a < c < b < d:
                    raise DiagramError(f"pairs {(a, b)} and {(c, d)} cross")

    @classmethod
    def _trusted(cls, pairs, size: int) -> Matching:
        m = object.__new__(cls)
        object.__setattr__(m, "pairs", tuple(sorted(tuple(sorted(p)) for p in pairs)))
        object.__setattr__(m, "size", size)
        return m

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Matching:
        pairs = tuple(pairs)
        return cls(pairs, 2 * len(pairs))

    @classmethod
    def empty(cls) -> Matching:
        return cls._trusted((), 0)

    @property
    def n(self) -> int:
        return self.size // 2

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out

    def sequence(self) -> tuple[int, ...]:
        """Partner of 1, partner of 2, ...; the sort key of the basis."""
        p = self.partner()
        return tuple(p[i] for i in range(1, self.size + 1))

    def mirror(self) -> Matching:
        """Reflect the disk: label i becomes size + 1 - i."""
        s = self.size + 1
        return Matching._trusted(((s - a, s - b) for a, b in self.pairs), self.size)

    def to_diagram(self) -> TangleDiagram:
        boundary = [0] * self.size
        for k, (a, b) in enumerate(self.pairs, start=1):
            boundary[a - 1] = boundary[b - 1] = k
        return TangleDiagram.trusted(self.size, (), boundary, 0)

    def __lt__(self, other: Matching) -> bool:
        return (self.size, self.sequence()) < (other.size, other.sequence())

    def __str__(self) -> str:
        return "{" + ",".join(f"({a},{b})" for a, b in self.pairs) + "}"


def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


@functools.lru_cache(maxsize=None)
def enumerate_basis(n: int) -> tuple[Matching, ...]:
    """All crossingless matchings of 2n points, sorted by partner sequence."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(lo: int, hi: int) -> Iterator[tuple[tuple[int, int], ...]]:
        # matchings of the interval lo..hi-1
        if lo >= hi:
            yield ()
            return
        for mid in range(lo + 1, hi, 2):
            for inner in gen(lo + 1, mid):
                for outer in gen(mid + 1, hi):
                    yield ((lo, mid),) + inner + outer

    out = [Matching._trusted(p, 2 * n) for p in gen(1, 2 * n + 1)]
    return tuple(sorted(out))


class SkeinVector:
    """A finite R-linear combination of matchings on the same number of points."""

    __slots__ = ("size", "_terms")

    def __init__(self, size: int, terms: Mapping[Matching, LaurentPoly] | Iterable = ()):
        self.size = size
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Matching, LaurentPoly] = {}
        for m, c in items:
            if m.size != size:
                raise DiagramError(f"matching on {m.size} points in a vector on {size} points")
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c)
            acc[m] = acc.get(m, ZERO) + c
        self._terms = {m: acc[m] for m in sorted(acc) if acc[m]}

    @classmethod
    def basis(cls, m: Matching) -> SkeinVector:
        return cls(m.size, {m: ONE})

    @classmethod
    def zero(cls, size: int) -> SkeinVector:
        return cls(size)

    @property
    def n(self) -> int:
        return self.size // 2

    def items(self):
        return self._terms.items()

    def coeff(self, m: Matching) -> LaurentPoly:
        return self._terms.get(m, ZERO)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: SkeinVector) -> None:
        if self.size != other.size:
            raise DiagramError(f"vectors on {self.size} and {other.size} points")

    def __add__(self, other: SkeinVector) -> SkeinVector:
        self._check(other)
        return SkeinVector(self.size, list(self.items()) + list(other.items()))

    def __neg__(self) -> SkeinVector:
        return SkeinVector(self.size, {m: -c for m, c in self.items()})

    def __sub__(self, other: SkeinVector) -> SkeinVector:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> SkeinVector:
        return SkeinVector(self.size, {m: c * v for m, v in self.items()})

    def __rmul__(self, c) -> SkeinVector:
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinVector):
            return NotImplemented
        return self.size == other.size and self._terms == other._terms

    def __hash__(self):
        return hash((self.size, tuple(self._terms.items())))

    def map_basis(self, f, size: int) -> SkeinVector:
        """Extend f: Matching -> SkeinVector (on ``size`` points) linearly."""
        out: dict[Matching, LaurentPoly] = {}
        for m, c in self.items():
            for m2, c2 in f(m).items():
                out[m2] = out.get(m2, ZERO) + c * c2
        return SkeinVector(size, out)

    def mirror(self) -> SkeinVector:
        return SkeinVector(self.size, {m.mirror(): c for m, c in self.items()})

    # text / JSON

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            cs = str(c) if c.is_monomial() else f"({c})"
            parts.append(f"{cs} * {m}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SkeinVector({self.size}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "points": self.size,
            "terms": [{"coeff": c.to_json(), "matching": [list(p) for p in m.pairs]} for m, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> SkeinVector:
        size = int(data["points"])
        return cls(
            size,
            [(Matching(tuple(tuple(p) for p in t["matching"]), size), LaurentPoly.from_json(t["coeff"]))
             for t in data["terms"]],
        )

    @classmethod
    def parse(cls, text: str, size: int | None = None) -> SkeinVector:
        """Parse ``coeff * {(a,b),...} + ...``; multi-term coefficients are parenthesized, a bare matching means 1."""
        text = text.strip()
        if text == "0":
            if size is None:
                raise DiagramError("the zero vector needs an explicit point count")
            return cls(size)
        terms = []
        pos = 0
        while pos < len(text):
            m = _VEC_TERM_RE.match(text, pos)
            if not m:
                raise DiagramError(f"cannot parse vector at offset {pos}: {text[pos:pos + 20]!r}")
            pos = m.end()
            coeff = (m.group("coeff") or "").strip()
            c = LaurentPoly.parse(coeff.strip("()")) if coeff else ONE
            pairs = tuple((int(a), int(b)) for a, b in re.findall(r"\((\d+)\s*,\s*(\d+)\)", m.group("m")))
            terms.append((pairs, c))
        if not terms:
            raise DiagramError("empty vector text")
        sizes = {2 * len(p) for p, _ in terms}
        if size is None:
            if len(sizes) != 1:
                raise DiagramError("terms have different point counts")
            size = sizes.pop()
        return cls(size, [(Matching(p, size), c) for p, c in terms])

    def dumps(self) -> str:
        return json.dumps(self.to_json())


_VEC_TERM_RE = re.compile(r"\s*(?:(?P<coeff>\([^()]*\)|[^{}()*]+?)\s*\*\s*)?(?P<m>\{[^}]*\})\s*(?:\+|$)")


def reduce(d: TangleDiagram) -> SkeinVector:
    """Express a tangle diagram in the matching basis."""
    return SkeinVector(
        d.n_endpoints, {Matching._trusted(pairs, d.n_endpoints): c for pairs, c in expand(d).items()}
    )


# ---------------------------------------------------------------------------------------------------------------
# Cap insertion and contraction


def _cap_insert_matching(m: Matching, i: int) -> Matching:
    def shift(a):
        return a + 2 if a >= i else a

    return Matching._trusted([(shift(a), shift(b)) for a, b in m.pairs] + [(i, i + 1)], m.size + 2)


def cap_insert(v: SkeinVector, i: int) -> SkeinVector:
    """Add the boundary-parallel arc (i, i+1); labels >= i move up by two."""
    size = v.size + 2
    if not 1 <= i <= size - 1:
        raise ValueError(f"cap position {i} out of range 1..{size - 1}")
    return SkeinVector(size, {_cap_insert_matching(m, i): c for m, c in v.items()})


@functools.lru_cache(maxsize=None)
def _contract_matching(m: Matching, i: int) -> tuple[Matching, int]:
    p = m.partner()
    if p[i] == i + 1:
        rest = [pr for pr in m.pairs if pr != (i, i + 1)]
        loops = 1
    else:
        a, b = p[i], p[i + 1]
        rest = [pr for pr in m.pairs if i not in pr and i + 1 not in pr] + [(a, b)]
        loops = 0

    def shift(x):
        return x - 2 if x > i + 1 else x

    return Matching._trusted([(shift(a), shift(b)) for a, b in rest], m.size - 2), loops


def cap_insert_i(v: SkeinVector, i: int) -> SkeinVector:
    return cap_insert(v, i)


def contract(v: SkeinVector, i: int) -> SkeinVector:
    """Join boundary points i and i+1 outside the disk and re-express in the basis of K_{n-1}."""
    if not 1 <= i <= v.size - 1:
        raise ValueError(f"contraction position {i} out of range 1..{v.size - 1}")
    out: dict[Matching, LaurentPoly] = {}
    for m, c in v.items():
        m2, loops = _contract_matching(m, i)
        out[m2] = out.get(m2, ZERO) + c * DELTA**loops
    return SkeinVector(v.size - 2, out)


contract_i = contract


# ---------------------------------------------------------------------------------------------------------------
# Stacking


@functools.lru_cache(maxsize=1 << 16)
def compose_matchings(lower: Matching, upper: Matching, lower_bottom: int, upper_top: int) -> tuple[Matching, int]:
    """Stack ``upper`` on ``lower``; returns the resulting matching and the number of closed loops."""
    mid = lower.size - lower_bottom
    if upper.size - upper_top != mid:
        raise DiagramError(f"cannot stack: {mid} middle points below, {upper.size - upper_top} above")
    b1, t2 = lower_bottom, upper_top
    lp, up = lower.partner(), upper.partner()

    def lower_to_upper(label):  # lower top label -> upper bottom label
        return b1 + mid + 1 - label

    def upper_to_lower(label):
        return b1 + mid + 1 - label

    visited_mid: set[int] = set()  # upper bottom labels
    pairs = []
    done: set[tuple[str, int]] = set()
    for side, start in [("L", k) for k in range(1, b1 + 1)] + [("U", k) for k in range(mid + 1, mid + t2 + 1)]:
        if (side, start) in done:
            continue
        s, x = side, start
        while True:
            if s == "L":
                y = lp[x]
                if y <= b1:
                    end = ("L", y)
                    break
                j = lower_to_upper(y)
                visited_mid.add(j)
                s, x = "U", j
            else:
                y = up[x]
                if y > mid:
                    end = ("U", y)
                    break
                visited_mid.add(y)
                s, x = "L", upper_to_lower(y)
        done.add((side, start))
        done.add(end)
        pairs.append((_result_label(side, start, b1, mid), _result_label(end[0], end[1], b1, mid)))
    loops = 0
    for j in range(1, mid + 1):
        if j in visited_mid:
            continue
        loops += 1
        x = j
        while x not in visited_mid:
            visited_mid.add(x)
            y = up[x]
            visited_mid.add(y)
            x = lower_to_upper(lp[upper_to_lower(y)])
    return Matching._trusted(pairs, b1 + t2), loops


def _result_label(side: str, label: int, b1: int, mid: int) -> int:
    return label if side == "L" else b1 + (label - mid)


def compose(lower: SkeinVector, upper: SkeinVector, lower_bottom: int, upper_top: int) -> SkeinVector:
    out: dict[Matching, LaurentPoly] = {}
    for m1, c1 in lower.items():
        for m2, c2 in upper.items():
            m, loops = compose_matchings(m1, m2, lower_bottom, upper_top)
            c = c1 * c2
            if loops:
                c = c * DELTA**loops
            out[m] = out.get(m, ZERO) + c
    return SkeinVector(lower_bottom + upper_top, out)


def compose_rect(x: SkeinVector, y: SkeinVector) -> SkeinVector:
    """Stack y on top of x (both with n bottom and n top points)."""
    if x.size != y.size:
        raise DiagramError(f"mismatched n: {x.n} and {y.n}")
    n = x.n
    return compose(x, y, n, n)


def identity_rect(n: int) -> SkeinVector:
    return SkeinVector.basis(Matching._trusted([(j, 2 * n + 1 - j) for j in range(1, n + 1)], 2 * n))


def e_rect(n: int, i: int) -> SkeinVector:
    """The Temperley-Lieb generator e_i: a cup and a cap joining positions i and i+1."""
    if not 1 <= i < n:
        raise ValueError(f"e_{i} needs 1 <= i < {n}")
    pairs = [(i, i + 1), (2 * n + 1 - i, 2 * n - i)]
    pairs += [(j, 2 * n + 1 - j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return SkeinVector.basis(Matching._trusted(pairs, 2 * n))
