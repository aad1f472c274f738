"""
Exact rank computations for relation matrices over Z[A, A^-1].

Rows are sparse: dict column -> LaurentPoly. ``bareiss_echelon`` is one-step fraction-free elimination (every
division is exact); ``rational_rank`` evaluates at a rational point and eliminates over Q.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import ZERO, LaurentPoly

SparseRow = dict[int, LaurentPoly]


def bareiss_echelon(rows: Sequence[SparseRow], ncols: int) -> tuple[list[list[LaurentPoly]], list[int]]:
    """Row echelon form by fraction-free (Bareiss) elimination; returns (nonzero echelon rows, pivot columns)."""
    M = [[r.get(c, ZERO) for c in range(ncols)] for r in rows]
    nrows = len(M)
    prev = LaurentPoly.constant(1)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        piv = next((k for k in range(r, nrows) if M[k][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for k in range(r + 1, nrows):
            f = M[k][c]
            row_k = M[k]
            for j in range(c, ncols):
                v = p * row_k[j] - f * M[r][j]
                row_k[j] = v.divmod_exact(prev) if v else ZERO
        # columns left of c in rows below are already zero
        for k in range(r + 1, nrows):
            M[k][c] = ZERO
        prev = p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def bareiss_rank(rows: Sequence[SparseRow], ncols: int) -> int:
    return len(bareiss_echelon(rows, ncols)[1])


def kernel_basis(echelon: list[list[LaurentPoly]], pivots: list[int], ncols: int) -> list[list[LaurentPoly]]:
    """Integral basis of {x : E x = 0} for an echelon matrix E, by fraction-free back substitution."""
    free = [c for c in range(ncols) if c not in set(pivots)]
    scale = LaurentPoly.constant(1)
    for j, c in enumerate(pivots):
        scale = scale * echelon[j][c]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = scale
        for j in range(len(pivots) - 1, -1, -1):
            c = pivots[j]
            row = echelon[j]
            acc = ZERO
            for k in range(c + 1, ncols):
                if row[k] and x[k]:
                    acc = acc + row[k] * x[k]
            x[c] = (-acc).divmod_exact(row[c]) if acc else ZERO
        basis.append(x)
    return basis


def dot(row: SparseRow, x: Sequence[LaurentPoly]) -> LaurentPoly:
    acc = ZERO
    for c, v in row.items():
        if x[c]:
            acc = acc + v * x[c]
    return acc


class RationalEliminator:
    """Incremental row echelon form over Q."""

    def __init__(self):
        self.basis: dict[int, dict[int, Fraction]] = {}  # pivot column -> row with pivot 1

    def add(self, row: dict[int, Fraction]) -> bool:
        """Insert a row; True iff it was independent of the rows seen so far."""
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            b = self.basis.get(c)
            if b is None:
                inv = 1 / row[c]
                self.basis[c] = {k: v * inv for k, v in row.items()}
                return True
            f = row[c]
            for k, v in b.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.basis)


def rational_rank(rows: Iterable[SparseRow], a: Fraction) -> tuple[int, list[int]]:
    """Rank of the matrix with A := a, and the indices of a maximal independent set of rows."""
    cache: dict[LaurentPoly, Fraction] = {}
    elim = RationalEliminator()
    chosen = []
    for idx, row in enumerate(rows):
        ev = {}
        for c, v in row.items():
            x = cache.get(v)
            if x is None:
                x = cache[v] = v.eval(a)
            ev[c] = x
        if elim.add(ev):
            chosen.append(idx)
    return elim.rank, chosen
