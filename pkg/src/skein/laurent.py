"""
Exact arithmetic in Z[A, A^-1].

A LaurentPoly is stored as a sorted tuple of (exponent, coefficient) pairs with no zero coefficients, so equal
polynomials have identical representations and can be hashed and used as dictionary keys.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        p = object.__new__(cls)
        p._terms = tuple(sorted((e, c) for e, c in terms.items() if c))
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls._raw({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> tuple[tuple[int, int], ...]:
        """Terms in ascending exponent order."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return self._terms[0][0]

    def coeff(self, exponent: int) -> int:
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    # ring operations

    def __add__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise ArithmeticError("only units of Z[A, A^-1] have negative powers")
            (e, c), = self._terms
            return LaurentPoly._raw({e * k: c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by A^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms})

    def bar(self) -> LaurentPoly:
        """The involution A -> A^-1 (mirror image)."""
        return LaurentPoly._raw({-e: c for e, c in self._terms})

    def divmod_exact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient self / other; raises ArithmeticError if other does not divide self."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        # Long division on ordinary polynomials after clearing negative exponents.
        lead_e, lead_c = other._terms[-1]
        low = other._terms[0][0]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        bottom = self._terms[0][0] - low
        while rem:
            top = max(rem)
            if top - lead_e < bottom:
                raise ArithmeticError(f"{other} does not divide {self}")
            c = rem[top]
            if c % lead_c:
                raise ArithmeticError(f"{other} does not divide {self}")
            q = c // lead_c
            k = top - lead_e
            quot[k] = q
            for e, oc in other._terms:
                v = rem.get(e + k, 0) - q * oc
                if v:
                    rem[e + k] = v
                else:
                    rem.pop(e + k, None)
        return LaurentPoly._raw(quot)

    def __truediv__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.divmod_exact(other)

    def eval(self, a: Fraction | int) -> Fraction:
        a = Fraction(a)
        if a == 0:
            raise ZeroDivisionError("cannot substitute A = 0 into a Laurent polynomial")
        return sum((c * a**e for e, c in self._terms), Fraction(0))

    def eval_mod(self, a: int, p: int) -> int:
        """Value at A = a in Z/p (a must be a unit mod p)."""
        return sum(c * pow(a, e, p) for e, c in self._terms) % p

    # comparisons / hashing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # text and JSON forms

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(reversed(self._terms)):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in reversed(self._terms)]

    @classmethod
    def from_json(cls, data: list) -> LaurentPoly:
        return cls((int(e), int(c)) for e, c in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the canonical text form (also accepts unsorted terms and '*' between coefficient and A)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        acc: dict[int, int] = {}
        pos = 0
        for m in _TERM_RE.finditer(s):
            if m.start() != pos:
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            pos = m.end()
            sign = -1 if m.group("sign") == "-" else 1
            coeff = m.group("coeff")
            var = m.group("var")
            if coeff is None and var is None:
                raise ValueError(f"empty term in {text!r}")
            c = int(coeff) if coeff else 1
            e = 0
            if var:
                e = int(m.group("exp")) if m.group("exp") is not None else 1
            acc[e] = acc.get(e, 0) + sign * c
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        return cls._raw(acc)


_TERM_RE = re.compile(r"(?P<sign>[+-])(?P<coeff>\d+)?(?:\*?(?P<var>A)(?:\^(?P<exp>-?\d+))?)?")


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)


def loop_value() -> LaurentPoly:
    """delta = -A^2 - A^-2, the value of a trivial circle."""
    return DELTA


DELTA = LaurentPoly({2: -1, -2: -1})

# A kink X(e,e,f,g) / X(f,g,e,e) resolves to POSITIVE_KINK times the straightened strand; the mirror kink to
# NEGATIVE_KINK. These are the only framing constants in the package.
POSITIVE_KINK = LaurentPoly.monomial(3, -1)
NEGATIVE_KINK = LaurentPoly.monomial(-3, -1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def evaluate(p: LaurentPoly, a: Fraction | int) -> Fraction:
    return p.eval(a)
