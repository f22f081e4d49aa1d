"""Sparse multivariate polynomials with exact rational coefficients.

Variables come in triples (x_i, y_i, z_i), subscripted from 1.  A BASE ring
has n triples and displays its variables in lowercase.  A POLARIZED ring
carries d multilinearization columns for each of n base triples (n*d triples
in all, uppercase display); subscript s belongs to base triple ceil(s/d) and
to column ((s-1) mod d) + 1.

Monomials are compared in pure lexicographic order with

    z_t > y_t > x_t > z_{t-1} > ... > z_1 > y_1 > x_1

where t is the ring's triple count.  All values here are immutable and all
operations are pure functions, so everything is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import (
    PolySyntaxError,
    RingMismatch,
    SubscriptOutOfRange,
    WrongRingKind,
    ZeroPolynomial,
)

_LETTERS = "xyz"
_RANKS = {"x": 0, "y": 1, "z": 2}

Scalar = Union[int, Fraction]


class RingKind(Enum):
    BASE = "base"
    POLARIZED = "polarized"


@dataclass(frozen=True)
class RingDesc:
    """Shape of a ring of variable triples.

    ``triples`` counts the (x, y, z) triples.  ``degree_d`` is the number of
    polarization columns and is set only for POLARIZED rings.
    """

    kind: RingKind
    triples: int
    degree_d: int | None = None

    def __post_init__(self):
        if self.triples < 1:
            raise ValueError("ring needs at least one triple")
        if self.kind is RingKind.POLARIZED:
            if self.degree_d is None or self.degree_d < 1:
                raise ValueError("polarized ring needs a positive column count")
            if self.triples % self.degree_d != 0:
                raise ValueError("polarized ring must have n*d triples")
        elif self.degree_d is not None:
            raise ValueError("base ring carries no column count")

    @property
    def base_triples(self) -> int:
        """Number n of base triples (triples // d for a polarized ring)."""
        if self.kind is RingKind.BASE:
            return self.triples
        return self.triples // self.degree_d

    def triple_of(self, subscript: int) -> int:
        """Base triple that a polarized subscript restitutes to."""
        self._require_polarized()
        return (subscript - 1) // self.degree_d + 1

    def column_of(self, subscript: int) -> int:
        """Polarization column of a polarized subscript."""
        self._require_polarized()
        return (subscript - 1) % self.degree_d + 1

    def _require_polarized(self):
        if self.kind is not RingKind.POLARIZED:
            raise WrongRingKind("operation requires a polarized ring")


def base_ring(n: int) -> RingDesc:
    """Ring with n triples x_i, y_i, z_i."""
    return RingDesc(RingKind.BASE, n)


def polarized_ring(n: int, d: int) -> RingDesc:
    """Polarized ring with d columns over n base triples (n*d triples)."""
    if n < 1 or d < 1:
        raise ValueError("polarized ring needs n >= 1 and d >= 1")
    return RingDesc(RingKind.POLARIZED, n * d, d)


class Variable(NamedTuple):
    letter: str  # "x", "y" or "z"
    subscript: int


class Monomial:
    """A power product, stored as (subscript, rank, exponent) entries with
    rank 0/1/2 for x/y/z, sorted by descending variable.

    Comparison of the entry tuples is exactly the pure lex order, so
    Monomial is totally ordered and usable as a dict key.
    """

    __slots__ = ("_entries", "_degree")

    def __init__(self, entries: Iterable[tuple[int, int, int]] = ()):
        merged: dict[tuple[int, int], int] = {}
        for s, r, e in entries:
            if e == 0:
                continue
            if e < 0:
                raise ValueError("negative exponent")
            if s < 1 or r not in (0, 1, 2):
                raise ValueError(f"bad variable ({s}, {r})")
            key = (s, r)
            merged[key] = merged.get(key, 0) + e
        self._entries = tuple(
            (s, r, e) for (s, r), e in sorted(merged.items(), reverse=True)
        )
        self._degree = sum(e for _, _, e in self._entries)

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @classmethod
    def variable(cls, letter: str, subscript: int) -> "Monomial":
        return cls(((subscript, _RANKS[letter.lower()], 1),))

    @property
    def entries(self) -> tuple[tuple[int, int, int], ...]:
        return self._entries

    @property
    def degree(self) -> int:
        return self._degree

    def is_one(self) -> bool:
        return not self._entries

    def exponents(self) -> dict[Variable, int]:
        """The monomial as a map from Variable to positive exponent."""
        return {Variable(_LETTERS[r], s): e for s, r, e in self._entries}

    def max_subscript(self) -> int:
        return max((s for s, _, _ in self._entries), default=0)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self._entries + other._entries)

    def lowered(self, subscript: int, rank: int) -> "Monomial":
        """Move one occurrence of the given variable down a rank (z->y, y->x)."""
        if rank not in (1, 2):
            raise ValueError("only y and z can be lowered")
        out = []
        seen = False
        for s, r, e in self._entries:
            if s == subscript and r == rank:
                seen = True
                if e > 1:
                    out.append((s, r, e - 1))
                out.append((s, rank - 1, 1))
            else:
                out.append((s, r, e))
        if not seen:
            raise ValueError("variable not present")
        return Monomial(out)

    def format(self, uppercase: bool = False) -> str:
        """Factors in ascending variable order, e.g. ``x1*z2^3``; empty for 1."""
        bits = []
        for s, r, e in reversed(self._entries):
            letter = _LETTERS[r].upper() if uppercase else _LETTERS[r]
            bits.append(f"{letter}{s}" + (f"^{e}" if e > 1 else ""))
        return "*".join(bits)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __lt__(self, other: "Monomial"):
        return self._entries < other._entries

    def __le__(self, other: "Monomial"):
        return self._entries <= other._entries

    def __gt__(self, other: "Monomial"):
        return self._entries > other._entries

    def __ge__(self, other: "Monomial"):
        return self._entries >= other._entries

    def __repr__(self):
        return f"Monomial({self.format() or '1'})"


class Polynomial:
    """Finite map from Monomial to nonzero Fraction over a fixed ring."""

    __slots__ = ("_ring", "_terms")

    def __init__(self, ring: RingDesc, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        tidy: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            c = Fraction(c)
            if not c:
                continue
            acc = tidy.get(m, 0) + c
            if acc:
                tidy[m] = acc
            else:
                tidy.pop(m, None)
        for m in tidy:
            if m.max_subscript() > ring.triples:
                raise SubscriptOutOfRange(
                    f"subscript {m.max_subscript()} exceeds ring's {ring.triples} triples"
                )
        self._ring = ring
        self._terms = tidy

    @classmethod
    def _build(cls, ring: RingDesc, terms: dict[Monomial, Fraction]) -> "Polynomial":
        """Internal fast path: terms already canonical except possible zeros."""
        p = object.__new__(cls)
        p._ring = ring
        p._terms = {m: c for m, c in terms.items() if c}
        return p

    @classmethod
    def zero(cls, ring: RingDesc) -> "Polynomial":
        return cls._build(ring, {})

    @classmethod
    def constant(cls, ring: RingDesc, c: Scalar) -> "Polynomial":
        return cls(ring, {Monomial.one(): Fraction(c)})

    @classmethod
    def variable(cls, ring: RingDesc, letter: str, subscript: int) -> "Polynomial":
        low = letter.lower()
        if low not in _RANKS:
            raise ValueError(f"unknown variable letter {letter!r}")
        if not 1 <= subscript <= ring.triples:
            raise SubscriptOutOfRange(
                f"subscript {subscript} outside [1, {ring.triples}]"
            )
        return cls._build(ring, {Monomial.variable(low, subscript): Fraction(1)})

    @property
    def ring(self) -> RingDesc:
        return self._ring

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """The term map.  Treat as read-only."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def constant_coefficient(self) -> Fraction:
        return self._terms.get(Monomial.one(), Fraction(0))

    def _check_ring(self, other: "Polynomial"):
        if self._ring != other._ring:
            raise RingMismatch(f"{self._ring} vs {other._ring}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            acc = out.get(m, 0) + c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
        return Polynomial._build(self._ring, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._build(self._ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            acc = out.get(m, 0) - c
            if acc:
                out[m] = acc
            else:
                out.pop(m, None)
        return Polynomial._build(self._ring, out)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_ring(other)
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = m1 * m2
                    acc = out.get(m, 0) + c1 * c2
                    if acc:
                        out[m] = acc
                    else:
                        out.pop(m, None)
            return Polynomial._build(self._ring, out)
        c = Fraction(other)
        if not c:
            return Polynomial.zero(self._ring)
        return Polynomial._build(self._ring, {m: v * c for m, v in self._terms.items()})

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __truediv__(self, other: Scalar) -> "Polynomial":
        c = Fraction(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / c)

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self._ring, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def lead_monomial(self) -> tuple[Monomial, Fraction]:
        """Lex-greatest monomial and its coefficient."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no lead monomial")
        m = max(self._terms)
        return m, self._terms[m]

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            buckets.setdefault(m.degree, {})[m] = c
        return {
            d: Polynomial._build(self._ring, terms) for d, terms in buckets.items()
        }

    def is_multilinear(self) -> bool:
        """True iff every monomial uses exactly one variable from each of the
        d polarization columns (and so has total degree d)."""
        if self._ring.kind is not RingKind.POLARIZED:
            raise WrongRingKind("multilinearity is defined on polarized rings")
        d = self._ring.degree_d
        for m in self._terms:
            if m.degree != d:
                return False
            cols = set()
            ok = True
            for s, r, e in m.entries:
                if e != 1:
                    ok = False
                    break
                col = self._ring.column_of(s)
                if col in cols:
                    ok = False
                    break
                cols.add(col)
            if not ok or len(cols) != d:
                return False
        return True

    def evaluate(self, point: Mapping[Variable, Scalar]) -> Fraction:
        """Exact value at a point given per-variable."""
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for s, r, e in m.entries:
                v *= Fraction(point[Variable(_LETTERS[r], s)]) ** e
            total += v
        return total

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self._ring == other._ring
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self._ring, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        upper = self._ring.kind is RingKind.POLARIZED
        out = []
        for m in sorted(self._terms, reverse=True):
            c = self._terms[m]
            body = m.format(upper)
            mag = abs(c)
            if body:
                piece = body if mag == 1 else f"{mag}*{body}"
            else:
                piece = str(mag)
            if not out:
                out.append(("-" if c < 0 else "") + piece)
            else:
                out.append(("- " if c < 0 else "+ ") + piece)
        return " ".join(out)

    def __repr__(self):
        return f"Polynomial({self})"


def monomials_of_degree(ring: RingDesc, d: int) -> Iterator[Monomial]:
    """All degree-d monomials of the ring, one at a time."""
    nvars = 3 * ring.triples
    # variable index v in [0, nvars) maps to subscript v//3 + 1, rank v%3
    def rec(v: int, remaining: int, acc: list[tuple[int, int, int]]):
        if remaining == 0:
            yield Monomial(acc)
            return
        if v == nvars:
            return
        # exponent for variable v ranges over 0..remaining
        for e in range(remaining + 1):
            if e:
                acc.append((v // 3 + 1, v % 3, e))
            yield from rec(v + 1, remaining - e, acc)
            if e:
                acc.pop()

    yield from rec(0, d, [])


# ---------------------------------------------------------------------------
# text form


class _Parser:
    """Recursive-descent parser for the ASCII polynomial grammar:

        poly   := ['-'] term (('+'|'-') term)*
        term   := rat ['*' factors] | factors
        factors:= factor ('*' factor)*
        factor := var ['^' nat]
        var    := ('x'|'y'|'z'|'X'|'Y'|'Z') nat
        rat    := nat ['/' nat]
    """

    def __init__(self, text: str, ring: RingDesc):
        self.text = text
        self.ring = ring
        self.i = 0

    def fail(self, message: str, pos: int | None = None):
        raise PolySyntaxError(message, self.i if pos is None else pos)

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else ""

    def eat(self, ch: str):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.i += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            self.fail("expected a number")
        return int(self.text[start:self.i])

    def rat(self) -> Fraction:
        num = self.nat()
        if self.peek() == "/":
            self.i += 1
            pos = self.i
            den = self.nat()
            if den == 0:
                self.fail("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def var(self) -> tuple[int, int]:
        ch = self.peek()
        pos = self.i
        if ch.lower() not in _RANKS:
            self.fail("expected a variable")
        if ch.isupper() and self.ring.kind is not RingKind.POLARIZED:
            self.fail("uppercase variables belong to polarized rings", pos)
        self.i += 1
        spos = self.i
        sub = self.nat()
        if not 1 <= sub <= self.ring.triples:
            raise SubscriptOutOfRange(
                f"subscript {sub} outside [1, {self.ring.triples}] (at position {spos})"
            )
        return sub, _RANKS[ch.lower()]

    def factor(self) -> tuple[int, int, int]:
        sub, rank = self.var()
        exp = 1
        if self.peek() == "^":
            self.i += 1
            exp = self.nat()
        return (sub, rank, exp)

    def factors(self) -> Monomial:
        entries = [self.factor()]
        while self.peek() == "*":
            self.i += 1
            entries.append(self.factor())
        return Monomial(entries)

    def term(self) -> tuple[Monomial, Fraction]:
        if self.peek().isdigit():
            coeff = self.rat()
            if self.peek() == "*":
                self.i += 1
                return self.factors(), coeff
            return Monomial.one(), coeff
        return self.factors(), Fraction(1)

    def parse(self) -> Polynomial:
        terms: list[tuple[Monomial, Fraction]] = []
        sign = Fraction(1)
        if self.peek() == "-":
            self.i += 1
            sign = Fraction(-1)
        elif self.peek() == "+":
            self.fail("a polynomial cannot start with '+'")
        m, c = self.term()
        terms.append((m, sign * c))
        while True:
            ch = self.peek()
            if ch == "+" or ch == "-":
                self.i += 1
                m, c = self.term()
                terms.append((m, c if ch == "+" else -c))
            elif ch == "":
                break
            else:
                self.fail("expected '+', '-' or end of input")
        return Polynomial(self.ring, terms)


def parse_poly(text: str, ring: RingDesc) -> Polynomial:
    """Parse the ASCII text form; inverse of str() on canonical forms."""
    return _Parser(text, ring).parse()
