"""Rewriting constants as polynomials in the generating set.

The algebra of constants of the triple-lowering derivation on n triples is
generated by

    f(i)      = x_i
    f(i,j)    = x_i*y_j - x_j*y_i          (i < j)
    g(i,j)    = x_i*z_j - y_i*y_j + z_i*x_j   (i <= j)
    g(i,j,k)  = det of the rows (x_a, y_a, z_a)  (i < j < k)

and the pipeline here makes that effective: polarize each homogeneous
component, peel off the lead monomial of the remainder with the matching
basis element until nothing is left, restitute every family factor to a
polynomial in the generator names, and divide by d!.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import factorial
from typing import Iterable, Mapping, Union

from .derivation import apply_delta
from .errors import (
    BadIndices,
    InternalInvariantViolation,
    NotAConstant,
    NotAPathMonomial,
    NotMultilinear,
    WrongRingKind,
)
from .families import BasisElement, FamilyElement, phi, split_indices
from .poly import Monomial, Polynomial, RingKind, base_ring
from .polar import polarize

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class GenName:
    """Name of one generator: kind 'f' or 'g' plus its triple indices."""

    kind: str
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = self.indices
        if self.kind == "f":
            ok = len(idx) == 1 or (len(idx) == 2 and idx[0] < idx[1])
        elif self.kind == "g":
            ok = (len(idx) == 2 and idx[0] <= idx[1]) or (
                len(idx) == 3 and idx[0] < idx[1] < idx[2]
            )
        else:
            ok = False
        if not ok or (idx and idx[0] < 1):
            raise BadIndices(f"invalid generator name {self.kind}{idx}")

    def degree(self) -> int:
        return len(self.indices)

    def __str__(self):
        return f"{self.kind}({','.join(map(str, self.indices))})"


@lru_cache(maxsize=None)
def generator_poly(name: GenName, n: int) -> Polynomial:
    """The generator as a polynomial over the n-triple base ring."""
    if name.indices[-1] > n:
        raise BadIndices(f"{name} does not fit in {n} triples")
    ring = base_ring(n)
    v = lambda letter, s: Polynomial.variable(ring, letter, s)
    idx = name.indices
    if name.kind == "f":
        if len(idx) == 1:
            return v("x", idx[0])
        i, j = idx
        return v("x", i) * v("y", j) - v("x", j) * v("y", i)
    if len(idx) == 2:
        i, j = idx
        return v("x", i) * v("z", j) - v("y", i) * v("y", j) + v("z", i) * v("x", j)
    i, j, k = idx
    det = Polynomial.zero(ring)
    for (a, b, c), sign in (
        ((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
        ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1),
    ):
        det = det + sign * (v("xyz"[a], i) * v("xyz"[b], j) * v("xyz"[c], k))
    return det


def generators(n: int) -> list[tuple[GenName, Polynomial]]:
    """The full generating set over n triples, in a fixed order: linear f's,
    quadratic f's, quadratic g's, cubic g's."""
    if n < 1:
        raise ValueError("n must be positive")
    names: list[GenName] = [GenName("f", (i,)) for i in range(1, n + 1)]
    names += [GenName("f", p) for p in combinations(range(1, n + 1), 2)]
    names += [GenName("g", p) for p in combinations_with_replacement(range(1, n + 1), 2)]
    names += [GenName("g", p) for p in combinations(range(1, n + 1), 3)]
    return [(nm, generator_poly(nm, n)) for nm in names]


class GenExpr:
    """Formal polynomial in generator names with rational coefficients.

    Terms are keyed by the sorted tuple of factor names (with repetition);
    the empty tuple holds the constant.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[GenName, ...], Scalar] | None = None):
        tidy: dict[tuple[GenName, ...], Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if not c:
                    continue
                key = tuple(sorted(key, key=lambda g: (g.kind, g.indices)))
                acc = tidy.get(key, 0) + c
                if acc:
                    tidy[key] = acc
                else:
                    tidy.pop(key, None)
        self._terms = tidy

    @classmethod
    def zero(cls) -> "GenExpr":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "GenExpr":
        return cls({(): c})

    @classmethod
    def from_name(cls, name: GenName, coeff: Scalar = 1) -> "GenExpr":
        return cls({(name,): coeff})

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def terms(self) -> list[tuple[Fraction, tuple[GenName, ...]]]:
        """Terms as (coefficient, factors), deterministically ordered."""
        keys = sorted(self._terms, key=lambda k: (len(k), [(g.kind, g.indices) for g in k]))
        return [(self._terms[k], k) for k in keys]

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "GenExpr") -> "GenExpr":
        out = dict(self._terms)
        for k, c in other._terms.items():
            acc = out.get(k, 0) + c
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
        return GenExpr(out)

    def __sub__(self, other: "GenExpr") -> "GenExpr":
        return self + (-1) * other

    def __mul__(self, other) -> "GenExpr":
        if isinstance(other, GenExpr):
            out: dict[tuple[GenName, ...], Fraction] = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    key = tuple(sorted(k1 + k2, key=lambda g: (g.kind, g.indices)))
                    acc = out.get(key, 0) + c1 * c2
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)
            return GenExpr(out)
        c = Fraction(other)
        return GenExpr({k: v * c for k, v in self._terms.items()})

    def __rmul__(self, other) -> "GenExpr":
        return self.__mul__(other)

    def __truediv__(self, other: Scalar) -> "GenExpr":
        return self * (1 / Fraction(other))

    def __eq__(self, other):
        return isinstance(other, GenExpr) and self._terms == other._terms

    def __str__(self):
        if not self._terms:
            return "0"
        bits = []
        for c, key in self.terms():
            body = _format_factors(key)
            piece = f"{abs(c)}*{body}" if body else str(abs(c))
            if not bits:
                bits.append(("-" if c < 0 else "") + piece)
            else:
                bits.append(("- " if c < 0 else "+ ") + piece)
        return " ".join(bits)

    def __repr__(self):
        return f"GenExpr({self})"

    def to_obj(self) -> list[dict]:
        """JSON-ready form: one object per term."""
        out = []
        for c, key in self.terms():
            factors = []
            for name, power in _grouped(key):
                factors.append({"gen": name.kind, "idx": list(name.indices), "pow": power})
            out.append({"coeff": str(c), "factors": factors})
        return out


def _grouped(key: tuple[GenName, ...]) -> list[tuple[GenName, int]]:
    out: list[tuple[GenName, int]] = []
    for name in key:
        if out and out[-1][0] == name:
            out[-1] = (name, out[-1][1] + 1)
        else:
            out.append((name, 1))
    return out


def _format_factors(key: tuple[GenName, ...]) -> str:
    return "*".join(
        f"{name}" + (f"^{p}" if p > 1 else "") for name, p in _grouped(key)
    )


def expand(expr: GenExpr, n: int) -> Polynomial:
    """Evaluate a generator expression to an honest polynomial."""
    ring = base_ring(n)
    total = Polynomial.zero(ring)
    for c, key in expr.terms():
        prod = Polynomial.constant(ring, c)
        for name in key:
            prod = prod * generator_poly(name, n)
        total = total + prod
    return total


# ---------------------------------------------------------------------------
# lead-term reduction


def _neg_key(m: Monomial) -> tuple[int, ...]:
    """Min-heap key that pops the lex-greatest monomial first."""
    out = []
    for s, r, e in m.entries:
        out.extend((-s, -r, -e))
    out.append(0)
    return tuple(out)


def reduce_multilinear(h: Polynomial) -> list[tuple[Fraction, BasisElement]]:
    """Write a multilinear constant as a combination of basis elements by
    peeling lead monomials.

    Each step takes the lex-greatest surviving monomial, builds the basis
    element led by it, and subtracts; the lead strictly decreases, so the
    loop terminates with an exact representation.
    """
    if not h.is_multilinear():
        raise NotMultilinear("reduction needs a multilinear input")
    image = apply_delta(h)
    if not image.is_zero():
        m, c = image.lead_monomial()
        raise NotAConstant(
            "input is not a constant",
            witness=Polynomial(h.ring, {m: c}),
        )
    ring = h.ring
    work = dict(h.terms)
    heap = [(_neg_key(m), m) for m in work]
    heapq.heapify(heap)
    out: list[tuple[Fraction, BasisElement]] = []
    while heap:
        _, m = heapq.heappop(heap)
        c = work.get(m)
        if c is None:
            continue
        try:
            element = phi(m)
        except NotAPathMonomial as exc:
            raise InternalInvariantViolation(
                f"lead monomial {m.format(True)} of a multilinear constant "
                f"is not a path monomial"
            ) from exc
        realized = element.realize(ring)
        lead, lc = realized.lead_monomial()
        if lead != m or lc != 1:
            raise InternalInvariantViolation(
                f"basis element for {m.format(True)} is not monic at it"
            )
        for mono, coeff in realized.terms.items():
            cur = work.get(mono)
            if cur is None:
                work[mono] = -c * coeff
                heapq.heappush(heap, (_neg_key(mono), mono))
            else:
                nv = cur - c * coeff
                if nv:
                    work[mono] = nv
                else:
                    del work[mono]
        out.append((c, element))
    if work:
        raise InternalInvariantViolation("reduction finished with a nonzero remainder")
    return out


# ---------------------------------------------------------------------------
# restitution of factors and the full pipeline


@lru_cache(maxsize=None)
def restitute_factor(element: FamilyElement, n: int, d: int) -> GenExpr:
    """The raw restitution of a family member, written in generator names.

    Base cases map to single names (or to zero when repeated triples kill
    them); larger sets restitute through the inductive split, using that the
    raw substitution is multiplicative.
    """
    idx = element.indices
    if idx[-1] > n * d:
        raise BadIndices(f"{element} does not fit in {n}*{d} subscripts")
    triples = tuple((i - 1) // d + 1 for i in idx)
    if element.kind == "F":
        if len(idx) == 1:
            return GenExpr.from_name(GenName("f", triples))
        if len(idx) == 2:
            a, b = triples
            if a == b:
                return GenExpr.zero()
            return GenExpr.from_name(GenName("f", (a, b)))
        s1, s2, s3, s4 = split_indices(idx)
        return restitute_factor(FamilyElement("F", s1), n, d) * restitute_factor(
            FamilyElement("G", s2), n, d
        ) - restitute_factor(FamilyElement("F", s3), n, d) * restitute_factor(
            FamilyElement("G", s4), n, d
        )
    if len(idx) == 2:
        return GenExpr.from_name(GenName("g", triples))
    if len(idx) == 3:
        a, b, c = triples
        if a == b or b == c:
            return GenExpr.zero()
        return GenExpr.from_name(GenName("g", (a, b, c)))
    s1, s2, s3, s4 = split_indices(idx)
    return restitute_factor(FamilyElement("G", s1), n, d) * restitute_factor(
        FamilyElement("G", s2), n, d
    ) - restitute_factor(FamilyElement("G", s3), n, d) * restitute_factor(
        FamilyElement("G", s4), n, d
    )


def decompose(h: Polynomial) -> GenExpr:
    """Rewrite a constant as a polynomial in the generator names.

    Works per homogeneous component: polarize, reduce against the basis,
    restitute every factor, and scale by 1/d!.  The result re-expands to h
    exactly.
    """
    if h.ring.kind is not RingKind.BASE:
        raise WrongRingKind("decompose expects a base-ring polynomial")
    image = apply_delta(h)
    if not image.is_zero():
        m, c = image.lead_monomial()
        raise NotAConstant(
            "input is not a constant",
            witness=Polynomial(h.ring, {m: c}),
        )
    n = h.ring.triples
    result = GenExpr.constant(h.constant_coefficient())
    for d, component in sorted(h.homogeneous_components().items()):
        if d == 0:
            continue
        polarized = polarize(component, d)
        part = GenExpr.zero()
        for coeff, element in reduce_multilinear(polarized):
            term = GenExpr.constant(coeff)
            for factor in element.factors:
                term = term * restitute_factor(factor, n, d)
            part = part + term
        result = result + part / factorial(d)
    return result
