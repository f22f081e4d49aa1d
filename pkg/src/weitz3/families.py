"""The two inductive families of multilinear constants and the lead-monomial
section phi.

F and G are indexed by strictly increasing subscript sets.  The base cases
are

    F on {i}        = X_i
    F on {i, j}     = X_i*Y_j - X_j*Y_i
    G on {i, j}     = X_i*Z_j - Y_i*Y_j + Z_i*X_j
    G on {i, j, k}  = det of the 3x3 matrix with rows (X_a, Y_a, Z_a)

and larger sets split off the two smallest indices against the rest:

    F on {i1..it} = F on {i2, i4..it} * G on {i1, i3}
                  - F on {i1, i4..it} * G on {i2, i3}

with the same shape for G.  Every member is multilinear, killed by the
derivation, and monic with lead term X_{i1}*Y_{i2}*...*Y_{it} (F) or
X_{i1}*Y_{i2}*...*Y_{i(t-1)}*Z_{it} (G).

phi maps a multilinear path monomial to the product of family members whose
lead monomial reproduces it: Z-subscripts are matched greedily to the nearest
unconsumed X-subscript below them (a G factor each), then terminal Y-runs to
their nearest unconsumed X (an F factor each), and leftover X-subscripts
become singleton F factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import BadIndices, NotAPathMonomial
from .paths import enumerate_paths, is_path_word, word_to_monomial
from .poly import Monomial, Polynomial, RingDesc, polarized_ring


@dataclass(frozen=True)
class FamilyElement:
    """Name of one family member: kind 'F' or 'G' plus its subscript set."""

    kind: str
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("F", "G"):
            raise BadIndices(f"unknown family kind {self.kind!r}")
        idx = self.indices
        minimum = 1 if self.kind == "F" else 2
        if len(idx) < minimum:
            raise BadIndices(f"{self.kind} needs at least {minimum} indices")
        if any(i < 1 for i in idx) or any(a >= b for a, b in zip(idx, idx[1:])):
            raise BadIndices("indices must be strictly increasing and positive")

    def degree(self) -> int:
        return len(self.indices)

    def realize(self, ring: RingDesc) -> Polynomial:
        return _family_poly(self.kind, self.indices, ring)

    def __str__(self):
        return f"{self.kind}{{{','.join(map(str, self.indices))}}}"


def split_indices(indices: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """The four index sets of the inductive step: ({i2, i4..it}, {i1, i3},
    {i1, i4..it}, {i2, i3})."""
    i1, i2, i3 = indices[0], indices[1], indices[2]
    rest = indices[3:]
    return ((i2,) + rest, (i1, i3), (i1,) + rest, (i2, i3))


@lru_cache(maxsize=None)
def _family_poly(kind: str, indices: tuple[int, ...], ring: RingDesc) -> Polynomial:
    t = len(indices)
    if kind == "F":
        if t == 1:
            return Polynomial.variable(ring, "x", indices[0])
        if t == 2:
            i, j = indices
            return _matrix_minor(ring, i, j, "x", "y")
        a, b, c, d = split_indices(indices)
        return (
            _family_poly("F", a, ring) * _family_poly("G", b, ring)
            - _family_poly("F", c, ring) * _family_poly("G", d, ring)
        )
    if t == 2:
        i, j = indices
        v = lambda l, s: Polynomial.variable(ring, l, s)
        return v("x", i) * v("z", j) - v("y", i) * v("y", j) + v("z", i) * v("x", j)
    if t == 3:
        return _det3(ring, indices)
    a, b, c, d = split_indices(indices)
    return (
        _family_poly("G", a, ring) * _family_poly("G", b, ring)
        - _family_poly("G", c, ring) * _family_poly("G", d, ring)
    )


def _matrix_minor(ring: RingDesc, i: int, j: int, top: str, bottom: str) -> Polynomial:
    v = lambda l, s: Polynomial.variable(ring, l, s)
    return v(top, i) * v(bottom, j) - v(top, j) * v(bottom, i)


def _det3(ring: RingDesc, indices: tuple[int, int, int]) -> Polynomial:
    terms = {}
    letters = "xyz"
    for perm in permutations(range(3)):
        sign = 1 if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
        mono = Monomial(
            [(indices[row], perm[row], 1) for row in range(3)]
        )
        terms[mono] = terms.get(mono, 0) + sign
    return Polynomial(ring, {m: Fraction(c) for m, c in terms.items()})


def build_F(indices, ring: RingDesc) -> Polynomial:
    """Realize the F family member on the given subscript set."""
    return FamilyElement("F", tuple(indices)).realize(ring)


def build_G(indices, ring: RingDesc) -> Polynomial:
    """Realize the G family member on the given subscript set."""
    return FamilyElement("G", tuple(indices)).realize(ring)


@dataclass(frozen=True)
class BasisElement:
    """A product of family members with pairwise disjoint subscript sets."""

    factors: tuple[FamilyElement, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.factors, key=lambda f: (f.indices, f.kind)))
        object.__setattr__(self, "factors", ordered)
        seen: set[int] = set()
        for f in ordered:
            if seen.intersection(f.indices):
                raise BadIndices("factors must have disjoint subscript sets")
            seen.update(f.indices)

    def degree(self) -> int:
        return sum(f.degree() for f in self.factors)

    def realize(self, ring: RingDesc) -> Polynomial:
        out = Polynomial.constant(ring, 1)
        for f in self.factors:
            out = out * f.realize(ring)
        return out

    def __str__(self):
        return " * ".join(str(f) for f in self.factors) if self.factors else "1"


def phi(alpha: Monomial) -> BasisElement:
    """Basis element whose realized lead monomial is alpha.

    alpha must be multilinear and its step word (letters read in subscript
    order) must be a valid path word; the subscripts themselves may be any
    strictly increasing block, not just 1..d.
    """
    letters: list[int] = []
    subs: list[int] = []
    for s, r, e in sorted(alpha.entries):
        if e != 1:
            raise NotAPathMonomial(f"{alpha!r} is not multilinear")
        subs.append(s)
        letters.append(r)
    word = "".join("XYZ"[r] for r in letters)
    if not is_path_word(word):
        raise NotAPathMonomial(f"step word {word} is not a path word")
    d = len(word)
    consumed = [False] * d
    factors: list[FamilyElement] = []

    def nearest_free_x(limit: int) -> int:
        for p in range(limit - 1, -1, -1):
            if letters[p] == 0 and not consumed[p]:
                return p
        raise NotAPathMonomial(f"no unconsumed X below position {limit + 1}")

    def take_block(lo: int, hi: int) -> tuple[int, ...]:
        block = [p for p in range(lo, hi + 1) if not consumed[p]]
        for p in block:
            consumed[p] = True
        return tuple(subs[p] for p in block)

    # Z targets, ascending: each consumes an interval ending at the Z.
    for k in (p for p in range(d) if letters[p] == 2):
        factors.append(FamilyElement("G", take_block(nearest_free_x(k), k)))

    # terminal Y-runs of the residual, ascending: a run ends where the next
    # surviving position is not a Y (or does not exist).
    residual = [p for p in range(d) if not consumed[p]]
    terminals = []
    for q, p in enumerate(residual):
        if letters[p] != 1:
            continue
        nxt = residual[q + 1] if q + 1 < len(residual) else None
        if nxt is None or letters[nxt] != 1:
            terminals.append(p)
    for j in terminals:
        factors.append(FamilyElement("F", take_block(nearest_free_x(j), j)))

    # leftovers are single X's.
    for p in range(d):
        if not consumed[p]:
            if letters[p] != 0:
                raise NotAPathMonomial(
                    f"unmatched non-X letter at position {p + 1}"
                )
            factors.append(FamilyElement("F", (subs[p],)))

    return BasisElement(tuple(factors))


def theta_basis(d: int) -> list[tuple[str, BasisElement]]:
    """For each length-d path word, the basis element whose lead monomial is
    the word's monomial on subscripts 1..d.  The realized polynomials form a
    basis of the degree-d multilinear constants."""
    if d < 1:
        raise ValueError("d must be positive")
    subs = tuple(range(1, d + 1))
    return [(w, phi(word_to_monomial(w, subs))) for w in enumerate_paths(d)]


def theta_ring(d: int) -> RingDesc:
    """The one-triple polarized ring the theta basis naturally lives in."""
    return polarized_ring(1, d)
