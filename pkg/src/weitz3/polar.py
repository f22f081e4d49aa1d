"""Full polarization and restitution between a base ring and its polarized
companion.

Polarization spreads each degree-d monomial over the d columns in every
possible way: a variable occurring with exponent a receives a distinct
columns, and the coefficient picks up a factor a! per variable.  The result
is multilinear.

Restitution identifies the columns again.  The raw substitution eps sends
the polarized variable with subscript s back to its base triple ceil(s/d)
keeping the letter; it is an algebra homomorphism.  The normalized map
divides eps by d! on degree-d multilinear input, which makes it a one-sided
inverse of polarization.  Both are exposed because the multiplicative eps is
what factors of products restitute through, while the normalized map is the
one that closes the round trip.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial

from .errors import NotHomogeneous, NotMultilinear, WrongRingKind
from .poly import Monomial, Polynomial, RingKind, base_ring, polarized_ring


def polarize(f: Polynomial, d: int) -> Polynomial:
    """Full polarization of a homogeneous degree-d polynomial."""
    if f.ring.kind is not RingKind.BASE:
        raise WrongRingKind("polarize expects a base-ring polynomial")
    if d < 1:
        raise ValueError("d must be positive")
    for m in f.terms:
        if m.degree != d:
            raise NotHomogeneous(
                f"monomial {m.format()} has degree {m.degree}, expected {d}"
            )
    n = f.ring.triples
    ring_s = polarized_ring(n, d)
    out: dict[Monomial, Fraction] = {}
    for m, c in f.terms.items():
        occ = m.entries
        scale = c
        for _, _, e in occ:
            scale *= factorial(e)
        for assignment in _column_splits([e for _, _, e in occ], tuple(range(1, d + 1))):
            entries = []
            for (s, r, _), cols in zip(occ, assignment):
                entries.extend(((s - 1) * d + j, r, 1) for j in cols)
            mono = Monomial(entries)
            v = out.get(mono, 0) + scale
            if v:
                out[mono] = v
            else:
                del out[mono]
    return Polynomial._build(ring_s, out)


def _column_splits(sizes: list[int], columns: tuple[int, ...]):
    """All ways to split the column set into ordered blocks of the given
    sizes."""
    if not sizes:
        yield ()
        return
    head, tail = sizes[0], sizes[1:]
    for combo in combinations(columns, head):
        chosen = set(combo)
        rest = tuple(j for j in columns if j not in chosen)
        for sub in _column_splits(tail, rest):
            yield (combo,) + sub


def evaluate_eps(h: Polynomial) -> Polynomial:
    """The raw restitution substitution: subscript s goes to triple
    ceil(s/d), letters unchanged.  An algebra homomorphism; no 1/d! factor."""
    ring = h.ring
    if ring.kind is not RingKind.POLARIZED:
        raise WrongRingKind("eps expects a polarized-ring polynomial")
    d = ring.degree_d
    out: dict[Monomial, Fraction] = {}
    for m, c in h.terms.items():
        mono = Monomial([((s - 1) // d + 1, r, e) for s, r, e in m.entries])
        v = out.get(mono, 0) + c
        if v:
            out[mono] = v
        else:
            del out[mono]
    return Polynomial._build(base_ring(ring.base_triples), out)


def restitute(h: Polynomial) -> Polynomial:
    """Normalized restitution of a multilinear polynomial: eps / d!.
    Left-inverse to polarization on homogeneous degree-d input."""
    if not h.is_multilinear():
        raise NotMultilinear("restitution needs a multilinear input")
    return evaluate_eps(h) / factorial(h.ring.degree_d)
