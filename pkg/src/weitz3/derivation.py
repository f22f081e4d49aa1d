"""The triangular derivation sending z_i -> y_i -> x_i -> 0 on each triple,
and its exponential automorphism.

The derivation acts the same way on base and polarized rings; it preserves
total degree and is locally nilpotent, so the exponential is a finite sum.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .poly import Monomial, Polynomial


def apply_delta(p: Polynomial) -> Polynomial:
    """Image of p under the derivation, by linearity and the Leibniz rule."""
    acc: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        for s, r, e in m.entries:
            if r == 0:
                continue
            m2 = m.lowered(s, r)
            v = acc.get(m2, 0) + c * e
            if v:
                acc[m2] = v
            else:
                acc.pop(m2, None)
    return Polynomial._build(p.ring, acc)


def apply_sigma(p: Polynomial) -> Polynomial:
    """The exponential of the derivation: sum of its k-th iterates over k!."""
    total = p
    q = p
    k = 0
    while True:
        q = apply_delta(q)
        if q.is_zero():
            return total
        k += 1
        total = total + q / factorial(k)


def nilpotency_index(p: Polynomial) -> int:
    """Least k whose k-th iterate of the derivation kills p (0 for p = 0)."""
    k = 0
    while not p.is_zero():
        p = apply_delta(p)
        k += 1
    return k


def is_constant(p: Polynomial) -> bool:
    """True iff the derivation annihilates p."""
    return apply_delta(p).is_zero()
