import random
from fractions import Fraction

import pytest

from weitz3 import (
    Monomial,
    NotHomogeneous,
    NotMultilinear,
    Polynomial,
    WrongRingKind,
    apply_delta,
    base_ring,
    build_F,
    build_G,
    evaluate_eps,
    parse_poly,
    polarize,
    polarized_ring,
    restitute,
)

R1 = base_ring(1)
R2 = base_ring(2)
S12 = polarized_ring(1, 2)
S22 = polarized_ring(2, 2)


def test_polarize_degree_one_is_renaming():
    assert polarize(parse_poly("x1", R1), 1) == parse_poly("X1", polarized_ring(1, 1))


def test_polarize_square():
    assert polarize(parse_poly("x1^2", R1), 2) == parse_poly("2*X1*X2", S12)


def test_polarize_quadratic_invariant():
    got = polarize(parse_poly("2*x1*z1 - y1^2", R1), 2)
    assert got == parse_poly("2*X1*Z2 - 2*Y1*Y2 + 2*Z1*X2", S12)


def test_polarize_two_triples_uses_block_subscripts():
    got = polarize(parse_poly("x1*y2 - x2*y1", R2), 2)
    assert got == parse_poly("X1*Y4 + X2*Y3 - X3*Y2 - X4*Y1", S22)


def test_polarize_rejects_inhomogeneous_and_wrong_ring():
    with pytest.raises(NotHomogeneous):
        polarize(parse_poly("x1 + x1*z1", R1), 2)
    with pytest.raises(WrongRingKind):
        polarize(parse_poly("X1", S12), 1)


def test_eps_examples():
    assert evaluate_eps(build_G((1, 2), S12)) == parse_poly("2*x1*z1 - y1^2", R1)
    assert evaluate_eps(build_F((1, 2), S12)).is_zero()
    assert evaluate_eps(build_F((1, 4), S22)) == parse_poly("x1*y2 - x2*y1", R2)


def test_eps_is_multiplicative():
    rng = random.Random(41)
    for _ in range(40):
        p = _random_polarized(rng, S22)
        q = _random_polarized(rng, S22)
        assert evaluate_eps(p * q) == evaluate_eps(p) * evaluate_eps(q)


def test_restitute_examples():
    assert restitute(parse_poly("2*X1*X2", S12)) == parse_poly("x1^2", R1)
    assert restitute(parse_poly("X1", polarized_ring(1, 1))) == parse_poly("x1", R1)
    g11 = parse_poly("2*x1*z1 - y1^2", R1)
    assert restitute(polarize(g11, 2)) == g11


def test_restitute_requires_multilinear():
    with pytest.raises(NotMultilinear):
        restitute(parse_poly("X1*X2 + X1", S12))
    with pytest.raises(NotMultilinear):
        restitute(parse_poly("X1^2", S12))


def _random_homogeneous(rng, ring, d, terms=4):
    nvars = 3 * ring.triples
    acc = {}
    for _ in range(terms):
        m = Monomial(
            [(v // 3 + 1, v % 3, 1) for v in (rng.randrange(nvars) for _ in range(d))]
        )
        acc[m] = acc.get(m, 0) + rng.randint(-4, 4)
    return Polynomial(ring, acc)


def _random_polarized(rng, ring, terms=3):
    acc = {}
    d = ring.degree_d
    n = ring.base_triples
    for _ in range(terms):
        entries = []
        for col in range(1, d + 1):
            triple = rng.randint(1, n)
            entries.append(((triple - 1) * d + col, rng.randrange(3), 1))
        acc[Monomial(entries)] = Fraction(rng.randint(-3, 3))
    return Polynomial(ring, acc)


def test_round_trip_random():
    rng = random.Random(43)
    for _ in range(80):
        n = rng.randint(1, 3)
        d = rng.randint(1, 5)
        f = _random_homogeneous(rng, base_ring(n), d)
        big = polarize(f, d)
        assert big.is_multilinear()
        assert restitute(big) == f


def test_polarize_is_linear():
    rng = random.Random(47)
    for _ in range(30):
        f = _random_homogeneous(rng, R2, 3)
        g = _random_homogeneous(rng, R2, 3)
        c = Fraction(rng.randint(-3, 3))
        assert polarize(f + g, 3) == polarize(f, 3) + polarize(g, 3)
        assert polarize(c * f, 3) == c * polarize(f, 3)


def test_polarize_commutes_with_derivation():
    rng = random.Random(53)
    for _ in range(40):
        n = rng.randint(1, 3)
        d = rng.randint(1, 4)
        f = _random_homogeneous(rng, base_ring(n), d)
        big = polarize(f, d)
        assert polarize(apply_delta(f), d) == apply_delta(big)
        assert evaluate_eps(apply_delta(big)) == apply_delta(evaluate_eps(big))
