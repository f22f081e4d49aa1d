import random
from fractions import Fraction

from weitz3 import (
    Monomial,
    Polynomial,
    apply_delta,
    apply_sigma,
    base_ring,
    is_constant,
    nilpotency_index,
    parse_poly,
    polarized_ring,
)

R1 = base_ring(1)
R2 = base_ring(2)
R3 = base_ring(3)


def test_action_on_variables():
    assert apply_delta(parse_poly("z1", R1)) == parse_poly("y1", R1)
    assert apply_delta(parse_poly("y1", R1)) == parse_poly("x1", R1)
    assert apply_delta(parse_poly("x1", R1)).is_zero()


def test_action_on_polarized_variables():
    s = polarized_ring(1, 3)
    assert apply_delta(parse_poly("Z2", s)) == parse_poly("Y2", s)


def test_leibniz_example():
    assert apply_delta(parse_poly("y1^2", R1)) == parse_poly("2*x1*y1", R1)


def test_sigma_examples():
    assert apply_sigma(parse_poly("x1", R1)) == parse_poly("x1", R1)
    assert apply_sigma(parse_poly("y1", R1)) == parse_poly("y1 + x1", R1)
    assert apply_sigma(parse_poly("z1", R1)) == parse_poly("z1 + y1 + 1/2*x1", R1)


def test_nilpotency_index():
    assert nilpotency_index(parse_poly("z1", R1)) == 3
    assert nilpotency_index(parse_poly("x1*y2 - x2*y1", R2)) == 1
    assert nilpotency_index(Polynomial.zero(R1)) == 0


def test_known_constants():
    assert is_constant(parse_poly("x1*z2 - y1*y2 + z1*x2", R2))
    assert not is_constant(parse_poly("y1", R1))
    det = parse_poly(
        "x1*y2*z3 - x1*z2*y3 - y1*x2*z3 + y1*z2*x3 + z1*x2*y3 - z1*y2*x3", R3
    )
    assert is_constant(det)


def _random_poly(rng, ring, max_deg=3, terms=4):
    nvars = 3 * ring.triples
    acc = {}
    for _ in range(terms):
        entries = [
            (v // 3 + 1, v % 3, 1)
            for v in (rng.randrange(nvars) for _ in range(rng.randint(0, max_deg)))
        ]
        m = Monomial(entries)
        acc[m] = acc.get(m, 0) + rng.randint(-3, 3)
    return Polynomial(ring, acc)


def test_leibniz_rule_random():
    rng = random.Random(23)
    for _ in range(50):
        p = _random_poly(rng, R2)
        q = _random_poly(rng, R2)
        assert apply_delta(p * q) == apply_delta(p) * q + p * apply_delta(q)


def test_sigma_is_an_automorphism():
    rng = random.Random(29)
    for _ in range(50):
        p = _random_poly(rng, R2)
        q = _random_poly(rng, R2)
        assert apply_sigma(p * q) == apply_sigma(p) * apply_sigma(q)


def test_log_of_sigma_recovers_delta():
    # sum_{k>=1} (-1)^(k+1) (sigma - 1)^k / k equals the derivation; the sum
    # is finite because sigma - 1 is locally nilpotent
    rng = random.Random(31)
    for _ in range(25):
        p = _random_poly(rng, R2)
        total = Polynomial.zero(R2)
        q = p
        k = 1
        while True:
            q = apply_sigma(q) - q  # (sigma - 1)^k applied to p
            if q.is_zero():
                break
            total = total + q * Fraction((-1) ** (k + 1), k)
            k += 1
        assert total == apply_delta(p)


def test_iterate_bounds():
    rng = random.Random(37)
    for _ in range(30):
        p = _random_poly(rng, R2, max_deg=1)
        q = p
        for _ in range(3):
            q = apply_delta(q)
        assert q.is_zero()  # third iterate kills every linear polynomial
    for _ in range(20):
        e = rng.randint(0, 3)
        p = _random_poly(rng, R2, max_deg=e)
        q = p
        for _ in range(2 * e + 1):
            q = apply_delta(q)
        assert q.is_zero()  # (2e+1)-st iterate kills degree <= e
