import random
from fractions import Fraction

import pytest

from weitz3 import (
    BadIndices,
    BasisElement,
    FamilyElement,
    GenExpr,
    GenName,
    NotAConstant,
    NotMultilinear,
    apply_delta,
    base_ring,
    decompose,
    expand,
    generator_poly,
    generators,
    parse_poly,
    polarize,
    polarized_ring,
    reduce_multilinear,
    restitute_factor,
)
from weitz3.selftest import random_genexpr

R1 = base_ring(1)
R2 = base_ring(2)
R3 = base_ring(3)


def test_generators_n1():
    gens = generators(1)
    assert [(str(nm), str(p)) for nm, p in gens] == [
        ("f(1)", "x1"),
        ("g(1,1)", "2*x1*z1 - y1^2"),
    ]


def test_generator_counts_and_constancy():
    # n + C(n,2) + n(n+1)/2 + C(n,3)
    for n, expected in ((1, 2), (2, 6), (3, 13), (4, 24)):
        gens = generators(n)
        assert len(gens) == expected
        for _, p in gens:
            assert apply_delta(p).is_zero()


def test_generators_n2_names():
    names = [str(nm) for nm, _ in generators(2)]
    assert names == ["f(1)", "f(2)", "f(1,2)", "g(1,1)", "g(1,2)", "g(2,2)"]


def test_genname_validation():
    with pytest.raises(BadIndices):
        GenName("f", (2, 1))
    with pytest.raises(BadIndices):
        GenName("g", (2, 1))
    with pytest.raises(BadIndices):
        GenName("g", (1,))
    with pytest.raises(BadIndices):
        GenName("h", (1,))
    with pytest.raises(BadIndices):
        generator_poly(GenName("f", (3,)), 2)
    GenName("g", (1, 1))  # diagonal quadratic is allowed


def test_reduce_single_element():
    s = polarized_ring(1, 2)
    h = 2 * parse_poly("X1*Z2 - Y1*Y2 + Z1*X2", s)
    assert reduce_multilinear(h) == [
        (Fraction(2), BasisElement((FamilyElement("G", (1, 2)),)))
    ]


def test_reduce_zero_and_errors():
    s = polarized_ring(1, 2)
    assert reduce_multilinear(parse_poly("0", s)) == []
    with pytest.raises(NotMultilinear):
        reduce_multilinear(parse_poly("X1", s))
    with pytest.raises(NotAConstant):
        reduce_multilinear(parse_poly("Y1*Y2", s))


def test_reduce_two_blocks():
    s = polarized_ring(2, 2)
    h = parse_poly("X1*Y4 + X2*Y3 - X3*Y2 - X4*Y1", s)
    got = reduce_multilinear(h)
    assert [(c, e.factors) for c, e in got] == [
        (1, (FamilyElement("F", (1, 4)),)),
        (1, (FamilyElement("F", (2, 3)),)),
    ]


def test_reduce_strictly_decreases_leads():
    rng = random.Random(59)
    for _ in range(20):
        n = rng.randint(1, 2)
        d = rng.randint(1, 4)
        expr = random_genexpr(rng, n, max_degree=d)
        h = expand(expr, n).homogeneous_components().get(d)
        if h is None:
            continue
        polarized = polarize(h, d)
        leads = []
        remainder = polarized
        for c, element in reduce_multilinear(polarized):
            lead, _ = remainder.lead_monomial()
            leads.append(lead)
            remainder = remainder - c * element.realize(polarized.ring)
        assert remainder.is_zero()
        assert all(a > b for a, b in zip(leads, leads[1:]))


def test_restitute_factor_base_cases():
    assert restitute_factor(FamilyElement("G", (1, 2)), 1, 2) == GenExpr.from_name(
        GenName("g", (1, 1))
    )
    assert restitute_factor(FamilyElement("F", (1, 2)), 1, 2) == GenExpr.zero()
    assert restitute_factor(FamilyElement("F", (1, 4)), 2, 2) == GenExpr.from_name(
        GenName("f", (1, 2))
    )
    assert restitute_factor(FamilyElement("F", (3,)), 2, 2) == GenExpr.from_name(
        GenName("f", (2,))
    )
    # repeated triples kill the determinant
    assert restitute_factor(FamilyElement("G", (1, 2, 3)), 2, 2) == GenExpr.zero()
    with pytest.raises(BadIndices):
        restitute_factor(FamilyElement("F", (5,)), 1, 2)


def test_restitute_factor_matches_eps_of_realization():
    from weitz3 import evaluate_eps

    rng = random.Random(61)
    for _ in range(40):
        n = rng.randint(1, 3)
        d = rng.randint(1, 4)
        top = n * d
        size = rng.randint(1, min(4, top))
        idx = tuple(sorted(rng.sample(range(1, top + 1), size)))
        kind = "G" if size >= 2 and rng.random() < 0.5 else "F"
        element = FamilyElement(kind, idx)
        ring = polarized_ring(n, d)
        direct = evaluate_eps(element.realize(ring))
        symbolic = expand(restitute_factor(element, n, d), n)
        assert direct == symbolic


def test_decompose_examples():
    assert decompose(parse_poly("x1", R1)) == GenExpr.from_name(GenName("f", (1,)))

    got = decompose(parse_poly("x1*y2 - x2*y1", R2))
    assert got == GenExpr.from_name(GenName("f", (1, 2)))

    g11sq = parse_poly("2*x1*z1 - y1^2", R1) ** 2
    expr = decompose(g11sq)
    assert expand(expr, 1) == g11sq
    assert expr == GenExpr({(GenName("g", (1, 1)), GenName("g", (1, 1))): 1})

    with pytest.raises(NotAConstant) as info:
        decompose(parse_poly("y1", R1))
    assert info.value.witness == parse_poly("x1", R1)


def test_decompose_handles_constants_and_zero():
    from weitz3 import Polynomial

    assert decompose(Polynomial.zero(R1)) == GenExpr.zero()
    assert decompose(Polynomial.constant(R1, 5)) == GenExpr.constant(5)


def test_expand_examples():
    assert expand(GenExpr.from_name(GenName("f", (1, 2))), 2) == parse_poly(
        "x1*y2 - x2*y1", R2
    )
    assert expand(GenExpr.constant(5), 1) == parse_poly("5", R1)
    prod = GenExpr({(GenName("g", (1, 1)), GenName("f", (1,))): 1})
    assert expand(prod, 1) == parse_poly("2*x1*z1 - y1^2", R1) * parse_poly("x1", R1)


def test_genexpr_str_and_json():
    expr = GenExpr(
        {
            (GenName("f", (1, 2)),): Fraction(1),
            (GenName("g", (1, 1)), GenName("g", (1, 1))): Fraction(2, 3),
        }
    )
    assert str(expr) == "1*f(1,2) + 2/3*g(1,1)^2"
    assert expr.to_obj() == [
        {"coeff": "1", "factors": [{"gen": "f", "idx": [1, 2], "pow": 1}]},
        {"coeff": "2/3", "factors": [{"gen": "g", "idx": [1, 1], "pow": 2}]},
    ]
    assert str(GenExpr.zero()) == "0"
    assert str(GenExpr.constant(5)) == "5"
    minus = GenExpr.constant(1) - GenExpr.from_name(GenName("f", (1,)), 2)
    assert str(minus) == "1 - 2*f(1)"


def test_decompose_round_trip_random():
    rng = random.Random(67)
    for i in range(40):
        n = 1 + i % 3
        h = expand(random_genexpr(rng, n), n)
        assert expand(decompose(h), n) == h


def test_decompose_sigma_shifted_constant():
    # constants are fixed by the exponential, so both decompose identically
    from weitz3 import apply_sigma

    h = parse_poly("x1*z2 - y1*y2 + z1*x2", R2) * parse_poly("x2", R2)
    assert apply_sigma(h) == h
    assert expand(decompose(h), 2) == h
