"""Desk-scale verification suite.

Every closed-form piece of the library is pitted against an independent
brute-force oracle: the Kronecker block formula against exact rank sequences,
the multiplicity recursion against path counting and against the tensor
matrix, the basis construction against exact linear algebra, and the
decomposition pipeline against re-expansion.  The CLI `selftest` command and
the acceptance tests both run these checks.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator

from .decompose import (
    GenExpr,
    GenName,
    decompose,
    expand,
    generators,
    reduce_multilinear,
)
from .derivation import apply_delta, is_constant
from .errors import (
    BadIndices,
    LengthMismatch,
    NotAConstant,
    NotAPathMonomial,
    NotHomogeneous,
    NotMultilinear,
    NotNilpotent,
    PolySyntaxError,
    RingMismatch,
    SubscriptOutOfRange,
    WrongRingKind,
    ZeroPolynomial,
)
from .families import FamilyElement, build_F, build_G, phi, theta_basis, theta_ring
from .jordan import (
    ExactMatrix,
    JordanType,
    delta_tensor_matrix,
    exact_rank,
    jordan_type_of_nilpotent,
    kron_jordan,
    mu,
)
from .paths import enumerate_paths, path_counts, word_to_monomial
from .poly import (
    Monomial,
    Polynomial,
    RingDesc,
    base_ring,
    monomials_of_degree,
    parse_poly,
    polarized_ring,
)
from .polar import evaluate_eps, polarize, restitute

PATH_TOTALS = (1, 1, 3, 7, 19, 51, 141)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}  ({self.seconds:.2f}s)  {self.detail}"


def _timed(name: str, fn: Callable[[], str]) -> CheckResult:
    start = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except AssertionError as exc:
        detail = str(exc) or "assertion failed"
        ok = False
    return CheckResult(name, ok, detail, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# exact linear algebra over the monomial basis


def monomial_index(ring: RingDesc, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials_of_degree(ring, d))}

def poly_row(p: Polynomial, index: dict[Monomial, int]) -> dict[int, Fraction]:
    return {index[m]: c for m, c in p.terms.items()}


def kernel_dim_of_delta(n: int, d: int) -> int:
    """Nullity of the derivation on the degree-d slice of the n-triple ring,
    by exact elimination on the monomial basis."""
    ring = base_ring(n)
    domain = list(monomials_of_degree(ring, d))
    index = monomial_index(ring, d)
    rows = []
    for m in domain:
        image = apply_delta(Polynomial(ring, {m: Fraction(1)}))
        rows.append(poly_row(image, index))
    return len(domain) - exact_rank(rows)


def products_of_degree(n: int, d: int, skip: GenName | None = None) -> Iterator[Polynomial]:
    """All products of generators (multisets, one or more factors) of total
    degree exactly d, optionally with one generator excluded."""
    gens = [(nm, p) for nm, p in generators(n) if nm != skip]

    def rec(i: int, remaining: int, acc: Polynomial | None):
        if remaining == 0:
            if acc is not None:
                yield acc
            return
        for j in range(i, len(gens)):
            nm, p = gens[j]
            if nm.degree() <= remaining:
                yield from rec(j, remaining - nm.degree(), p if acc is None else acc * p)

    yield from rec(0, d, None)


def span_dim_of_products(n: int, d: int) -> int:
    ring = base_ring(n)
    index = monomial_index(ring, d)
    rows = [poly_row(p, index) for p in products_of_degree(n, d)]
    return exact_rank(rows)


# ---------------------------------------------------------------------------
# random inputs


def random_homogeneous(rng: random.Random, n: int, d: int, terms: int = 4) -> Polynomial:
    ring = base_ring(n)
    acc: dict[Monomial, Fraction] = {}
    nvars = 3 * n
    for _ in range(terms):
        picks = [rng.randrange(nvars) for _ in range(d)]
        m = Monomial([(v // 3 + 1, v % 3, 1) for v in picks])
        c = rng.randint(-5, 5)
        if c:
            acc[m] = acc.get(m, Fraction(0)) + c
    return Polynomial(ring, acc)


def random_genexpr(rng: random.Random, n: int, max_degree: int = 5) -> GenExpr:
    names = [nm for nm, _ in generators(n)]
    expr = GenExpr.constant(rng.randint(-3, 3)) if rng.random() < 0.4 else GenExpr.zero()
    for _ in range(rng.randint(1, 3)):
        budget = rng.randint(1, max_degree)
        factors: list[GenName] = []
        used = 0
        while used < budget:
            fits = [nm for nm in names if nm.degree() <= budget - used]
            nm = rng.choice(fits)
            factors.append(nm)
            used += nm.degree()
            if rng.random() < 0.25:
                break
        coeff = Fraction(rng.randint(1, 6) * rng.choice((-1, 1)), rng.choice((1, 1, 2, 3)))
        expr = expr + GenExpr({tuple(factors): coeff})
    return expr


# ---------------------------------------------------------------------------
# the nine checks


def check_kron_products(max_size: int = 12) -> CheckResult:
    """Closed-form Kronecker block decomposition == rank-sequence oracle."""

    def run() -> str:
        pairs = 0
        for m in range(1, max_size + 1):
            for n in range(m, max_size + 1):
                predicted = kron_jordan(m, n)
                assert predicted.dimension == m * n, f"dimension off at ({m},{n})"
                nilp = ExactMatrix.jordan_block(m, 1).kron(
                    ExactMatrix.jordan_block(n, 1)
                ) - ExactMatrix.identity(m * n)
                actual = jordan_type_of_nilpotent(nilp)
                assert predicted == actual, (
                    f"({m},{n}): predicted {predicted}, oracle {actual}"
                )
                pairs += 1
        return f"{pairs} Kronecker products up to size {max_size} match the rank oracle"

    return _timed("kronecker block decomposition", run)


def check_multiplicities(max_recursion_d: int = 40, max_tensor_d: int = 6) -> CheckResult:
    """Multiplicity recursion == path-count recursion == tensor-matrix oracle."""

    def run() -> str:
        for d in range(max_recursion_d + 1):
            assert mu(d) == path_counts(d), f"mu != path counts at d={d}"
        for d in range(1, max_tensor_d + 1):
            oracle = jordan_type_of_nilpotent(delta_tensor_matrix(d))
            assert oracle == JordanType(mu(d)), (
                f"d={d}: recursion {mu(d)}, oracle {oracle.blocks}"
            )
        return (
            f"recursions agree to d={max_recursion_d}; "
            f"tensor oracle agrees to d={max_tensor_d}"
        )

    return _timed("block multiplicities", run)


def check_path_totals(max_d: int = 6) -> CheckResult:
    """Path enumeration totals == count recursion == kernel dimension."""

    def run() -> str:
        for d in range(max_d + 1):
            n_paths = len(enumerate_paths(d))
            assert n_paths == sum(path_counts(d).values()), f"totals differ at d={d}"
            if d < len(PATH_TOTALS):
                assert n_paths == PATH_TOTALS[d], f"expected {PATH_TOTALS[d]} at d={d}"
            if d >= 1:
                mat = delta_tensor_matrix(d)
                nullity = mat.rows - exact_rank(
                    {j: v for j, v in enumerate(row) if v} for row in mat.entries
                )
                assert n_paths == nullity, f"d={d}: {n_paths} paths, nullity {nullity}"
        return f"totals {PATH_TOTALS[:max_d + 1]} match the nullity oracle"

    return _timed("path and kernel counts", run)


def check_basis(max_d: int = 6, lemma_max_t: int = 6, lemma_universe: int = 7) -> CheckResult:
    """phi hits its lead monomial, the theta basis is independent and of the
    right size, and family lead terms follow the two-term pattern."""

    def run() -> str:
        for d in range(1, max_d + 1):
            ring = theta_ring(d)
            rows = []
            index: dict[Monomial, int] = {}
            pairs = theta_basis(d)
            for wrd, element in pairs:
                alpha = word_to_monomial(wrd, tuple(range(1, d + 1)))
                realized = element.realize(ring)
                lead, coeff = realized.lead_monomial()
                assert lead == alpha and coeff == 1, f"phi misses lead at {wrd}"
                row = {}
                for m, c in realized.terms.items():
                    row[index.setdefault(m, len(index))] = c
                rows.append(row)
            rank = exact_rank(rows)
            assert rank == len(pairs), f"d={d}: basis vectors are dependent"
            mat = delta_tensor_matrix(d)
            nullity = mat.rows - exact_rank(
                {j: v for j, v in enumerate(row) if v} for row in mat.entries
            )
            assert rank == nullity, f"d={d}: {rank} basis vectors, nullity {nullity}"
        ring = polarized_ring(1, lemma_universe)
        checked = 0
        for t in range(2, lemma_max_t + 1):
            for idx in combinations(range(1, lemma_universe + 1), t):
                _check_two_leading_terms(build_F(idx, ring), idx, final_z=False)
                if t >= 3:
                    _check_two_leading_terms(build_G(idx, ring), idx, final_z=True)
                checked += 1
        return f"theta bases to d={max_d} verified; {checked} family lead patterns"

    return _timed("basis correctness", run)


def _check_two_leading_terms(p: Polynomial, idx: tuple[int, ...], final_z: bool):
    ordered = sorted(p.terms.items(), key=lambda kv: kv[0], reverse=True)
    assert len(ordered) >= 2, f"family member on {idx} has fewer than two terms"
    ranks = [1] * len(idx)
    ranks[0] = 0
    if final_z:
        ranks[-1] = 2
    first = Monomial([(s, r, 1) for s, r in zip(idx, ranks)])
    ranks[0], ranks[1] = 1, 0
    second = Monomial([(s, r, 1) for s, r in zip(idx, ranks)])
    assert ordered[0] == (first, 1), f"lead term wrong on {idx}"
    assert ordered[1] == (second, -1), f"second term wrong on {idx}"


def check_polarization(count: int = 200, seed: int = 20260809) -> CheckResult:
    """Round trip and equivariance of polarization and restitution."""

    def run() -> str:
        rng = random.Random(seed)
        cases = 0
        while cases < count:
            n = rng.randint(1, 3)
            d = rng.randint(1, 5)
            f = random_homogeneous(rng, n, d)
            if f.is_zero():
                continue
            big = polarize(f, d)
            assert big.is_multilinear(), "polarization must be multilinear"
            assert restitute(big) == f, f"round trip failed (n={n}, d={d})"
            assert polarize(apply_delta(f), d) == apply_delta(big), (
                f"polarize does not commute with the derivation (n={n}, d={d})"
            )
            assert evaluate_eps(apply_delta(big)) == apply_delta(evaluate_eps(big)), (
                f"eps does not commute with the derivation (n={n}, d={d})"
            )
            cases += 1
        return f"{cases} random round trips and equivariance checks"

    return _timed("polarization round trip", run)


def check_decomposition(count: int = 100, seed: int = 20260809) -> CheckResult:
    """expand(decompose(h)) == h on random generator polynomials."""

    def run() -> str:
        rng = random.Random(seed)
        for i in range(count):
            n = 1 + i % 3
            h = expand(random_genexpr(rng, n), n)
            back = expand(decompose(h), n)
            assert back == h, f"case {i} (n={n}): decomposition does not re-expand"
        return f"{count} random constants decomposed and re-expanded exactly"

    return _timed("decomposition soundness", run)


def check_generation() -> CheckResult:
    """Degree-d products of the generators span exactly the kernel slice."""

    def run() -> str:
        cells = []
        for n, max_d in ((1, 5), (2, 5), (3, 4)):
            for d in range(1, max_d + 1):
                spanned = span_dim_of_products(n, d)
                kernel = kernel_dim_of_delta(n, d)
                assert spanned == kernel, (
                    f"n={n}, d={d}: span {spanned} != kernel {kernel}"
                )
                cells.append((n, d, kernel))
        biggest = max(cells, key=lambda c: c[2])
        return f"{len(cells)} (n, d) cells; largest kernel slice dim {biggest[2]}"

    return _timed("generation", run)


def check_minimality(max_n: int = 3) -> CheckResult:
    """No generator lies in the span of same-degree products of the others."""

    def run() -> str:
        tested = 0
        for n in range(1, max_n + 1):
            ring = base_ring(n)
            for name, p in generators(n):
                d = name.degree()
                index = monomial_index(ring, d)
                rows = [
                    poly_row(q, index) for q in products_of_degree(n, d, skip=name)
                ]
                without = exact_rank(rows)
                with_gen = exact_rank(rows + [poly_row(p, index)])
                assert with_gen == without + 1, f"{name} is redundant over n={n}"
                tested += 1
        return f"{tested} generators are each outside the span of the rest"

    return _timed("minimality", run)


def check_error_paths() -> CheckResult:
    """Degenerate inputs raise the documented errors with useful payloads."""

    def run() -> str:
        r1 = base_ring(1)
        r2 = base_ring(2)
        s2 = polarized_ring(1, 2)

        try:
            decompose(parse_poly("y1", r1))
            raise AssertionError("decompose accepted a non-constant")
        except NotAConstant as exc:
            assert exc.witness == parse_poly("x1", r1), "witness should be x1"

        try:
            decompose(parse_poly("z1", r1))
            raise AssertionError("decompose accepted a non-constant")
        except NotAConstant as exc:
            assert exc.witness == parse_poly("y1", r1), "witness should be y1"

        try:
            phi(word_to_monomial("XY", (1, 2)))
        except NotAPathMonomial:
            raise AssertionError("phi rejected a valid path monomial")
        try:
            phi(Monomial([(1, 1, 1), (2, 0, 1)]))  # Y1*X2
            raise AssertionError("phi accepted a non-path monomial")
        except NotAPathMonomial:
            pass
        try:
            phi(Monomial([(1, 0, 2)]))  # X1^2
            raise AssertionError("phi accepted a non-multilinear monomial")
        except NotAPathMonomial:
            pass

        try:
            parse_poly("x1 + @", r1)
            raise AssertionError("parser accepted garbage")
        except PolySyntaxError as exc:
            assert exc.position == 5, f"position {exc.position}, expected 5"
        try:
            parse_poly("2*", r1)
            raise AssertionError("parser accepted a dangling product")
        except PolySyntaxError as exc:
            assert exc.position == 2
        try:
            parse_poly("X1", r1)
            raise AssertionError("uppercase accepted in a base ring")
        except PolySyntaxError as exc:
            assert exc.position == 0
        try:
            parse_poly("x4", base_ring(3))
            raise AssertionError("out-of-range subscript accepted")
        except SubscriptOutOfRange:
            pass
        try:
            parse_poly("1/0", r1)
            raise AssertionError("zero denominator accepted")
        except PolySyntaxError:
            pass

        try:
            parse_poly("x1", r1) + parse_poly("x1", r2)
            raise AssertionError("ring mismatch accepted")
        except RingMismatch:
            pass
        try:
            Polynomial.zero(r1).lead_monomial()
            raise AssertionError("zero polynomial has no lead monomial")
        except ZeroPolynomial:
            pass
        try:
            parse_poly("x1", r1).is_multilinear()
            raise AssertionError("multilinearity needs a polarized ring")
        except WrongRingKind:
            pass
        try:
            word_to_monomial("XY", (1, 2, 3))
            raise AssertionError("length mismatch accepted")
        except LengthMismatch:
            pass
        try:
            FamilyElement("G", (2, 1))
            raise AssertionError("unsorted family indices accepted")
        except BadIndices:
            pass
        try:
            restitute(parse_poly("X1*X2 + X1", s2))
            raise AssertionError("restitute accepted a non-multilinear input")
        except NotMultilinear:
            pass
        try:
            polarize(parse_poly("x1 + x1*z1", r1), 2)
            raise AssertionError("polarize accepted a non-homogeneous input")
        except NotHomogeneous:
            pass
        try:
            jordan_type_of_nilpotent(ExactMatrix.identity(3))
            raise AssertionError("identity accepted as nilpotent")
        except NotNilpotent:
            pass
        try:
            reduce_multilinear(parse_poly("Y1*Y2", s2))
            raise AssertionError("reduce accepted a non-constant")
        except NotAConstant as exc:
            assert exc.witness is not None
        return "17 degenerate and error paths behave as documented"

    return _timed("degenerate and error paths", run)


def run_all(
    max_kron: int = 12,
    max_tensor_d: int = 6,
    max_recursion_d: int = 40,
    polar_count: int = 200,
    decomp_count: int = 100,
) -> list[CheckResult]:
    """Run the full suite; scales can be reduced for a quick pass."""
    return [
        check_kron_products(max_kron),
        check_multiplicities(max_recursion_d, max_tensor_d),
        check_path_totals(max_tensor_d),
        check_basis(max_tensor_d),
        check_polarization(polar_count),
        check_decomposition(decomp_count),
        check_generation(),
        check_minimality(),
        check_error_paths(),
    ]
