"""Acceptance suite: each criterion runs against its independent oracle at
full desk scale and must finish inside its stated time budget.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion, or equivalently ``weitz3 selftest``.
"""

from weitz3.selftest import (
    check_basis,
    check_decomposition,
    check_error_paths,
    check_generation,
    check_kron_products,
    check_minimality,
    check_multiplicities,
    check_path_totals,
    check_polarization,
)


def _require(result, budget_seconds):
    print(f"criterion: {result.line()}")
    assert result.passed, result.detail
    assert result.seconds < budget_seconds, (
        f"{result.name} took {result.seconds:.1f}s, budget {budget_seconds}s"
    )


def test_criterion_1_kronecker_blocks():
    # all 1 <= m <= n <= 12 against the rank oracle, under 30 s
    _require(check_kron_products(max_size=12), 30)


def test_criterion_2_multiplicities():
    # recursion vs recursion to d=40; both vs the 729x729 oracle to d=6
    _require(check_multiplicities(max_recursion_d=40, max_tensor_d=6), 120)


def test_criterion_3_path_totals():
    # totals (1, 1, 3, 7, 19, 51, 141) and the nullity oracle
    _require(check_path_totals(max_d=6), 120)


def test_criterion_4_basis_correctness():
    # phi leads, independence, and the two-term lead patterns
    _require(check_basis(max_d=6, lemma_max_t=6), 120)


def test_criterion_5_polarization_round_trip():
    _require(check_polarization(count=200), 60)


def test_criterion_6_decomposition_soundness():
    _require(check_decomposition(count=100), 120)


def test_criterion_7_generation():
    _require(check_generation(), 180)


def test_criterion_8_minimality():
    _require(check_minimality(max_n=3), 60)


def test_criterion_9_degenerate_and_error_paths():
    _require(check_error_paths(), 30)
