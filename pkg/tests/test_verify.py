"""Division cascade, root multiplicities, and the bundled check suite."""

import math

import pytest
from hypothesis import given, strategies as st

from pentagon.series import make_series, one, partial_product, product_range
from pentagon.verify import (
    CheckResult,
    RootEntry,
    cascade_quotient,
    division_cascade,
    eval_partial_product_at_root,
    full_verification,
    primitive_root_entries,
    root_multiplicity,
    series_fingerprint,
)


def test_fingerprint_distinguishes_content_and_order():
    a = make_series([1, -1], 2)
    assert series_fingerprint(a) == series_fingerprint(make_series([1, -1], 2))
    assert series_fingerprint(a) != series_fingerprint(make_series([1, 1], 2))
    assert series_fingerprint(a) != series_fingerprint(make_series([1, -1], 3))


def test_fingerprint_frozen_value():
    # sha256 of the documented payload "order=2;1,-1,0"
    digest = series_fingerprint(make_series([1, -1], 2))
    assert digest == (
        "7aa40125b6ade4f02a337a18451cac99c5edac05fb807f38c4e16951122945c1"
    )


def test_cascade_smallest_order():
    report = division_cascade(1)
    assert report.final_is_unity
    assert len(report.steps) == 1
    assert report.steps[0].k == 1


def test_cascade_first_step_strips_first_factor():
    report = division_cascade(10)
    rest = product_range(2, 10, 10)
    assert report.steps[0].fingerprint == series_fingerprint(rest)


def test_cascade_intermediates_match_remaining_products():
    order = 60
    report = division_cascade(order)
    for m in (1, 2, 5, 17, 33):
        rest = product_range(m + 1, order, order)
        assert report.steps[m - 1].fingerprint == series_fingerprint(rest)
        assert cascade_quotient(order, m).coeffs == rest.coeffs


def test_cascade_ends_at_unity():
    for order in (1, 2, 7, 40, 120):
        report = division_cascade(order)
        assert report.final_is_unity
        assert [s.k for s in report.steps] == list(range(1, order + 1))
        assert all(s.all_integer for s in report.steps)
    assert cascade_quotient(40, 40).coeffs == one(40).coeffs


def test_cascade_rejects_order_zero():
    with pytest.raises(ValueError):
        division_cascade(0)


def test_root_multiplicity_examples():
    assert root_multiplicity(1, 5) == 5
    assert root_multiplicity(2, 10) == 5
    assert root_multiplicity(7, 6) == 0
    with pytest.raises(ValueError):
        root_multiplicity(0, 3)
    with pytest.raises(ValueError):
        root_multiplicity(3, 0)


@given(st.integers(1, 200), st.integers(1, 200))
def test_root_multiplicity_counts_divisible_factors(d, m):
    assert root_multiplicity(d, m) == sum(1 for k in range(1, m + 1) if k % d == 0)


def test_root_entries_are_primitive():
    assert [e.j for e in primitive_root_entries(1)] == [1]
    assert [e.j for e in primitive_root_entries(12)] == [1, 5, 7, 11]
    with pytest.raises(ValueError):
        RootEntry(6, 3)
    assert RootEntry(4, 3).multiplicity(9) == 2


def test_eval_examples():
    magnitude, is_zero = eval_partial_product_at_root(2, 1, 1)
    assert magnitude == pytest.approx(2.0)
    assert not is_zero
    magnitude, is_zero = eval_partial_product_at_root(2, 1, 2)
    assert magnitude == 0.0
    assert is_zero
    _, is_zero = eval_partial_product_at_root(3, 1, 5)
    assert is_zero


def test_eval_rejects_non_primitive_index():
    with pytest.raises(ValueError):
        eval_partial_product_at_root(4, 2, 3)
    with pytest.raises(ValueError):
        eval_partial_product_at_root(0, 1, 3)


def test_eval_zero_iff_enough_factors():
    for d in range(1, 9):
        for entry in primitive_root_entries(d):
            for m in range(1, 17):
                _, is_zero = eval_partial_product_at_root(d, entry.j, m)
                assert is_zero == (m >= d), (d, entry.j, m)


def test_eval_at_one_matches_product_value():
    # at d=1 the root is x=1 and every factor vanishes
    magnitude, is_zero = eval_partial_product_at_root(1, 1, 4)
    assert magnitude == 0.0 and is_zero


def test_eval_magnitude_matches_direct_evaluation():
    for d, j, m in [(5, 2, 4), (7, 3, 5), (12, 5, 11)]:
        zeta = complex(math.cos(2 * math.pi * j / d), math.sin(2 * math.pi * j / d))
        direct = 1.0
        for k in range(1, m + 1):
            direct *= abs(1 - zeta ** k)
        magnitude, is_zero = eval_partial_product_at_root(d, j, m)
        assert magnitude == pytest.approx(direct, rel=1e-9)
        assert not is_zero


def test_root_count_completeness():
    for m in range(1, 51):
        total = 0
        for d in range(1, m + 1):
            phi = sum(1 for j in range(1, d + 1) if math.gcd(j, d) == 1)
            total += phi * root_multiplicity(d, m)
        assert total == m * (m + 1) // 2


def test_full_verification_passes():
    checks = full_verification(60, roots_max_d=6)
    assert [c.name for c in checks] == [
        "closed form equals product", "division cascade", "root structure"]
    assert all(isinstance(c, CheckResult) and c.passed for c in checks)


def test_full_verification_validates_arguments():
    with pytest.raises(ValueError):
        full_verification(1)
    with pytest.raises(ValueError):
        full_verification(10, roots_max_d=0)


def test_partial_product_value_at_one_is_zero_like():
    # sanity link between the float root checks and the exact series:
    # summing coefficients evaluates the polynomial at x = 1
    series = partial_product(8, 36)
    assert sum(series.coeffs) == 0
