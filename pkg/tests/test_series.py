"""Ring arithmetic: frozen examples plus sampled algebraic laws."""

import dataclasses

import pytest
from hypothesis import given, strategies as st

from pentagon.series import (
    TruncatedSeries,
    add,
    div_binomial,
    format_series,
    make_series,
    monomial,
    mul,
    mul_binomial,
    one,
    partial_product,
    product_range,
    series_from_json,
    sub,
    to_dense_json,
    to_sparse_json,
)


@st.composite
def series(draw, max_order=24, coeff_bound=999):
    order = draw(st.integers(min_value=0, max_value=max_order))
    coeffs = draw(st.lists(st.integers(-coeff_bound, coeff_bound),
                           min_size=order + 1, max_size=order + 1))
    return TruncatedSeries(order, tuple(coeffs))


def test_make_series_pads_with_zeros():
    assert make_series([1], 3).coeffs == (1, 0, 0, 0)
    assert make_series([1, -1], 2).coeffs == (1, -1, 0)
    assert make_series([0, 0, 1], 5).coeffs == (0, 0, 1, 0, 0, 0)


def test_make_series_rejects_overflow_and_bad_order():
    with pytest.raises(ValueError):
        make_series([1, 2, 3], 1)
    with pytest.raises(ValueError):
        TruncatedSeries(-1, ())
    with pytest.raises(ValueError):
        TruncatedSeries(2, (1, 2))


def test_series_is_immutable():
    s = make_series([1, -1], 2)
    with pytest.raises(dataclasses.FrozenInstanceError):
        s.order = 5


def test_add_sub_trivial():
    assert add(make_series([1, -1], 2), make_series([0, 1], 2)).coeffs == (1, 0, 0)
    a = make_series([1, -1], 3)
    assert sub(a, a).coeffs == (0, 0, 0, 0)
    assert add(make_series([1, -1, -1], 2), make_series([0, 0, 1], 2)).coeffs == (1, -1, 0)


def test_mixed_order_truncates_to_smaller():
    a = make_series([1, 2, 3, 4], 3)
    b = make_series([1, 1], 1)
    assert add(a, b).order == 1
    assert add(a, b).coeffs == (2, 3)
    assert mul(a, b).order == 1


def test_mul_examples():
    assert mul(make_series([1, -1], 2), make_series([1, 1], 2)).coeffs == (1, 0, -1)
    assert mul(make_series([1, -1], 3), make_series([1, 0, -1], 3)).coeffs == (1, -1, -1, 1)
    lhs = make_series([1, -1, -1, 1], 6)
    rhs = make_series([1, 0, 0, -1], 6)
    assert mul(lhs, rhs).coeffs == (1, -1, -1, 0, 1, 1, -1)


def test_mul_binomial_examples():
    assert mul_binomial(one(3), 1, -1).coeffs == (1, -1, 0, 0)
    assert mul_binomial(make_series([1, -1], 3), 2, -1).coeffs == (1, -1, -1, 1)
    assert mul_binomial(monomial(2, 6), 5, -1).coeffs == (0, 0, 1, 0, 0, 0, 0)


def test_mul_binomial_rejects_nonpositive_k():
    with pytest.raises(ValueError):
        mul_binomial(one(3), 0, -1)


@given(series(), st.integers(1, 12), st.integers(-3, 3))
def test_mul_binomial_matches_dense_mul(a, k, c):
    dense = monomial(k, a.order, c)
    expected = mul(a, add(one(a.order), dense))
    assert mul_binomial(a, k, c).coeffs == expected.coeffs


def test_div_binomial_examples():
    assert div_binomial(one(4), 1).coeffs == (1, 1, 1, 1, 1)
    assert div_binomial(make_series([1, -1], 4), 1).coeffs == (1, 0, 0, 0, 0)
    assert div_binomial(make_series([1, -1, -1, 1], 3), 2).coeffs == (1, -1, 0, 0)


@given(series(), st.integers(1, 12))
def test_div_binomial_inverts_mul_binomial(a, k):
    assert div_binomial(mul_binomial(a, k, -1), k).coeffs == a.coeffs
    assert mul_binomial(div_binomial(a, k), k, -1).coeffs == a.coeffs


@given(series(), series())
def test_mul_commutes(a, b):
    assert mul(a, b).coeffs == mul(b, a).coeffs


@given(series(max_order=12, coeff_bound=50),
       series(max_order=12, coeff_bound=50),
       series(max_order=12, coeff_bound=50))
def test_mul_associates_up_to_truncation(a, b, c):
    assert mul(mul(a, b), c).coeffs == mul(a, mul(b, c)).coeffs


@given(series(), series())
def test_add_sub_roundtrip(a, b):
    assert sub(add(a, b), b).coeffs == a.coeffs[: min(a.order, b.order) + 1]


def test_partial_product_examples():
    assert partial_product(1, 2).coeffs == (1, -1, 0)
    assert partial_product(3, 6).coeffs == (1, -1, -1, 0, 1, 1, -1)
    assert format_series(partial_product(12, 12)) == "1 - x - x^2 + x^5 + x^7 - x^12"


def test_partial_product_rejects_zero_factors():
    with pytest.raises(ValueError):
        partial_product(0, 4)


@given(st.integers(1, 40), st.permutations(list(range(1, 9))))
def test_partial_product_order_independent(order, ks):
    shuffled = one(order)
    for k in ks:
        shuffled = mul_binomial(shuffled, k, -1)
    assert shuffled.coeffs == partial_product(8, order).coeffs


@given(st.integers(1, 60), st.integers(0, 10))
def test_factors_beyond_order_are_identity(n, extra):
    assert partial_product(n, n).coeffs == partial_product(n + extra, n).coeffs


def test_product_range_empty_is_unit():
    assert product_range(5, 4, 6).coeffs == one(6).coeffs


def test_product_range_splits_partial_product():
    whole = partial_product(10, 14)
    split = mul(product_range(1, 4, 14), product_range(5, 10, 14))
    assert whole.coeffs == split.coeffs


def test_dunder_arithmetic_matches_functions():
    a, b = make_series([1, -1], 4), make_series([0, 2, 1], 4)
    assert (a + b).coeffs == add(a, b).coeffs
    assert (a - b).coeffs == sub(a, b).coeffs
    assert (a * b).coeffs == mul(a, b).coeffs
    assert a[1] == -1


@given(series())
def test_json_dense_roundtrip(a):
    assert series_from_json(to_dense_json(a)).coeffs == a.coeffs


@given(series())
def test_json_sparse_roundtrip(a):
    assert series_from_json(to_sparse_json(a)).coeffs == a.coeffs


def test_json_uses_decimal_strings():
    huge = make_series([10 ** 40, -(10 ** 41)], 1)
    dense = to_dense_json(huge)
    assert dense["coeffs"] == [str(10 ** 40), str(-(10 ** 41))]
    sparse = to_sparse_json(huge)
    assert sparse["terms"][1]["coeff"] == str(-(10 ** 41))


def test_format_series_rendering():
    assert format_series(make_series([], 3)) == "0"
    assert format_series(make_series([2], 0)) == "2"
    assert format_series(make_series([-1, 2], 1)) == "-1 + 2x"
    assert format_series(make_series([0, 1], 1)) == "x"
    assert format_series(make_series([0, -3, 0, 1], 3)) == "-3x + x^3"
    assert format_series(make_series([1, 0, 5], 2)) == "1 + 5x^2"
    assert format_series(make_series([0, -1], 1)) == "-x"


def test_nonzero_terms():
    assert make_series([1, 0, -2], 4).nonzero_terms() == [(0, 1), (2, -2)]
