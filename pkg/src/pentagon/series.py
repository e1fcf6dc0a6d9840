"""Exact truncated formal power series over the integers.

A series of order N holds the coefficients of x^0..x^N and all arithmetic
is performed modulo x^(N+1). Coefficients are plain Python ints, so there
is no overflow and no rounding anywhere in this module. Operations mixing
two orders truncate to the smaller one, matching the quotient-ring
semantics.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from operator import add as _int_add, sub as _int_sub


@dataclass(frozen=True)
class TruncatedSeries:
    """An integer power series modulo x^(order+1).

    ``coeffs`` has length ``order + 1``; entry i is the coefficient of x^i.
    Instances are immutable and safe to share.
    """

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"need {self.order + 1} coefficients for order {self.order}, "
                f"got {len(self.coeffs)}"
            )

    def __getitem__(self, exponent: int) -> int:
        return self.coeffs[exponent]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return sub(self, other)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return mul(self, other)

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        head = format_series(self)
        if len(head) > 60:
            head = head[:57] + "..."
        return f"TruncatedSeries(order={self.order}, {head})"

    def nonzero_terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, ascending, zeros omitted."""
        return [(e, c) for e, c in enumerate(self.coeffs) if c]


def _wrap(coeffs: list[int], order: int) -> TruncatedSeries:
    return TruncatedSeries(order, tuple(coeffs))


def make_series(coeffs: list[int] | tuple[int, ...], order: int) -> TruncatedSeries:
    """Build a series from low-order coefficients, zero-filling up to x^order."""
    if len(coeffs) > order + 1:
        raise ValueError(
            f"{len(coeffs)} coefficients do not fit in order {order}"
        )
    padded = list(coeffs) + [0] * (order + 1 - len(coeffs))
    return _wrap(padded, order)


def one(order: int) -> TruncatedSeries:
    """The unit series 1 at the given order."""
    return make_series([1], order)


def monomial(exponent: int, order: int, coeff: int = 1) -> TruncatedSeries:
    """coeff * x^exponent, or the zero series if the exponent exceeds the order."""
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    out = [0] * (order + 1)
    if exponent <= order:
        out[exponent] = coeff
    return _wrap(out, order)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    n = order + 1
    return _wrap(list(map(_int_add, a.coeffs[:n], b.coeffs[:n])), order)


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    n = order + 1
    return _wrap(list(map(_int_sub, a.coeffs[:n], b.coeffs[:n])), order)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Schoolbook convolution, truncated to the smaller order."""
    order = min(a.order, b.order)
    n = order + 1
    out = [0] * n
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs[:n]):
        if ai == 0:
            continue
        for j in range(n - i):
            out[i + j] += ai * bc[j]
    return _wrap(out, order)


def _mul_binomial_inplace(coeffs: list[int], k: int, c: int, order: int) -> None:
    """coeffs *= (1 + c*x^k) modulo x^(order+1), in one pass."""
    if k > order:
        return
    tail = coeffs[k:]
    head = coeffs[: order + 1 - k]
    if c == -1:
        coeffs[k:] = map(_int_sub, tail, head)
    elif c == 1:
        coeffs[k:] = map(_int_add, tail, head)
    else:
        coeffs[k:] = [t + c * h for t, h in zip(tail, head)]


def mul_binomial(a: TruncatedSeries, k: int, c: int) -> TruncatedSeries:
    """Multiply by the sparse factor (1 + c*x^k) in O(order) coefficient ops."""
    if k < 1:
        raise ValueError(f"binomial exponent must be >= 1, got {k}")
    out = list(a.coeffs)
    _mul_binomial_inplace(out, k, c, a.order)
    return _wrap(out, a.order)


def _div_binomial_inplace(coeffs: list[int], k: int, order: int) -> None:
    """coeffs /= (1 - x^k): q_i = a_i + q_(i-k), exact in the truncated ring."""
    for r in range(min(k, order + 1)):
        coeffs[r::k] = accumulate(coeffs[r::k])


def div_binomial(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Exact quotient by the unit (1 - x^k)."""
    if k < 1:
        raise ValueError(f"binomial exponent must be >= 1, got {k}")
    out = list(a.coeffs)
    _div_binomial_inplace(out, k, a.order)
    return _wrap(out, a.order)


def product_range(first: int, last: int, order: int) -> TruncatedSeries:
    """prod of (1 - x^k) for k = first..last, modulo x^(order+1).

    An empty range (last < first) gives the unit series. Factors with
    k > order are identities at this order and are skipped.
    """
    if first < 1:
        raise ValueError(f"factor range must start at >= 1, got {first}")
    cur = [1] + [0] * order
    for k in range(first, min(last, order) + 1):
        _mul_binomial_inplace(cur, k, -1, order)
    return _wrap(cur, order)


def partial_product(m: int, order: int) -> TruncatedSeries:
    """prod of (1 - x^k) for k = 1..m, modulo x^(order+1).

    The brute-force expansion of the full product, and the oracle every
    other representation in the package is checked against.
    """
    if m < 1:
        raise ValueError(f"need at least one factor, got m={m}")
    return product_range(1, m, order)


# --- export formats ---------------------------------------------------------
#
# Coefficients travel as decimal strings so arbitrarily large integers
# survive JSON round-trips in any consumer.


def to_dense_json(s: TruncatedSeries) -> dict:
    return {"order": s.order, "coeffs": [str(c) for c in s.coeffs]}


def to_sparse_json(s: TruncatedSeries) -> dict:
    return {
        "order": s.order,
        "terms": [{"exp": e, "coeff": str(c)} for e, c in s.nonzero_terms()],
    }


def series_from_json(obj: dict) -> TruncatedSeries:
    """Parse either the dense or the sparse schema."""
    order = int(obj["order"])
    if "coeffs" in obj:
        return _wrap([int(c) for c in obj["coeffs"]], order)
    out = [0] * (order + 1)
    for term in obj["terms"]:
        out[int(term["exp"])] = int(term["coeff"])
    return _wrap(out, order)


def format_series(s: TruncatedSeries) -> str:
    """Render ascending by exponent, e.g. ``1 - x - x^2 + x^5``."""
    parts: list[str] = []
    for e, c in s.nonzero_terms():
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            body = ("x" if e == 1 else f"x^{e}") if mag == 1 else (
                f"{mag}x" if e == 1 else f"{mag}x^{e}"
            )
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"
