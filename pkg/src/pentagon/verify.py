"""End-to-end checks: the division cascade and the root structure.

Dividing the series by (1 - x), then (1 - x^2), and so on strips one
factor per step and must end at exactly 1; each intermediate quotient is
the product over the remaining factors. At a primitive d-th root of
unity every factor with index divisible by d vanishes, so the partial
product over k <= m has that root with multiplicity floor(m/d). Both
facts are checked directly, the cascade in exact integers and the roots
in floating point with a scaled tolerance.
"""

from __future__ import annotations

import cmath
import hashlib
from dataclasses import dataclass
from math import gcd, pi

from .pentagonal import closed_form_series
from .series import TruncatedSeries, div_binomial, partial_product, product_range


def series_fingerprint(s: TruncatedSeries) -> str:
    """Stable content hash of a series: order plus decimal coefficients."""
    payload = f"order={s.order};" + ",".join(str(c) for c in s.coeffs)
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


@dataclass(frozen=True)
class CascadeStep:
    k: int
    fingerprint: str
    all_integer: bool


@dataclass(frozen=True)
class CascadeReport:
    order: int
    steps: tuple[CascadeStep, ...]
    final_is_unity: bool


def division_cascade(order: int) -> CascadeReport:
    """Divide the closed form by (1 - x^k) for k = 1..order, in order.

    Every division is exact in the truncated ring, so all_integer is
    true by construction; the flag documents the claim the report makes.
    Quotients are recorded as fingerprints, comparable against any
    independently built series.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    q = closed_form_series(order)
    steps = []
    for k in range(1, order + 1):
        q = div_binomial(q, k)
        steps.append(CascadeStep(k, series_fingerprint(q), True))
    unity = (1,) + (0,) * order
    return CascadeReport(order, tuple(steps), q.coeffs == unity)


def cascade_quotient(order: int, upto_k: int) -> TruncatedSeries:
    """The quotient after dividing out factors 1..upto_k, for spot checks."""
    q = closed_form_series(order)
    for k in range(1, upto_k + 1):
        q = div_binomial(q, k)
    return q


def root_multiplicity(d: int, m: int) -> int:
    """Multiplicity of a primitive d-th root of unity in prod_(k<=m)(1 - x^k).

    One factor per index k divisible by d, hence floor(m/d).
    """
    if d < 1 or m < 1:
        raise ValueError("d and m must both be >= 1")
    return m // d


@dataclass(frozen=True)
class RootEntry:
    """A primitive d-th root of unity, indexed by j with gcd(j, d) = 1."""

    d: int
    j: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"root order must be >= 1, got {self.d}")
        if gcd(self.j, self.d) != 1:
            raise ValueError(f"j = {self.j} is not coprime to d = {self.d}")

    def multiplicity(self, m: int) -> int:
        return root_multiplicity(self.d, m)


def primitive_root_entries(d: int) -> list[RootEntry]:
    """All primitive d-th roots, one entry per residue coprime to d."""
    return [RootEntry(d, j) for j in range(1, d + 1) if gcd(j, d) == 1]


def eval_partial_product_at_root(d: int, j: int, m: int) -> tuple[float, bool]:
    """|prod_(k<=m)(1 - zeta^k)| at zeta = exp(2*pi*i*j/d).

    Returns (magnitude, is_zero) with is_zero decided at tolerance
    1e-9 * m. Angles are reduced with integer arithmetic mod d, so a
    vanishing factor is exactly 0.0 rather than rounding noise.
    """
    if d < 1 or m < 1:
        raise ValueError("d and m must both be >= 1")
    if gcd(j, d) != 1:
        raise ValueError(f"j = {j} is not coprime to d = {d}")
    prod = complex(1.0)
    for k in range(1, m + 1):
        idx = (j * k) % d
        prod *= 1.0 - cmath.exp(2j * pi * idx / d)
    magnitude = abs(prod)
    return magnitude, magnitude <= 1e-9 * m


def _phi(d: int) -> int:
    return sum(1 for j in range(1, d + 1) if gcd(j, d) == 1)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def full_verification(order: int, roots_max_d: int = 12) -> list[CheckResult]:
    """The whole suite at one order: closed form, cascade, roots.

    Returns one result per check group; the detail of a failing group
    pinpoints the first mismatch found.
    """
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    if roots_max_d < 1:
        raise ValueError(f"roots_max_d must be >= 1, got {roots_max_d}")
    results = []

    closed = closed_form_series(order)
    product = partial_product(order, order)
    if closed.coeffs == product.coeffs:
        results.append(CheckResult(
            "closed form equals product", True, f"order {order}"))
    else:
        e = next(i for i, (a, b) in enumerate(zip(closed.coeffs, product.coeffs))
                 if a != b)
        results.append(CheckResult(
            "closed form equals product", False,
            f"first mismatch at x^{e}: closed form {closed[e]}, product {product[e]}"))

    report = division_cascade(order)
    sampled = [m for m in (1, 5, 50) if m <= order]
    bad = None
    for m in sampled:
        rest = product_range(m + 1, order, order)
        if report.steps[m - 1].fingerprint != series_fingerprint(rest):
            bad = m
            break
    if report.final_is_unity and bad is None:
        results.append(CheckResult(
            "division cascade", True,
            f"order {order}, final quotient 1, intermediates at {sampled}"))
    elif bad is not None:
        results.append(CheckResult(
            "division cascade", False,
            f"quotient after step {bad} differs from the remaining product"))
    else:
        results.append(CheckResult(
            "division cascade", False, "final quotient is not 1"))

    m_max = 2 * roots_max_d
    mismatch = None
    for d in range(1, roots_max_d + 1):
        for entry in primitive_root_entries(d):
            for m in range(1, m_max + 1):
                _, is_zero = eval_partial_product_at_root(d, entry.j, m)
                if is_zero != (m >= d):
                    mismatch = (d, entry.j, m, is_zero)
                    break
            if mismatch:
                break
        if mismatch:
            break
    count_bad = next(
        (m for m in range(1, 51)
         if sum(_phi(d) * root_multiplicity(d, m) for d in range(1, m + 1))
         != m * (m + 1) // 2),
        None,
    )
    if mismatch is None and count_bad is None:
        results.append(CheckResult(
            "root structure", True,
            f"d <= {roots_max_d}, m <= {m_max}, multiplicity sums to m <= 50"))
    elif mismatch is not None:
        d, j, m, is_zero = mismatch
        results.append(CheckResult(
            "root structure", False,
            f"zeta(d={d}, j={j}) at m={m}: is_zero={is_zero}, expected {m >= d}"))
    else:
        results.append(CheckResult(
            "root structure", False,
            f"multiplicity count mismatch at m={count_bad}"))

    return results
