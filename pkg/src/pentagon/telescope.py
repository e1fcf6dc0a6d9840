"""The two telescoping reductions that turn the product into the series.

Each reduction works on a parametric family of tails. A tail is the sum

    sum over j of  x^(base + j*step) * prod_(i = p .. p+j-1) (1 - x^i)

with j running from 1 upward, or from 0 upward when the tail carries a
bare head monomial (the j = 0 term has an empty product). Splitting the
first binomial factor off every term and recombining like powers leaves
two monomials plus a tail of the same shape one stage further along.
Variant 1 starts from the prefix 1 - x and emits with mixed signs;
variant 2 starts from 1 - x - x^2, carries bare heads, and emits both
monomials with the same sign. Every step here is replayed numerically
in the truncated ring, never taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import add as _int_add

from .pentagonal import g_minus
from .series import TruncatedSeries, _mul_binomial_inplace


class StageVerificationError(RuntimeError):
    """A replayed reduction step failed its exact identity check."""


@dataclass(frozen=True)
class TailFamily:
    """Parametric tail: everything about it follows from five numbers.

    ``stage`` is the position in the derivation (1-based), ``base`` the
    exponent offset, ``step`` the per-term exponent increment,
    ``product_start`` the index of the first binomial factor, and
    ``includes_bare_head`` whether the j = 0 bare monomial is present.
    """

    variant: int
    stage: int
    base: int
    step: int
    product_start: int
    includes_bare_head: bool

    def __post_init__(self) -> None:
        if self.variant not in (1, 2):
            raise ValueError(f"variant must be 1 or 2, got {self.variant}")
        if self.stage < 1 or self.base < 1 or self.step < 1:
            raise ValueError("stage, base and step must all be >= 1")
        if self.product_start < 1:
            raise ValueError("product_start must be >= 1")

    @property
    def leading_exponent(self) -> int:
        """Smallest exponent the tail can produce; all lower coefficients are 0."""
        return self.base if self.includes_bare_head else self.base + self.step

    @property
    def contribution_sign(self) -> int:
        """Sign this tail carries inside the full series: (-1)^stage."""
        return -1 if self.stage % 2 else 1


@dataclass(frozen=True)
class EmissionRecord:
    """The two monomials one reduction step emits.

    ``first_sign`` and ``second_sign`` are the signs the monomials carry
    in the assembled series; inside the stage equation itself they appear
    multiplied by ``contribution`` (the tail's own sign in the series).
    """

    stage: int
    first_exponent: int
    second_exponent: int
    first_sign: int
    second_sign: int
    contribution: int

    @property
    def tail_signs(self) -> tuple[int, int]:
        """Signs of the two monomials inside the tail equation itself."""
        return (self.first_sign * self.contribution,
                self.second_sign * self.contribution)


@dataclass(frozen=True)
class DerivationTrace:
    """A completed replay: prefix, every emission, and the unexpanded rest."""

    variant: int
    order: int
    prefix: tuple[tuple[int, int], ...]
    emissions: tuple[EmissionRecord, ...]
    residual: TailFamily

    def reconstruct(self) -> TruncatedSeries:
        """Assemble prefix plus signed emissions into a series.

        Exact at this order: the residual tail's leading exponent is
        beyond it, so dropping the residual loses nothing.
        """
        coeffs = [0] * (self.order + 1)
        for exponent, coeff in self.prefix:
            coeffs[exponent] = coeff
        for record in self.emissions:
            if record.first_exponent <= self.order:
                coeffs[record.first_exponent] += record.first_sign
            if record.second_exponent <= self.order:
                coeffs[record.second_exponent] += record.second_sign
        return TruncatedSeries(self.order, tuple(coeffs))


PREFIX_TERMS = {1: ((0, 1), (1, -1)), 2: ((0, 1), (1, -1), (2, -1))}


def initial_tail(variant: int) -> TailFamily:
    """The tail the derivation starts from, after peeling the prefix."""
    if variant == 1:
        return TailFamily(1, stage=1, base=1, step=1, product_start=1,
                          includes_bare_head=False)
    if variant == 2:
        return TailFamily(2, stage=2, base=5, step=2, product_start=2,
                          includes_bare_head=True)
    raise ValueError(f"variant must be 1 or 2, got {variant}")


def reduce_step(t: TailFamily) -> tuple[EmissionRecord, TailFamily]:
    """One split-and-recombine: emit two monomials, return the next tail.

    Splitting (1 - x^p) off each term and pairing the shifted copy of
    term j with term j+1 requires step == product_start; the pairing
    then collapses to a single tail with base + 3*step + 1, step + 1.
    """
    if t.step != t.product_start:
        raise ValueError(
            f"tail is not reducible: step {t.step} != product_start {t.product_start}"
        )
    b, d = t.base, t.step
    if t.includes_bare_head:
        e1, e2 = b, b + d
        tail_signs = (1, 1)
    else:
        e1, e2 = b + d, b + 3 * d + 1
        tail_signs = (1, -1)
    c = t.contribution_sign
    record = EmissionRecord(
        stage=t.stage,
        first_exponent=e1,
        second_exponent=e2,
        first_sign=tail_signs[0] * c,
        second_sign=tail_signs[1] * c,
        contribution=c,
    )
    nxt = TailFamily(
        variant=t.variant,
        stage=t.stage + 1,
        base=b + 3 * d + 1,
        step=d + 1,
        product_start=t.product_start + 1,
        includes_bare_head=t.includes_bare_head,
    )
    return record, nxt


def expand_tail(t: TailFamily, order: int) -> TruncatedSeries:
    """Numerically expand the tail's defining sum modulo x^(order+1).

    Terms are added while base + j*step <= order; later terms only
    produce higher exponents, so stopping there is exact.
    """
    acc = [0] * (order + 1)
    prod = [1] + [0] * order
    j = 0 if t.includes_bare_head else 1
    factors_applied = 0
    exponent = t.base + j * t.step
    while exponent <= order:
        while factors_applied < j:
            _mul_binomial_inplace(prod, t.product_start + factors_applied, -1, order)
            factors_applied += 1
        acc[exponent:] = map(_int_add, acc[exponent:], prod[: order + 1 - exponent])
        j += 1
        exponent += t.step
    return TruncatedSeries(order, tuple(acc))


def reduction_identity_holds(
    t: TailFamily,
    record: EmissionRecord,
    nxt: TailFamily,
    order: int,
) -> bool:
    """Exact check of tail = s1*x^e1 + s2*x^e2 - next, in the truncated ring."""
    lhs = expand_tail(t, order)
    rhs = [-c for c in expand_tail(nxt, order).coeffs]
    s1, s2 = record.tail_signs
    if record.first_exponent <= order:
        rhs[record.first_exponent] += s1
    if record.second_exponent <= order:
        rhs[record.second_exponent] += s2
    return tuple(rhs) == lhs.coeffs


def verify_step(t: TailFamily, order: int | None = None) -> bool:
    """Replay one reduction step and check its identity exactly.

    The default order reaches past the next tail's second emission
    exponent, so the check always sees at least one full term of the
    next tail rather than comparing zeros.
    """
    if order is None:
        order = g_minus(t.stage + 2) + 5
    record, nxt = reduce_step(t)
    return reduction_identity_holds(t, record, nxt, order)


def replay_stages(
    variant: int,
    stages: int,
    order: int | None = None,
) -> list[EmissionRecord]:
    """Run a fixed number of reduction steps, verifying each one.

    With order=None every step is checked at its own default order;
    raises StageVerificationError on the first exact-identity failure.
    """
    if stages < 1:
        raise ValueError(f"stages must be >= 1, got {stages}")
    t = initial_tail(variant)
    records: list[EmissionRecord] = []
    for _ in range(stages):
        if not verify_step(t, order):
            raise StageVerificationError(
                f"variant {variant} stage {t.stage} failed its identity check"
            )
        record, t = reduce_step(t)
        records.append(record)
    return records


def run_telescope(variant: int, order: int) -> DerivationTrace:
    """Replay a full derivation, verifying every step at the given order.

    Steps run until the next emission's smaller exponent would exceed
    the order, which also bounds the residual tail's leading exponent.
    Each expansion is computed once and reused as the next step's
    left-hand side.
    """
    if order < 2:
        raise ValueError(f"order must be >= 2, got {order}")
    t = initial_tail(variant)
    emissions: list[EmissionRecord] = []
    lhs = expand_tail(t, order)
    while t.leading_exponent <= order:
        record, nxt = reduce_step(t)
        nxt_expansion = expand_tail(nxt, order)
        rhs = [-c for c in nxt_expansion.coeffs]
        s1, s2 = record.tail_signs
        if record.first_exponent <= order:
            rhs[record.first_exponent] += s1
        if record.second_exponent <= order:
            rhs[record.second_exponent] += s2
        if tuple(rhs) != lhs.coeffs:
            raise StageVerificationError(
                f"variant {variant} stage {t.stage} failed its identity "
                f"check at order {order}"
            )
        emissions.append(record)
        t = nxt
        lhs = nxt_expansion
    return DerivationTrace(
        variant=variant,
        order=order,
        prefix=PREFIX_TERMS[variant],
        emissions=tuple(emissions),
        residual=t,
    )
