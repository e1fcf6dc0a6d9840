"""Exact expansion of prod (1 - x^k) and everything it implies.

The package computes in the ring of integer power series modulo
x^(N+1): the brute-force product expansion, the closed form supported
on generalized pentagonal numbers, two machine-verified telescoping
derivations connecting them, the partition-count recurrence from the
reciprocal series, and the division-cascade and roots-of-unity checks.
"""

from .partitions import (
    ENUMERATION_LIMIT,
    PartitionTable,
    partitions_enumerate,
    partitions_oracle_dp,
    partitions_recurrence,
    reciprocal_series,
    recurrence_support,
)
from .pentagonal import (
    PentagonalPair,
    closed_form_series,
    g_minus,
    g_plus,
    pentagonal_pair,
    pentagonal_pairs_upto,
    pentagonal_terms_upto,
)
from .series import (
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
from .telescope import (
    PREFIX_TERMS,
    DerivationTrace,
    EmissionRecord,
    StageVerificationError,
    TailFamily,
    expand_tail,
    initial_tail,
    reduce_step,
    reduction_identity_holds,
    replay_stages,
    run_telescope,
    verify_step,
)
from .verify import (
    CascadeReport,
    CascadeStep,
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

__version__ = "0.1.0"

__all__ = [
    "ENUMERATION_LIMIT",
    "PREFIX_TERMS",
    "CascadeReport",
    "CascadeStep",
    "CheckResult",
    "DerivationTrace",
    "EmissionRecord",
    "PartitionTable",
    "PentagonalPair",
    "RootEntry",
    "StageVerificationError",
    "TailFamily",
    "TruncatedSeries",
    "add",
    "cascade_quotient",
    "closed_form_series",
    "div_binomial",
    "division_cascade",
    "eval_partial_product_at_root",
    "expand_tail",
    "format_series",
    "full_verification",
    "g_minus",
    "g_plus",
    "initial_tail",
    "make_series",
    "monomial",
    "mul",
    "mul_binomial",
    "one",
    "partial_product",
    "partitions_enumerate",
    "partitions_oracle_dp",
    "partitions_recurrence",
    "pentagonal_pair",
    "pentagonal_pairs_upto",
    "pentagonal_terms_upto",
    "primitive_root_entries",
    "product_range",
    "reciprocal_series",
    "recurrence_support",
    "reduce_step",
    "reduction_identity_holds",
    "replay_stages",
    "root_multiplicity",
    "run_telescope",
    "series_fingerprint",
    "series_from_json",
    "sub",
    "to_dense_json",
    "to_sparse_json",
    "verify_step",
]
