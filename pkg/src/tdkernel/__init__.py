"""Shifts on tridiagonal reproducing kernel spaces: operator windows,
Shimorin and Aluthge kernel coefficients, and classification tests."""

from .aluthge import (
    AluthgeData,
    aluthge_data,
    induced_kernel_coeffs,
    rank_one_F,
    shimorin_aluthge_coeffs,
    standard_aluthge_coeffs,
)
from .classify import (
    positive_kernel_criterion,
    quasinormal_test,
    truncated_sa_criterion,
)
from .errors import (
    DimensionMismatch,
    DivergenceWarning,
    IndeterminateBand,
    NonzeroViolation,
    NormalityDetected,
    NotHermitian,
    NotLeftInvertible,
    NotPositiveDefinite,
    NotTruncated,
    TdkError,
    UnstableTruncation,
)
from .hermitian import hermitian_inverse, hermitian_sqrt
from .oracle import brute_shimorin_table, gram_kernel_check
from .shimorin import (
    CoefficientTable,
    shimorin_coeffs,
    shimorin_tridiagonal_verdict,
)
from .spec import (
    DerivedSequences,
    KernelSpec,
    basis_eval,
    derived_sequences,
    kernel_eval,
    monomial_coeffs,
    validate_spec,
)
from .verdict import DualVerdict, Outcome, Verdict, Witness
from .windows import (
    OperatorWindow,
    left_inverse_window,
    lp_adj_window,
    lp_window,
    modulus_inv_sq_window,
    modulus_window,
    mz_adj_window,
    mz_window,
    verify_left_inverse,
)

__version__ = "0.1.0"
