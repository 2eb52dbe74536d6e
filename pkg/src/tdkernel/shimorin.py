"""Shimorin kernel coefficients of the shift and their tridiagonality.

The wandering subspace ker M_z^* is spanned by the unit vector f_0, so each
coefficient ``X_mn = P_W L^m L^{*n}|_W`` is a scalar, namely
``<L^{*n} f_0, L^{*m} f_0>``. Row 0 of the closed-form ``L^p`` window is the
conjugate of ``L^{*p} f_0``, which is all the table needs.
"""

from dataclasses import dataclass

import numpy as np

from .spec import DerivedSequences, is_zero
from .verdict import DEFAULT_TOL, DualVerdict, Verdict, Witness, zero_verdict
from .windows import left_inverse_window, lp_window, require_analytic


@dataclass(frozen=True)
class CoefficientTable:
    X: np.ndarray
    basis: str = "wandering"
    wandering_dim: int = 1

    def __post_init__(self):
        X = np.array(self.X, dtype=complex)
        X.setflags(write=False)
        object.__setattr__(self, "X", X)

    @property
    def max_index(self):
        return self.X.shape[0] - 1

    def __getitem__(self, mn):
        return self.X[mn]

    def off_band(self):
        M = self.max_index
        for m in range(M + 1):
            for n in range(M + 1):
                if abs(m - n) >= 2:
                    yield (m, n), abs(self.X[m, n])

    def tridiagonal_verdict(self, tol=DEFAULT_TOL):
        scale = float(np.max(np.abs(self.X))) if self.X.size else 1.0
        return zero_verdict(self.off_band(), scale, tol)

    def to_json(self, verdict=None):
        from .serialize import matrix_to_json

        out = {"M": self.max_index, "basis": self.basis, "X": matrix_to_json(self.X)}
        if verdict is not None:
            out["verdict"] = verdict.to_json()
        return out


def default_window(spec, M):
    return 2 * M + spec.b_support + 2


def shimorin_coeffs(spec, M, N=None):
    require_analytic(spec)
    N = default_window(spec, M) if N is None else N
    if N < M + 1:
        raise ValueError(f"window {N} too small for table size {M}")
    rows = np.zeros((M + 1, N), dtype=complex)
    rows[0, 0] = 1.0
    for p in range(1, M + 1):
        rows[p] = lp_window(spec, p, N).entries[0]
    return CoefficientTable(rows @ rows.conj().T)


def is_weighted_shift(spec, horizon=None, tol=DEFAULT_TOL):
    """b_n / a_n constant; the zero-b tail forces the constant to be 0."""
    seq = DerivedSequences(spec)
    horizon = spec.prefix_len if horizon is None else max(horizon, spec.prefix_len)
    r0 = seq.ratio(0)
    scale = max(abs(seq.ratio(n)) for n in range(horizon + 1))
    for n in range(1, horizon + 1):
        diff = abs(seq.ratio(n) - r0)
        if not is_zero(diff, scale, rtol=tol):
            return Verdict.from_bool(False, Witness(n=n, magnitude=diff), tol)
    return Verdict.from_bool(True, tol=tol)


def _criterion_verdict(spec, M, tol):
    seq = DerivedSequences(spec)
    b0_zero = is_zero(spec.b(0), abs(spec.a(0)), rtol=tol)
    ws = is_weighted_shift(spec, M, tol)
    if b0_zero or ws.holds:
        return Verdict.from_bool(True, tol=tol, b0_zero=b0_zero, weighted_shift=ws.holds)
    # first m with beta_m^(m+2) != 0 is where X_{m,m+2} first fails
    for m in range(1, M + 1):
        bp = seq.beta_p(m, m + 2)
        if abs(bp) > 0:
            return Verdict.from_bool(
                False, Witness(m=m, n=m + 2, magnitude=abs(bp)), tol,
                b0_zero=False, weighted_shift=False,
            )
    return Verdict.from_bool(False, Witness(m=ws.witness.n, n=ws.witness.n + 2,
                                            magnitude=ws.witness.magnitude), tol)


def shimorin_tridiagonal_verdict(spec, M=8, tol=DEFAULT_TOL):
    """Criterion (b_0 = 0 or weighted shift) against the table's off-band entries.

    The table is enlarged to at least P + 2 so that the first failing
    ``X_{n,n+2}`` (n <= P under the zero-b tail) is inside it.
    """
    require_analytic(spec)
    M = max(M, spec.prefix_len + 2)
    table = shimorin_coeffs(spec, M)
    return DualVerdict(_criterion_verdict(spec, M, tol), table.tridiagonal_verdict(tol)), table


def analytic_model_coeffs(spec, target, M):
    """Taylor coefficients <L^n h, f_0>, n = 0..M, of the model function of h."""
    h = np.asarray(target, dtype=complex).ravel()
    W = len(h) + M + spec.pad
    L = left_inverse_window(spec, W).entries
    v = np.zeros(W, dtype=complex)
    v[: len(h)] = h
    out = np.zeros(M + 1, dtype=complex)
    out[0] = v[0]
    for n in range(1, M + 1):
        v = L @ v
        out[n] = v[0]
    return out
