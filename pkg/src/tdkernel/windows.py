"""Finite windows of the infinite matrices of M_z, its adjoint and its left inverse.

Every matrix is written in the orthonormal basis ``f_n``; a window of size
``N`` is the top-left ``N x N`` block. Closed-form windows are built entry by
entry, so the ``N`` window is always the top-left block of the ``2N`` one.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotLeftInvertible
from .hermitian import hermitian_power
from .spec import DerivedSequences, validate_spec

CLOSED_FORM = "closed_form"
TRUNCATED = "truncated"


@dataclass(frozen=True)
class OperatorWindow:
    entries: np.ndarray
    source: str
    exactness: str = CLOSED_FORM
    basis: str = "f"

    def __post_init__(self):
        e = np.array(self.entries, dtype=complex)
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError(f"window must be square, got {e.shape}")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def dim(self):
        return self.entries.shape[0]

    def top_left(self, n):
        return OperatorWindow(self.entries[:n, :n], self.source, self.exactness, self.basis)

    def adjoint(self, source=None):
        return OperatorWindow(
            self.entries.conj().T, source or f"{self.source}*", self.exactness, self.basis
        )

    def to_json(self):
        from .serialize import matrix_to_json

        return {
            "dim": self.dim,
            "entries": matrix_to_json(self.entries),
            "source": self.source,
            "exactness": self.exactness,
        }


def require_analytic(spec):
    report = validate_spec(spec)
    if not report.analytic:
        raise NotLeftInvertible(
            f"|a_n/a_(n+1)| is not bounded away from zero (epsilon={report.epsilon:.3e})"
        )
    return report


def _fill_b_tail(E, spec, row, col, start):
    """Continue a column downward with the factor -b_{m-1}/a_m from ``start``."""
    val = start
    N = E.shape[0]
    for m in range(row + 1, N):
        val = val * (-spec.b(m - 1) / spec.a(m))
        if val == 0:
            break
        E[m, col] = val


def mz_window(spec, N):
    seq = DerivedSequences(spec)
    E = np.zeros((N, N), dtype=complex)
    for n in range(N):
        if n + 1 < N:
            E[n + 1, n] = spec.a(n) / spec.a(n + 1)
        if n + 2 < N:
            c = seq.c(n)
            if c != 0:
                E[n + 2, n] = c
                _fill_b_tail(E, spec, n + 2, n, c)
    return OperatorWindow(E, "Mz")


def mz_adj_window(spec, N):
    return mz_window(spec, N).adjoint("MzAdj")


def left_inverse_window(spec, N):
    require_analytic(spec)
    seq = DerivedSequences(spec)
    E = np.zeros((N, N), dtype=complex)
    for n in range(1, N):
        E[n - 1, n] = spec.a(n) / spec.a(n - 1)
        d = seq.d(n)
        if d != 0:
            E[n, n] = d
            _fill_b_tail(E, spec, n, n, d)
    return OperatorWindow(E, "L")


def lp_window(spec, p, N):
    """Closed-form window of L^p for the Shimorin left inverse L."""
    if p < 1:
        raise ValueError("power p must be >= 1")
    if p == 1:
        return left_inverse_window(spec, N)
    require_analytic(spec)
    seq = DerivedSequences(spec)
    a0 = spec.a(0)
    E = np.zeros((N, N), dtype=complex)
    for n in range(1, min(p, N)):
        top = seq.beta_p(n, p) / a0
        if top != 0:
            E[0, n] = top
            _fill_b_tail(E, spec, 0, n, top)
    for n in range(p, N):
        E[n - p, n] = spec.a(n) / spec.a(n - p)
        row = n - p + 1
        if row < N:
            val = seq.d_p(n, p) / spec.a(row)
            if val != 0:
                E[row, n] = val
                _fill_b_tail(E, spec, row, n, val)
    return OperatorWindow(E, f"Lp({p})")


def lp_adj_window(spec, p, N):
    return lp_window(spec, p, N).adjoint(f"LAdjP({p})")


def modulus_inv_sq_window(spec, N):
    """|M_z|^{-2} = L L^*; the product is exact because L has one superdiagonal."""
    L = left_inverse_window(spec, N + spec.pad).entries
    G = (L @ L.conj().T)[:N, :N]
    G = (G + G.conj().T) / 2
    return OperatorWindow(G, "ModInvSq")


_MODULUS_TAGS = {-2.0: "ModInvSq", -1.0: "ModInv", -0.5: "ModInvSqrt", 0.5: "ModSqrt", 1.0: "Mod"}


def work_size(spec, N):
    """Window size that contains the dense block plus room for chained products."""
    return max(N, spec.b_support + 2) + 2 * spec.pad


def modulus_window(spec, power, N):
    """|M_z|^power on the N window, via the eigendecomposition of L L^*.

    |M_z|^{-2} is a finite dense block followed by a diagonal, so functions of
    a window that contains the block are exact; the window is cropped from a
    larger one to stay clear of the boundary.
    """
    power = float(power)
    S = work_size(spec, N)
    G = modulus_inv_sq_window(spec, S).entries
    R = hermitian_power(G, -power / 2)[:N, :N]
    return OperatorWindow(R, _MODULUS_TAGS.get(power, f"Mod^{power:g}"), exactness="truncated")


@dataclass(frozen=True)
class LeftInverseReport:
    N: int
    pad: int
    deviation: float

    def to_json(self):
        return {"N": self.N, "pad": self.pad, "deviation": self.deviation}


def verify_left_inverse(spec, N):
    pad = spec.pad
    L = left_inverse_window(spec, N + pad).entries
    M = mz_window(spec, N + pad).entries
    prod = (L @ M)[:N, :N]
    dev = float(np.max(np.abs(prod - np.eye(N))))
    return LeftInverseReport(N, pad, dev)
