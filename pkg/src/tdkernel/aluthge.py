"""Polar data, Aluthge transform and the two Aluthge kernels of the shift.

All windows derived from |M_z| come from one eigendecomposition of L L^*,
computed on a work window larger than the requested size and cropped. Because
|M_z|^{-2} is a finite dense block plus a diagonal, the cropped windows are
exact up to roundoff; each result still carries a doubling certificate.
"""

from dataclasses import dataclass

import numpy as np

from .errors import UnstableTruncation
from .hermitian import hermitian_eig
from .shimorin import CoefficientTable
from .windows import (
    OperatorWindow,
    left_inverse_window,
    modulus_inv_sq_window,
    modulus_window,
    mz_window,
    require_analytic,
    work_size,
)

DOUBLING_TOL = 1e-8


def _build(spec, N):
    S = work_size(spec, N) + spec.pad
    # one extra row so the last column of M_z keeps its subdiagonal entry
    lam, V = hermitian_eig(modulus_inv_sq_window(spec, S + 1).entries)

    def power(s):
        # |M|^s = (L L^*)^(-s/2)
        return (V * lam ** (-s / 2)) @ V.conj().T

    mod_big, mod_sqrt_big = power(1.0), power(0.5)
    mod, mod_inv = mod_big[:S, :S], power(-1.0)[:S, :S]
    mod_sqrt, mod_inv_sqrt = mod_sqrt_big[:S, :S], power(-0.5)[:S, :S]
    M_big = mz_window(spec, S + 1).entries
    Mr = M_big[:, :S]
    M = M_big[:S, :S]
    L = left_inverse_window(spec, S).entries
    MrH = Mr.conj().T

    B = MrH @ mod_big @ Mr
    B_inv = np.linalg.inv(B)
    F_vec = B_inv @ (MrH @ mod_big[:, 0])
    tilde_r = mod_sqrt_big @ Mr @ mod_inv_sqrt
    tilde = tilde_r[:S, :S]
    ltilde = np.linalg.solve(tilde_r.conj().T @ tilde_r, tilde_r.conj().T)[:, :S]
    ltilde_formula = (mod_sqrt @ B_inv @ MrH @ mod_sqrt_big)[:, :S]
    crop = lambda X: X[:N, :N]
    return {
        "mod": crop(mod),
        "mod_inv": crop(mod_inv),
        "mod_sqrt": crop(mod_sqrt),
        "mod_inv_sqrt": crop(mod_inv_sqrt),
        "partial_isometry": crop(Mr @ mod_inv),
        "tilde": crop(tilde),
        "ltilde": crop(ltilde),
        "ltilde_formula": crop(ltilde_formula),
        "F": F_vec[:N],
        "Mz": crop(M),
        "L": crop(L),
    }


@dataclass(frozen=True)
class AluthgeData:
    N: int
    mod_window: OperatorWindow
    mod_sqrt: OperatorWindow
    mod_inv_sqrt: OperatorWindow
    mod_inv: OperatorWindow
    partial_isometry: OperatorWindow
    tilde_window: OperatorWindow
    ltilde_window: OperatorWindow
    ltilde_formula: OperatorWindow
    F_vector: np.ndarray
    mz: OperatorWindow
    l: OperatorWindow
    doubling_deviation: float

    @property
    def interior(self):
        """Indices on which products of the stored windows are exact."""
        return self.N - 2

    def F_matrix(self):
        F = np.zeros((self.N, self.N), dtype=complex)
        F[:, 0] = self.F_vector
        return F

    def isometry_defect(self):
        k = self.interior
        U = self.partial_isometry.entries
        return float(np.max(np.abs((U.conj().T @ U)[:k, :k] - np.eye(k))))

    def tilde_defect(self):
        """tilde - |M|^{1/2} U |M|^{1/2} on the interior."""
        k = self.interior
        S, U = self.mod_sqrt.entries, self.partial_isometry.entries
        return float(np.max(np.abs((S @ U @ S - self.tilde_window.entries)[:k, :k])))

    def similarity_defect(self):
        """L~ |M|^{1/2} - |M|^{1/2} (L + F) on the interior."""
        k = self.interior
        S = self.mod_sqrt.entries
        lhs = self.ltilde_window.entries @ S
        rhs = S @ (self.l.entries + self.F_matrix())
        return float(np.max(np.abs((lhs - rhs)[:k, :k])))

    def left_inverse_defect(self):
        """Direct (T~^* T~)^{-1} T~^* against the |T|^{1/2}(T^*|T|T)^{-1}T^*|T|^{1/2} formula."""
        k = self.interior
        return float(np.max(np.abs((self.ltilde_window.entries - self.ltilde_formula.entries)[:k, :k])))


def aluthge_data(spec, N, certify=True):
    require_analytic(spec)
    parts = _build(spec, N)
    dev = 0.0
    if certify:
        big = _build(spec, 2 * N)
        dev = max(
            float(np.max(np.abs(big[key][:N, :N] - parts[key])))
            for key in ("mod", "mod_inv", "mod_sqrt", "tilde", "ltilde")
        )
        dev = max(dev, float(np.max(np.abs(big["F"][:N] - parts["F"]))))
    win = lambda key, tag: OperatorWindow(parts[key], tag, exactness="truncated")
    return AluthgeData(
        N=N,
        mod_window=win("mod", "Mod"),
        mod_sqrt=win("mod_sqrt", "ModSqrt"),
        mod_inv_sqrt=win("mod_inv_sqrt", "ModInvSqrt"),
        mod_inv=win("mod_inv", "ModInv"),
        partial_isometry=win("partial_isometry", "U"),
        tilde_window=win("tilde", "Tilde"),
        ltilde_window=win("ltilde", "LTilde"),
        ltilde_formula=win("ltilde_formula", "LTildeFormula"),
        F_vector=parts["F"],
        mz=OperatorWindow(parts["Mz"], "Mz"),
        l=OperatorWindow(parts["L"], "L"),
        doubling_deviation=dev,
    )


def rank_one_F(spec, N):
    """Image vector v of F g = <g, f_0> v, v = (M^*|M|M)^{-1} M^*|M| f_0."""
    return aluthge_data(spec, N, certify=False).F_vector


def default_window(spec, M):
    return max(4 * M, 2 * spec.b_support + 16)


def _sa_table(spec, M, N):
    data = aluthge_data(spec, N, certify=False)
    LH = data.ltilde_window.entries.conj().T
    w = data.mod_inv_sqrt.entries[:, 0].copy()
    w /= np.linalg.norm(w)
    cols = np.zeros((N, M + 1), dtype=complex)
    cols[:, 0] = w
    for n in range(1, M + 1):
        cols[:, n] = LH @ cols[:, n - 1]
    return cols.conj().T @ cols


def shimorin_aluthge_coeffs(spec, M, N=None):
    """Coefficients <L~^{*n} w, L~^{*m} w> with w the unit vector along |M|^{-1/2} f_0."""
    require_analytic(spec)
    N = default_window(spec, M) if N is None else N
    X = _sa_table(spec, M, N)
    X2 = _sa_table(spec, M, 2 * N)
    dev = float(np.max(np.abs(X - X2)))
    scale = max(1.0, float(np.max(np.abs(X))))
    if dev > DOUBLING_TOL * scale:
        raise UnstableTruncation(f"doubling the window moved a coefficient by {dev:.3e}")
    return CoefficientTable(X, basis="wandering")


def monomial_matrix(spec, N):
    """Column n holds the monomial coefficients of f_n: a_n at row n, b_n at row n+1."""
    A = np.zeros((N, N), dtype=complex)
    for n in range(N):
        A[n, n] = spec.a(n)
        if n + 1 < N:
            A[n + 1, n] = spec.b(n)
    return A


def induced_kernel_coeffs(P, spec):
    """Coefficients alpha_mn of z^m conj(w)^n in <P k(., w), k(., z)>.

    Rows/columns beyond the window of P are treated as zero, so the result
    is exact for every index below P's dimension.
    """
    P = np.asarray(getattr(P, "entries", P), dtype=complex)
    A = monomial_matrix(spec, P.shape[0])
    return A @ P @ A.conj().T


def standard_aluthge_coeffs(spec, M):
    require_analytic(spec)
    P = modulus_window(spec, -1, M + 1)
    return CoefficientTable(induced_kernel_coeffs(P, spec), basis="monomial")
