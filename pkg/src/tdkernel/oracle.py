"""Brute-force reference computations.

Nothing here uses the closed-form L^p windows or the <., f_0> shortcut:
[M_z] comes from conjugating the monomial shift by the change of basis,
[L] is filled in entry by entry from a_n and b_n, and everything else is
dense matrix algebra.
"""

import warnings

import numpy as np

from .aluthge import monomial_matrix, standard_aluthge_coeffs
from .errors import DivergenceWarning
from .shimorin import CoefficientTable
from .spec import basis_eval
from .windows import modulus_window, require_analytic


def dense_mz(spec, N):
    """[M_z] = A^{-1} S A with A the monomial coefficients of f_n and S the shift.

    All three factors are lower triangular, so the window is exact.
    """
    A = monomial_matrix(spec, N)
    S = np.eye(N, k=-1)
    return np.linalg.solve(A, S @ A)


def dense_l(spec, N):
    """[L] entry by entry: superdiagonal a_n/a_{n-1}, diagonal d_n, then
    d_n times the running product of -b_{j-1}/a_j down the column."""
    L = np.zeros((N, N), dtype=complex)
    for n in range(1, N):
        L[n - 1, n] = spec.a(n) / spec.a(n - 1)
        d = spec.b(n) / spec.a(n) - spec.b(n - 1) / spec.a(n - 1)
        prod = 1.0 + 0j
        for m in range(n, N):
            if m > n:
                prod *= -spec.b(m - 1) / spec.a(m)
            L[m, n] = d * prod
    return L


def brute_shimorin_table(spec, M, N=None):
    """X_mn = P_W L^m L^{*n} on W = span{f_0}, with P_W = I - M_z L."""
    require_analytic(spec)
    N = 3 * M + 2 * spec.pad + 4 if N is None else N
    L = dense_l(spec, N)
    LH = L.conj().T
    PW = np.eye(N) - dense_mz(spec, N) @ L
    e0 = np.zeros(N, dtype=complex)
    e0[0] = 1.0
    X = np.zeros((M + 1, M + 1), dtype=complex)
    for m in range(M + 1):
        Lm = np.linalg.matrix_power(L, m)
        for n in range(M + 1):
            v = PW @ Lm @ np.linalg.matrix_power(LH, n) @ e0
            X[m, n] = v[0]
    return CoefficientTable(X)


def _radius(spec):
    """Points with |z| below this keep every basis sum convergent."""
    return 1.0 / max(1.0, abs(spec.rho))


def gram_kernel_check(spec, points, N=60):
    """Max |sum alpha_mn z^m conj(w)^n - <|M|^{-1} k(., w), k(., z)>| over point pairs.

    Points outside the disc of convergence raise a DivergenceWarning and are
    skipped.
    """
    require_analytic(spec)
    R = _radius(spec)
    good = []
    for z in points:
        z = complex(z)
        if abs(z) >= R:
            warnings.warn(f"point {z} outside the disc of radius {R:g}", DivergenceWarning)
        else:
            good.append(z)
    if not good:
        return 0.0
    alpha = standard_aluthge_coeffs(spec, N - 1).X
    P = modulus_window(spec, -1, N).entries
    F = np.array([[basis_eval(spec, n, z) for n in range(N)] for z in good])
    Z = np.array([[z**m for m in range(N)] for z in good])
    from_table = Z @ alpha @ Z.conj().T
    from_gram = F @ P @ F.conj().T
    return float(np.max(np.abs(from_table - from_gram)))


def dense_gram_inverse(spec, N):
    """Top-left N block of (M_z^* M_z)^{-1}, from a padded window of [M_z].

    The window keeps one extra row so every retained column of M_z is
    complete; the Gram matrix is then exact and so is its inverse away from
    the last index.
    """
    require_analytic(spec)
    S = N + 2 * spec.pad + 4
    M = dense_mz(spec, S + 1)[:, :S]
    return np.linalg.inv(M.conj().T @ M)[:N, :N]
