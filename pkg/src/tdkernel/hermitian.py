"""Functional calculus for Hermitian positive-definite windows.

Everything goes through a full Hermitian eigendecomposition, which picks the
positive branch of the square root unambiguously.
"""

import numpy as np

from .errors import NotHermitian, NotPositiveDefinite

HERMITIAN_TOL = 1e-12
PD_RTOL = 1e-12


def _as_array(a):
    from .windows import OperatorWindow

    if isinstance(a, OperatorWindow):
        return a.entries, a
    return np.asarray(a, dtype=complex), None


def check_hermitian(a, tol=HERMITIAN_TOL):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotHermitian(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    dev = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if dev > tol * scale:
        raise NotHermitian(f"matrix deviates from its adjoint by {dev:.3e}")


def hermitian_eig(a):
    """Eigenvalues/eigenvectors of a Hermitian PD matrix, checked."""
    a = np.asarray(a, dtype=complex)
    check_hermitian(a)
    h = (a + a.conj().T) / 2
    lam, vecs = np.linalg.eigh(h)
    top = float(lam[-1]) if lam.size else 0.0
    if lam.size and (top <= 0 or lam[0] <= PD_RTOL * top):
        raise NotPositiveDefinite(
            f"smallest eigenvalue {lam[0]:.3e} not above {PD_RTOL:g} x largest ({top:.3e})"
        )
    return lam, vecs


def hermitian_power(a, s):
    """A**s for Hermitian positive-definite A and real s."""
    lam, vecs = hermitian_eig(a)
    out = (vecs * lam**s) @ vecs.conj().T
    return (out + out.conj().T) / 2


def _wrap(result, template, tag):
    if template is None:
        return result
    from .windows import OperatorWindow

    return OperatorWindow(result, source=tag or template.source, exactness="truncated")


def hermitian_inverse(a, source=None):
    arr, template = _as_array(a)
    return _wrap(hermitian_power(arr, -1.0), template, source)


def hermitian_sqrt(a, source=None):
    arr, template = _as_array(a)
    return _wrap(hermitian_power(arr, 0.5), template, source)
