"""Stand-alone classification tests: positive operators inducing tridiagonal
kernels, quasinormality of the shift, and the truncated Shimorin-Aluthge test.

Each test runs a closed-form criterion next to a direct computation of the
same statement and reports both.
"""

from dataclasses import dataclass

import numpy as np

from .aluthge import induced_kernel_coeffs, shimorin_aluthge_coeffs, standard_aluthge_coeffs
from .errors import DimensionMismatch, NormalityDetected, NotTruncated
from .hermitian import check_hermitian, hermitian_power
from .verdict import DEFAULT_TOL, DualVerdict, zero_verdict
from .windows import left_inverse_window, mz_window, require_analytic


def _recurrence_residuals(C, spec, ms, ns, offset=0):
    """Yield ((m, n), |c_mn + conj(b_{n-1}/a_n) c_{m,n-1}|) in scan order.

    ``C`` is indexed from ``offset``: entry (m, n) lives at C[m-offset, n-offset].
    """
    for n in ns:
        ratio = np.conj(spec.b(n - 1) / spec.a(n))
        for m in ms:
            if m > n - 2:
                break
            i, j = m - offset, n - offset
            yield (m, n), abs(C[i, j] + ratio * C[i, j - 1])


def positive_kernel_criterion(P, spec, band=None, tol=DEFAULT_TOL):
    """Does <P k(., w), k(., z)> define a tridiagonal kernel?

    Parameters
    ----------
    P : array_like or OperatorWindow
        Hermitian window of a positive operator in the ``f_n`` basis.
    spec : KernelSpec
    band : int, optional
        Largest index checked; defaults to the last index of the window.

    Returns
    -------
    DualVerdict
        ``criterion`` checks the column recurrence on the entries of ``P``;
        ``numeric`` checks the off-band monomial coefficients of the kernel.
    """
    P = np.asarray(getattr(P, "entries", P), dtype=complex)
    check_hermitian(P)
    last = P.shape[0] - 1
    band = last if band is None else band
    if band > last or band < 0:
        raise DimensionMismatch(f"band {band} outside a window of size {P.shape[0]}")
    P = P[: band + 1, : band + 1]
    pmax = float(np.max(np.abs(P))) if P.size else 0.0

    crit = zero_verdict(
        _recurrence_residuals(P, spec, range(band + 1), range(2, band + 1)), pmax, tol
    )
    alpha = induced_kernel_coeffs(P, spec)
    off = (((m, n), abs(alpha[m, n])) for n in range(band + 1) for m in range(n - 1))
    amax = float(np.max(np.abs(alpha))) if alpha.size else 0.0
    return DualVerdict(crit, zero_verdict(off, amax, tol))


@dataclass(frozen=True)
class QuasinormalResult:
    verdict: DualVerdict
    r: float
    residual: float
    commutator: np.ndarray

    @property
    def value(self):
        return self.verdict.value

    @property
    def witness(self):
        return self.verdict.numeric.witness

    def to_json(self):
        out = {"value": self.value.value}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        out.update({
            "r": self.r,
            "residual": self.residual,
            "theorem": self.verdict.numeric.to_json(),
            "corollary": self.verdict.criterion.to_json(),
            "agree": self.verdict.agree,
        })
        return out


def _corollary_items(M, N, r):
    """Row/column inner products of [M_z] whose vanishing is equivalent to quasinormality."""
    cols = [M[:, j] for j in range(N)]
    rows = [M[i, :] for i in range(N)]
    ip = lambda x, y: complex(np.vdot(y, x))  # <x, y> = sum x_k conj(y_k)
    yield (0, 0), abs(ip(cols[0], cols[0]) - r)
    for i in range(1, N):
        yield (0, i), abs(ip(cols[0], cols[i]))
    for n in range(1, N):
        for m in range(1, n + 1):
            yield (m, n), abs(ip(cols[n], cols[m]) - ip(rows[m], rows[n]))


def quasinormal_test(spec, N=16, tol=DEFAULT_TOL):
    """Test [M_z^*, M_z] = r P_{f_0} with r = ||M_z f_0||^2.

    The commutator is formed on a window padded by the b-support so that
    its top-left N block is exact. The second channel recomputes the same
    entries from inner products of rows and columns of [M_z].
    """
    require_analytic(spec)
    W = N + spec.pad + 1
    M = mz_window(spec, W).entries
    comm = (M.conj().T @ M - M @ M.conj().T)[:N, :N]
    scale = float(np.max(np.abs(comm)))
    if scale == 0.0:
        raise NormalityDetected("the commutator window vanishes")
    r = float(np.sum(np.abs(M[:, 0]) ** 2))
    target = np.zeros_like(comm)
    target[0, 0] = r
    diff = comm - target
    residual = float(np.max(np.abs(diff)))
    thm_items = (((m, n), abs(diff[m, n])) for m in range(N) for n in range(N))
    theorem = zero_verdict(thm_items, scale, tol)
    corollary = zero_verdict(_corollary_items(M, N, r), scale, tol)
    return QuasinormalResult(DualVerdict(corollary, theorem), r, residual, comm)


def truncation_order(spec):
    """Smallest r >= 2 with b_n = 0 for n outside 2..r; NotTruncated otherwise."""
    if spec.b(0) != 0 or spec.b(1) != 0:
        raise NotTruncated("a truncated kernel needs b_0 = b_1 = 0")
    return max(2, spec.b_support - 1)


@dataclass(frozen=True)
class TruncatedResult:
    verdict: DualVerdict
    r: int
    block: np.ndarray
    standard: object = None
    agree_standard: bool = None

    @property
    def value(self):
        return self.verdict.criterion.value

    def to_json(self):
        crit = self.verdict.criterion
        out = {"value": crit.value.value}
        if crit.witness is not None:
            out["witness"] = crit.witness.to_json()
        out.update({
            "r": self.r,
            "criterion": crit.to_json(),
            "shimorin_aluthge": self.verdict.numeric.to_json(),
            "agree": self.verdict.agree,
        })
        if self.standard is not None:
            out["standard"] = self.standard.to_json()
            out["agree_standard"] = self.agree_standard
        return out


def middle_block(spec, r):
    """Middle block (indices 1..r+1) of |M_z|^{-1} for a truncated kernel of order r.

    Its square is L_{r+1} L_{r+1}^*, with L_{r+1} the rows 1..r+1 and columns
    2..r+2 of [L]; no other column of those rows is nonzero.
    """
    L = left_inverse_window(spec, r + 4).entries
    Lr = L[1 : r + 2, 2 : r + 3]
    return hermitian_power(Lr @ Lr.conj().T, 0.5)


def truncated_sa_criterion(spec, r=None, tol=DEFAULT_TOL, cross_check=True):
    """Tridiagonality of the Shimorin-Aluthge kernel of a truncated kernel of order r.

    The criterion channel applies the column recurrence to the square root
    of the middle block for 1 <= m <= n-2, 3 <= n <= r+1. The numeric channel
    is the off-band test on the Shimorin-Aluthge table, and with
    ``cross_check`` the standard Aluthge table is tested as well.
    """
    r_min = truncation_order(spec)
    if r is None:
        r = r_min
    elif r < r_min:
        raise NotTruncated(f"b_n is nonzero beyond n = {r}")
    require_analytic(spec)
    A = middle_block(spec, r)
    scale = float(np.max(np.abs(A)))
    crit = zero_verdict(
        _recurrence_residuals(A, spec, range(1, r + 2), range(3, r + 2), offset=1), scale, tol,
    )
    M = r + 4
    sa = shimorin_aluthge_coeffs(spec, M).tridiagonal_verdict(tol)
    std, agree_std = None, None
    if cross_check:
        std = standard_aluthge_coeffs(spec, M).tridiagonal_verdict(tol)
        if crit.decided and std.decided:
            agree_std = crit.value is std.value
    return TruncatedResult(DualVerdict(crit, sa), r, A, std, agree_std)

