"""Tridiagonal kernel specifications.

A kernel is described by the orthonormal basis ``f_n(z) = (a_n + b_n z) z^n``
of its reproducing kernel Hilbert space. The sequences are stored as a finite
prefix ``a_0..a_{P-1}``, ``b_0..b_{P-1}`` followed by a tail in which ``a``
continues geometrically with ratio ``rho`` and ``b`` vanishes.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DivergenceWarning, NonzeroViolation
from .serialize import complex_from_json, complex_to_json

RTOL = 1e-10
ATOL = 1e-14


def is_zero(x, scale=1.0, rtol=RTOL, atol=ATOL):
    return abs(x) <= max(atol, rtol * abs(scale))


@dataclass(frozen=True)
class KernelSpec:
    a_prefix: tuple
    b_prefix: tuple
    rho: complex = 1.0 + 0.0j

    def __post_init__(self):
        a = tuple(complex(x) for x in self.a_prefix)
        b = tuple(complex(x) for x in self.b_prefix)
        if not a:
            raise NonzeroViolation("a_prefix must contain at least a_0")
        # a and b share one prefix length; missing a entries follow the tail rule
        P = max(len(a), len(b))
        rho = complex(self.rho)
        if rho == 0:
            raise NonzeroViolation("tail ratio rho must be nonzero")
        while len(a) < P:
            a = a + (a[-1] * rho,)
        b = b + (0j,) * (P - len(b))
        for n, x in enumerate(a):
            if x == 0 or not np.isfinite(x):
                raise NonzeroViolation(f"a_{n} = {x} violates the standing assumption a_n != 0")
        for n, x in enumerate(b):
            if not np.isfinite(x):
                raise ValueError(f"b_{n} = {x} is not finite")
        object.__setattr__(self, "a_prefix", a)
        object.__setattr__(self, "b_prefix", b)
        object.__setattr__(self, "rho", rho)

    @classmethod
    def from_sequences(cls, a, b=(), rho=1.0):
        return cls(tuple(a), tuple(b), rho)

    @property
    def prefix_len(self):
        return len(self.a_prefix)

    @property
    def b_support(self):
        """One past the last nonzero b index (0 when b vanishes identically)."""
        nz = [n for n, x in enumerate(self.b_prefix) if x != 0]
        return nz[-1] + 1 if nz else 0

    @property
    def pad(self):
        """Rows/columns beyond which closed-form column supports never reach."""
        return self.b_support + 2

    def a(self, n):
        if n < 0:
            raise IndexError(n)
        P = self.prefix_len
        if n < P:
            return self.a_prefix[n]
        return self.a_prefix[-1] * self.rho ** (n - P + 1)

    def b(self, n):
        if n < 0:
            raise IndexError(n)
        if n < self.prefix_len:
            return self.b_prefix[n]
        return 0j

    def a_array(self, N):
        return np.array([self.a(n) for n in range(N)], dtype=complex)

    def b_array(self, N):
        return np.array([self.b(n) for n in range(N)], dtype=complex)

    def is_truncated(self):
        """b_0 = b_1 = 0 (b_n = 0 beyond the prefix holds by construction)."""
        return self.b(0) == 0 and self.b(1) == 0

    # -- JSON ---------------------------------------------------------------
    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "a" not in data:
            raise ValueError("kernel spec JSON needs an object with an 'a' array")
        a = [complex_from_json(x) for x in data["a"]]
        b = [complex_from_json(x) for x in data.get("b", [])]
        tail = data.get("tail") or {}
        rho = complex_from_json(tail.get("rho", 1.0))
        return cls(tuple(a), tuple(b), rho)

    def to_json(self):
        return {
            "a": [complex_to_json(x) for x in self.a_prefix],
            "b": [complex_to_json(x) for x in self.b_prefix],
            "tail": {"rho": complex_to_json(self.rho)},
        }


@dataclass(frozen=True)
class ValidationReport:
    nonzero: bool
    sup_ratio: float
    limsup_ratio: float
    prefix_b_ratio: float
    epsilon: float
    semi_analytic: bool
    analytic: bool
    assumptions: tuple = field(default=(
        "C[z] is contained in H_k (taken as given, not re-verified)",
    ))

    def to_json(self):
        return {
            "nonzero": self.nonzero,
            "sup_ratio": self.sup_ratio,
            "limsup_ratio": self.limsup_ratio,
            "prefix_b_ratio": self.prefix_b_ratio,
            "epsilon": self.epsilon,
            "semi_analytic": self.semi_analytic,
            "analytic": self.analytic,
            "assumptions": list(self.assumptions),
        }


def validate_spec(spec):
    """Evaluate the standing boundedness conditions over prefix and tail.

    ``sup |a_n/a_{n+1}|`` and ``inf |a_n/a_{n+1}|`` are finite checks because
    the tail ratio is the constant ``1/|rho|``. Under the zero-b tail the
    limsup of ``|b_n/a_{n+1}|`` is 0; the prefix maximum is recorded only.
    """
    P = spec.prefix_len
    ratios = [abs(spec.a(n) / spec.a(n + 1)) for n in range(P)]
    ratios.append(1.0 / abs(spec.rho))
    b_ratios = [abs(spec.b(n) / spec.a(n + 1)) for n in range(P)]
    sup_ratio = max(ratios)
    epsilon = min(ratios)
    limsup_ratio = 0.0
    semi = math.isfinite(sup_ratio) and limsup_ratio < 1
    analytic = semi and epsilon > ATOL
    return ValidationReport(
        nonzero=True,
        sup_ratio=sup_ratio,
        limsup_ratio=limsup_ratio,
        prefix_b_ratio=max(b_ratios),
        epsilon=epsilon,
        semi_analytic=semi,
        analytic=analytic,
    )


def basis_eval(spec, n, z):
    """f_n(z) = (a_n + b_n z) z^n."""
    if n < 0:
        raise ValueError("basis index must be nonnegative")
    z = complex(z)
    return (spec.a(n) + spec.b(n) * z) * z**n


@dataclass(frozen=True)
class KernelValue:
    value: complex
    tail_bound: float
    terms: int


def _tail_bound(spec, N, z, w):
    az, aw = abs(z), abs(w)
    P = spec.prefix_len
    explicit = sum(abs(basis_eval(spec, n, z)) * abs(basis_eval(spec, n, w)) for n in range(N, P))
    K = max(N, P)
    first = abs(spec.a(K)) ** 2 * (az * aw) ** K
    if first == 0:
        return explicit
    q = abs(spec.rho) ** 2 * az * aw
    if q >= 1:
        return math.inf
    return explicit + first / (1 - q)


def kernel_eval(spec, z, w, N):
    """Partial sum of k(z, w) = sum_n f_n(z) conj(f_n(w)) with a tail bound.

    The bound is the exact sum of ``|f_n(z)||f_n(w)|`` over the omitted
    indices, so it decreases with ``N`` and dominates ``|k - S_N|``.
    """
    z, w = complex(z), complex(w)
    if abs(z) >= 1 or abs(w) >= 1:
        raise ValueError("kernel points must lie in the open unit disc")
    if N < 1:
        raise ValueError("N must be at least 1")
    if abs(spec.rho) ** 2 * abs(z) * abs(w) >= 1 and z * w != 0:
        warnings.warn(
            f"|rho|^2 |z||w| >= 1: the geometric tail does not decay at z={z}, w={w}",
            DivergenceWarning,
            stacklevel=2,
        )
    value = sum(basis_eval(spec, n, z) * np.conj(basis_eval(spec, n, w)) for n in range(N))
    return KernelValue(complex(value), _tail_bound(spec, N, z, w), N)


def monomial_coeffs(spec, n, M):
    """Coefficients of z^n in the f-basis, indexed by basis position 0..M-1.

    Entry ``n + m`` is ``(1/a_n)(-1)^m prod_{j<m} b_{n+j} / prod_{j<m} a_{n+j+1}``;
    entries below ``n`` are zero. Truncating after index ``K`` leaves the
    single remainder ``coeff_K * b_K * z^{K+1}``.
    """
    if M < 1:
        raise ValueError("M must be at least 1")
    out = np.zeros(M, dtype=complex)
    if n >= M:
        return out
    coeff = 1.0 / spec.a(n)
    out[n] = coeff
    for m in range(1, M - n):
        coeff = -coeff * spec.b(n + m - 1) / spec.a(n + m)
        if coeff == 0:
            break
        out[n + m] = coeff
    return out


class DerivedSequences:
    """The auxiliary sequences c_n, d_n, d_n^(p), beta_n, beta_n^(p)."""

    def __init__(self, spec):
        self.spec = spec

    def ratio(self, n):
        return self.spec.b(n) / self.spec.a(n)

    def c(self, n):
        s = self.spec
        return (s.a(n) / s.a(n + 2)) * (self.ratio(n) - self.ratio(n + 1))

    def d(self, n):
        if n < 1:
            raise ValueError("d_n is defined for n >= 1")
        return self.ratio(n) - self.ratio(n - 1)

    def d_p(self, n, p):
        if not (p >= 1 and n >= p):
            raise ValueError("d_n^(p) is defined for n >= p >= 1")
        s = self.spec
        return s.b(n) - (s.a(n) / s.a(n - p)) * s.b(n - p)

    def beta(self, n):
        if n < 1:
            raise ValueError("beta_n is defined for n >= 1")
        return self.ratio(n) - self.ratio(0)

    def beta_p(self, n, p):
        if not 1 <= n <= p - 1:
            raise ValueError("beta_n^(p) is defined for 1 <= n <= p-1")
        s = self.spec
        q = -s.b(0) / s.a(0)
        k = p - n - 1
        # zero-power convention: (-b_0/a_0)^0 = 1 even when b_0 = 0
        factor = 1.0 if k == 0 else q**k
        return s.a(n) * factor * self.beta(n)

    def c_array(self, N):
        return np.array([self.c(n) for n in range(N)], dtype=complex)

    def d_array(self, N):
        return np.array([0j] + [self.d(n) for n in range(1, N)], dtype=complex)


def derived_sequences(spec):
    return DerivedSequences(spec)
