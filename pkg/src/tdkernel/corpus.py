"""Seeded families of random kernel specs for randomized suites."""

import numpy as np

from .spec import KernelSpec

DEFAULT_SEED = 20240617


def _complex(rng, lo, hi, size):
    """Complex numbers with modulus in [lo, hi] and uniform phase."""
    r = rng.uniform(lo, hi, size)
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, size))


def _a_prefix(rng, P):
    return _complex(rng, 0.5, 2.0, P)


def _rho(rng):
    return complex(_complex(rng, 0.6, 1.1, 1)[0])


def generic_spec(rng, max_len=6):
    P = int(rng.integers(1, max_len + 1))
    a = _a_prefix(rng, P)
    b = _complex(rng, 0.05, 0.8, P) * np.abs(a)
    return KernelSpec(tuple(a), tuple(b), _rho(rng))


def b0_zero_spec(rng, max_len=6):
    s = generic_spec(rng, max_len)
    b = (0j,) + s.b_prefix[1 : s.prefix_len]
    return KernelSpec(s.a_prefix[: s.prefix_len], b, s.rho)


def diagonal_spec(rng, max_len=8):
    P = int(rng.integers(1, max_len + 1))
    return KernelSpec(tuple(_a_prefix(rng, P)), (), _rho(rng))


def constant_weight_spec(rng):
    """a_n = a_0 rho^n: weights |a_n/a_{n+1}| all equal 1/|rho|."""
    return KernelSpec((complex(_complex(rng, 0.5, 2.0, 1)[0]),), (), _rho(rng))


def truncated_spec(rng, r=None, degenerate=False):
    """b_0 = b_1 = 0, b_2..b_r random with |b_i| < 1/2 (zero when degenerate)."""
    r = int(rng.integers(2, 6)) if r is None else r
    P = r + 1 + int(rng.integers(0, 3))
    a = _a_prefix(rng, P)
    b = np.zeros(r + 1, dtype=complex)
    if not degenerate:
        b[2:] = _complex(rng, 0.05, 0.5, r - 1)
    return KernelSpec(tuple(a), tuple(b), _rho(rng))


_MIX = (
    ("generic", generic_spec, 40),
    ("b0_zero", b0_zero_spec, 20),
    ("diagonal", diagonal_spec, 20),
    ("constant_weight", constant_weight_spec, 10),
    ("truncated", truncated_spec, 10),
)


def spec_corpus(n=100, seed=DEFAULT_SEED):
    """``n`` (family, spec) pairs mixing the families in fixed proportions."""
    rng = np.random.default_rng(seed)
    total = sum(k for _, _, k in _MIX)
    out = []
    for name, make, k in _MIX:
        count = round(n * k / total)
        out.extend((name, make(rng)) for _ in range(count))
    while len(out) < n:
        out.append(("generic", generic_spec(rng)))
    return out[:n]


def truncated_corpus(n=50, seed=DEFAULT_SEED + 1, degenerate_every=5):
    """Truncated specs of order 2..5; every ``degenerate_every``-th has b = 0."""
    rng = np.random.default_rng(seed)
    return [truncated_spec(rng, degenerate=(i % degenerate_every == 0)) for i in range(n)]


def diagonal_corpus(n=20, seed=DEFAULT_SEED + 2, positive=True):
    """Diagonal specs; with ``positive`` the a_n are real and positive."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        P = int(rng.integers(2, 9))
        a = rng.uniform(0.5, 2.0, P)
        if not positive:
            a = a * np.exp(2j * np.pi * rng.uniform(0, 1, P))
        out.append(KernelSpec(tuple(a), (), float(rng.uniform(0.6, 1.1))))
    return out
