import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tdkernel import KernelSpec

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def unit_spec():
    return KernelSpec((1,), ())


@pytest.fixture
def sec4_spec():
    return KernelSpec((1,), (0.5,))


@pytest.fixture
def sec9_spec():
    return KernelSpec((1,), (1, 1))


@pytest.fixture
def trunc_spec():
    # a = 1, b_2 = 1, all other b zero
    return KernelSpec((1,), (0, 0, 1))


def _cplx(lo, hi):
    return st.tuples(
        st.floats(lo, hi), st.floats(0, 2 * np.pi)
    ).map(lambda t: complex(t[0] * np.exp(1j * t[1])))


a_entry = _cplx(0.5, 2.0)
b_entry = st.one_of(st.just(0j), _cplx(0.05, 0.8))
rho_st = _cplx(0.6, 1.1)


@st.composite
def specs(draw, max_len=5, b0_zero=False, diagonal=False):
    P = draw(st.integers(1, max_len))
    a = draw(st.lists(a_entry, min_size=P, max_size=P))
    if diagonal:
        b = []
    else:
        b = draw(st.lists(b_entry, min_size=P, max_size=P))
        if b0_zero:
            b[0] = 0j
    return KernelSpec(tuple(a), tuple(b), draw(rho_st))


@st.composite
def truncated_specs(draw, max_r=5):
    r = draw(st.integers(2, max_r))
    P = r + 1 + draw(st.integers(0, 2))
    a = draw(st.lists(a_entry, min_size=P, max_size=P))
    b = [0j, 0j] + draw(st.lists(b_entry, min_size=r - 1, max_size=r - 1))
    return KernelSpec(tuple(a), tuple(b), draw(rho_st))


@st.composite
def hermitian_pd(draw, max_dim=6, max_cond=1e6):
    n = draw(st.integers(1, max_dim))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    Q, _ = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    logc = draw(st.floats(0, np.log10(max_cond)))
    lam = np.logspace(0, logc, n)
    return (Q * lam) @ Q.conj().T
