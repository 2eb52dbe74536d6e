import json
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tdkernel import (
    DivergenceWarning,
    KernelSpec,
    NonzeroViolation,
    basis_eval,
    derived_sequences,
    kernel_eval,
    monomial_coeffs,
    validate_spec,
)

from conftest import specs


def test_tail_rule_extends_a_and_zeroes_b():
    s = KernelSpec((1, 2), (0.5,), rho=0.5)
    assert s.prefix_len == 2
    assert s.a(2) == 1.0 and s.a(3) == 0.5
    assert s.b(1) == 0 and s.b(7) == 0
    assert s.b_support == 1


def test_short_a_prefix_follows_tail():
    s = KernelSpec((2,), (0, 0, 1), rho=0.5)
    assert s.a_prefix == (2, 1, 0.5)


@pytest.mark.parametrize("a,rho", [((1, 0), 1), ((1,), 0), ((0,), 1)])
def test_zero_a_is_a_hard_error(a, rho):
    with pytest.raises(NonzeroViolation):
        KernelSpec(a, (), rho)


def test_json_round_trip():
    s = KernelSpec((1, 1j), (0.5, 0), rho=0.9 - 0.1j)
    again = KernelSpec.from_json(json.loads(json.dumps(s.to_json())))
    assert again == s


def test_json_shorthand_reals():
    s = KernelSpec.from_json({"a": [1, [2, 0]], "b": [0.5], "tail": {"rho": 0.5}})
    assert s.a(1) == 2 and s.b(0) == 0.5 and s.rho == 0.5


@pytest.mark.parametrize("bad", [[], {"b": [1]}, {"a": ["x"]}, {"a": [[1, 2, 3]]}, {"a": [True]}])
def test_json_rejects_garbage(bad):
    with pytest.raises((ValueError, TypeError)):
        KernelSpec.from_json(bad)


def test_validate_unit_shift(unit_spec):
    rep = validate_spec(unit_spec)
    assert rep.semi_analytic and rep.analytic
    assert rep.epsilon == 1.0 and rep.sup_ratio == 1.0
    assert rep.to_json()["analytic"] is True


def test_validate_sec4(sec4_spec):
    assert validate_spec(sec4_spec).analytic


def test_validate_records_assumption(unit_spec):
    assert any("C[z]" in a for a in validate_spec(unit_spec).assumptions)


def test_basis_eval_examples(unit_spec, sec4_spec):
    assert basis_eval(unit_spec, 3, 0.5) == pytest.approx(0.125)
    assert basis_eval(sec4_spec, 0, 1j) == pytest.approx(1 + 0.5j)
    assert basis_eval(sec4_spec, 0, 0) == 1


def test_kernel_eval_examples(unit_spec, sec4_spec):
    assert kernel_eval(unit_spec, 0, 0, 5).value == 1
    v = kernel_eval(unit_spec, 0.5, 0.5, 80)
    assert v.value == pytest.approx(4 / 3, abs=1e-14)
    assert kernel_eval(sec4_spec, 0, 0, 3).value == 1


def test_kernel_eval_outside_disc():
    with pytest.raises(ValueError):
        kernel_eval(KernelSpec((1,), ()), 1.0, 0, 4)


def test_kernel_eval_divergence_warning():
    s = KernelSpec((1,), (), rho=1.5)
    with pytest.warns(DivergenceWarning):
        kernel_eval(s, 0.9, 0.9, 10)


@given(specs(), st.integers(1, 30))
def test_kernel_tail_bound_is_cauchy(spec, N):
    z, w = 0.4 + 0.1j, -0.3j
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DivergenceWarning)
        lo, hi = kernel_eval(spec, z, w, N), kernel_eval(spec, z, w, 2 * N)
    assert abs(hi.value - lo.value) <= lo.tail_bound * (1 + 1e-12) + 1e-15
    assert hi.tail_bound <= lo.tail_bound + 1e-15


def test_monomial_coeffs_examples(sec4_spec, sec9_spec):
    np.testing.assert_allclose(monomial_coeffs(sec4_spec, 0, 4), [1, -0.5, 0, 0])
    np.testing.assert_allclose(monomial_coeffs(sec9_spec, 0, 5), [1, -1, 1, 0, 0])
    np.testing.assert_allclose(monomial_coeffs(KernelSpec((2,), ()), 2, 4), [0, 0, 0.5, 0])


@given(specs(), st.integers(0, 6))
def test_monomial_reconstruction(spec, n):
    M = n + spec.prefix_len + 3
    coeffs = monomial_coeffs(spec, n, M)
    rng = np.random.default_rng(n)
    pts = 0.9 * np.sqrt(rng.uniform(0, 1, 16)) * np.exp(2j * np.pi * rng.uniform(0, 1, 16))
    for z in pts:
        # the expansion terminates once a b-product hits the zero tail
        val = sum(c * basis_eval(spec, k, z) for k, c in enumerate(coeffs))
        assert abs(val - z**n) <= 1e-12 * max(1.0, abs(z**n))


def test_derived_examples(sec4_spec, sec9_spec, trunc_spec):
    d4 = derived_sequences(sec4_spec)
    assert d4.c(0) == 0.5 and d4.c(1) == 0 and d4.c(5) == 0
    assert d4.d(1) == -0.5
    d9 = derived_sequences(sec9_spec)
    assert d9.d(1) == 0 and d9.d(2) == -1 and d9.d(3) == 0
    assert derived_sequences(trunc_spec).beta_p(2, 3) == 1


@given(specs())
def test_c_equals_minus_ratio_times_d(spec):
    seq = derived_sequences(spec)
    for n in range(spec.prefix_len + 3):
        lhs = seq.c(n)
        rhs = -(spec.a(n) / spec.a(n + 2)) * seq.d(n + 1)
        assert abs(lhs - rhs) <= 1e-14 * max(1, abs(lhs))


@given(specs())
def test_constant_ratio_iff_c_vanishes(spec):
    seq = derived_sequences(spec)
    N = spec.prefix_len + 2
    all_c_zero = all(seq.c(n) == 0 for n in range(N + 1))
    r0 = seq.ratio(0)
    constant = all(seq.ratio(n) == r0 for n in range(N + 2))
    assert all_c_zero == constant


@given(specs())
def test_beta_p_vanishing_propagates(spec):
    seq = derived_sequences(spec)
    for n in range(1, spec.prefix_len + 2):
        zero_at = [p for p in range(n + 1, n + 6) if seq.beta_p(n, p) == 0]
        if zero_at:
            assert all(seq.beta_p(n, p) == 0 for p in range(zero_at[0], n + 6))
