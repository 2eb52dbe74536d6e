import numpy as np
import pytest
from hypothesis import given

from tdkernel import KernelSpec, Outcome, mz_window, shimorin_coeffs, shimorin_tridiagonal_verdict
from tdkernel.shimorin import CoefficientTable, analytic_model_coeffs, is_weighted_shift

from conftest import specs


def test_unit_spec_table_is_identity(unit_spec):
    np.testing.assert_allclose(shimorin_coeffs(unit_spec, 6).X, np.eye(7), atol=1e-15)


def test_sec4_x13(sec4_spec):
    X = shimorin_coeffs(sec4_spec, 6).X
    assert X[1, 3] == pytest.approx(0.25, abs=1e-14)
    assert X[3, 1] == pytest.approx(0.25, abs=1e-14)


def test_sec4_verdict(sec4_spec):
    dual, table = shimorin_tridiagonal_verdict(sec4_spec, 6)
    assert dual.value is Outcome.FALSE
    assert dual.agree
    w = dual.numeric.witness
    assert (w.m, w.n) == (1, 3)
    assert w.magnitude == pytest.approx(0.25)


def test_table_enlarged_past_prefix():
    s = KernelSpec((1, 1, 1, 1, 1), (0.3, 0, 0, 0, 0.2))
    _, table = shimorin_tridiagonal_verdict(s, 2)
    assert table.max_index >= s.prefix_len + 2


@given(specs())
def test_table_hermitian_and_normalised(spec):
    X = shimorin_coeffs(spec, 6).X
    assert np.abs(X - X.conj().T).max() <= 1e-12 * max(1, np.abs(X).max())
    assert X[0, 0] == 1
    assert np.all(X[0, 1:] == 0) and np.all(X[1:, 0] == 0)


@given(specs())
def test_table_is_gram_matrix(spec):
    X = shimorin_coeffs(spec, 5).X
    assert np.linalg.eigvalsh(X).min() > -1e-12 * np.abs(X).max()


@given(specs())
def test_criterion_agrees_with_table(spec):
    dual, _ = shimorin_tridiagonal_verdict(spec, 6)
    assert dual.criterion.decided and dual.numeric.decided
    assert dual.agree


@given(specs(b0_zero=True))
def test_b0_zero_is_tridiagonal(spec):
    dual, _ = shimorin_tridiagonal_verdict(spec, 6)
    assert dual.value is Outcome.TRUE


@given(specs())
def test_window_doubling_is_stable(spec):
    X = shimorin_coeffs(spec, 6).X
    X2 = shimorin_coeffs(spec, 6, N=2 * (2 * 6 + spec.b_support + 2)).X
    assert np.abs(X - X2).max() <= 1e-12 * max(1, np.abs(X).max())


def test_window_too_small(sec4_spec):
    with pytest.raises(ValueError):
        shimorin_coeffs(sec4_spec, 6, N=4)


def test_weighted_shift_examples(sec4_spec, unit_spec):
    v = is_weighted_shift(sec4_spec)
    assert v.value is Outcome.FALSE and v.witness.n == 1
    assert is_weighted_shift(KernelSpec((1,), (1,))).value is Outcome.FALSE
    assert is_weighted_shift(unit_spec).holds
    assert is_weighted_shift(KernelSpec((1, 2, 3), ())).holds


def test_diagonal_table():
    # a_n = 1/(n+1) on a prefix, continued by the ratio tail
    P = 6
    a = tuple(1 / (n + 1) for n in range(P))
    s = KernelSpec(a, (), rho=a[-1] / a[-2])
    X = shimorin_coeffs(s, 8).X
    expected = [abs(s.a(n) / s.a(0)) ** 2 for n in range(9)]
    np.testing.assert_allclose(np.diag(X).real, expected, rtol=1e-13)
    np.testing.assert_allclose(X - np.diag(np.diag(X)), 0, atol=1e-15)
    np.testing.assert_allclose(np.diag(X)[:P].real, [1 / (n + 1) ** 2 for n in range(P)], rtol=1e-13)


def test_table_json(sec4_spec):
    table = shimorin_coeffs(sec4_spec, 3)
    out = table.to_json(table.tridiagonal_verdict())
    assert out["M"] == 3 and out["basis"] == "wandering"
    assert out["X"][1][3] == [0.25, 0.0]
    assert out["verdict"]["value"] == "false"
    assert out["verdict"]["witness"] == {"m": 1, "n": 3, "magnitude": 0.25}


def test_table_verdict_indeterminate_band():
    X = np.eye(4, dtype=complex)
    X[0, 2] = X[2, 0] = 3e-10
    assert CoefficientTable(X).tridiagonal_verdict().value is Outcome.INDETERMINATE
    X[0, 2] = X[2, 0] = 5e-11
    assert CoefficientTable(X).tridiagonal_verdict().holds


def test_model_coeffs_examples(unit_spec, sec4_spec):
    np.testing.assert_allclose(analytic_model_coeffs(sec4_spec, [1, 0, 0], 4), [1, 0, 0, 0, 0])
    np.testing.assert_allclose(analytic_model_coeffs(unit_spec, [0, 0, 1], 4), [0, 0, 1, 0, 0])


@given(specs())
def test_model_of_shift_is_multiplication(spec):
    # the model intertwines M_z with multiplication by z
    rng = np.random.default_rng(0)
    h = rng.normal(size=5) + 1j * rng.normal(size=5)
    W = len(h) + spec.pad + 1
    zh = mz_window(spec, W).entries @ np.pad(h, (0, W - len(h)))
    c, cz = analytic_model_coeffs(spec, h, 6), analytic_model_coeffs(spec, zh, 7)
    scale = max(1, np.abs(c).max())
    assert abs(cz[0]) <= 1e-12 * scale
    np.testing.assert_allclose(cz[1:], c, rtol=0, atol=1e-11 * scale)
