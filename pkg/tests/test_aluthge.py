import numpy as np
import pytest
from hypothesis import given

from tdkernel import (
    KernelSpec,
    Outcome,
    UnstableTruncation,
    aluthge_data,
    induced_kernel_coeffs,
    modulus_window,
    rank_one_F,
    shimorin_aluthge_coeffs,
    standard_aluthge_coeffs,
)
from tdkernel import aluthge

from conftest import specs, truncated_specs


@given(specs())
def test_polar_and_tilde_invariants(spec):
    d = aluthge_data(spec, 12)
    assert d.isometry_defect() < 1e-9
    assert d.tilde_defect() < 1e-10
    assert d.doubling_deviation < 1e-10


@given(specs())
def test_similarity_and_left_inverse(spec):
    d = aluthge_data(spec, 12)
    assert d.similarity_defect() < 1e-10
    assert d.left_inverse_defect() < 1e-10


@given(specs())
def test_ltilde_is_left_inverse_of_tilde(spec):
    d = aluthge_data(spec, 14)
    k = d.interior - 1
    P = d.ltilde_window.entries @ d.tilde_window.entries
    assert np.abs(P[:k, :k] - np.eye(k)).max() < 1e-10


@given(truncated_specs())
def test_F_vanishes_for_truncated(spec):
    F = rank_one_F(spec, 16)
    assert np.abs(F).max() < 1e-12


def test_F_sec9_and_sec4(sec9_spec, sec4_spec):
    assert np.abs(rank_one_F(sec9_spec, 12)).max() < 1e-12
    assert np.abs(rank_one_F(sec4_spec, 12)).max() > 1e-3


def test_unit_spec_is_fixed(unit_spec):
    d = aluthge_data(unit_spec, 8)
    S = np.eye(8, k=-1)
    np.testing.assert_allclose(d.mod_window.entries, np.eye(8), atol=1e-14)
    np.testing.assert_allclose(d.partial_isometry.entries, S, atol=1e-14)
    np.testing.assert_allclose(d.tilde_window.entries, S, atol=1e-14)
    np.testing.assert_allclose(d.F_vector, 0, atol=1e-14)


def test_sec9_modulus_block(sec9_spec):
    d = aluthge_data(sec9_spec, 8)
    np.testing.assert_allclose(d.mod_inv.entries[1:3, 1:3],
                               np.array([[2, -1], [-1, 3]]) / np.sqrt(5), atol=1e-12)
    np.testing.assert_allclose(d.mod_window.entries[1:3, 1:3],
                               np.array([[3, 1], [1, 2]]) / np.sqrt(5), atol=1e-12)


@given(specs(diagonal=True))
def test_weighted_shift_closure(spec):
    d = aluthge_data(spec, 10)
    T = d.tilde_window.entries
    alpha = [abs(spec.a(n) / spec.a(n + 1)) for n in range(10)]
    expected = [np.sqrt(alpha[n] * alpha[n + 1]) for n in range(9)]
    np.testing.assert_allclose(np.abs(np.diag(T, -1)), expected, rtol=1e-10)
    np.testing.assert_allclose(T - np.diag(np.diag(T, -1), -1), 0, atol=1e-12)


def test_sec9_shimorin_aluthge(sec9_spec):
    table = shimorin_aluthge_coeffs(sec9_spec, 6)
    assert abs(table[1, 3]) == pytest.approx(1 / np.sqrt(5), abs=1e-9)
    assert table.tridiagonal_verdict().value is Outcome.FALSE


def test_standard_tables(sec4_spec, sec9_spec):
    for s in (sec4_spec, sec9_spec):
        t = standard_aluthge_coeffs(s, 6)
        assert t.basis == "monomial"
        assert t.tridiagonal_verdict().holds


@given(specs())
def test_sa_table_hermitian_unit_corner(spec):
    X = shimorin_aluthge_coeffs(spec, 5).X
    assert X[0, 0] == pytest.approx(1, abs=1e-12)
    assert np.abs(X - X.conj().T).max() < 1e-12 * max(1, np.abs(X).max())


def test_induced_coeffs_identity(unit_spec):
    np.testing.assert_allclose(induced_kernel_coeffs(np.eye(5), unit_spec), np.eye(5))


def test_induced_coeffs_accepts_window(sec4_spec):
    P = modulus_window(sec4_spec, -1, 5)
    np.testing.assert_array_equal(induced_kernel_coeffs(P, sec4_spec),
                                  induced_kernel_coeffs(P.entries, sec4_spec))


def test_unstable_truncation(monkeypatch, sec4_spec):
    calls = iter([np.eye(3), 2 * np.eye(3)])
    monkeypatch.setattr(aluthge, "_sa_table", lambda spec, M, N: next(calls))
    with pytest.raises(UnstableTruncation):
        shimorin_aluthge_coeffs(sec4_spec, 2)
