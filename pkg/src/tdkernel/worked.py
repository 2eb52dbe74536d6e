"""The three worked examples, regenerated and checked.

Each report lists the computed quantities next to their expected values.
"""

from dataclasses import dataclass, field

import numpy as np

from .aluthge import aluthge_data, shimorin_aluthge_coeffs, standard_aluthge_coeffs
from .serialize import matrix_to_json, scalar_to_json
from .shimorin import shimorin_coeffs, shimorin_tridiagonal_verdict
from .spec import KernelSpec
from .windows import left_inverse_window, modulus_inv_sq_window, modulus_window, mz_window

SEC4_SPEC = KernelSpec((1,), (0.5,))
SEC9_SPEC = KernelSpec((1,), (1, 1))


@dataclass(frozen=True)
class Check:
    name: str
    value: object
    expected: object
    tol: float

    @property
    def ok(self):
        return bool(np.max(np.abs(np.asarray(self.value) - np.asarray(self.expected))) <= self.tol)

    def to_json(self):
        conv = lambda v: matrix_to_json(v) if np.ndim(v) == 2 else (
            [scalar_to_json(x) for x in v] if np.ndim(v) == 1 else scalar_to_json(v))
        return {"name": self.name, "value": conv(self.value), "expected": conv(self.expected),
                "tol": self.tol, "ok": self.ok}


@dataclass
class ExampleReport:
    name: str
    spec: KernelSpec
    checks: list = field(default_factory=list)
    values: dict = field(default_factory=dict)

    def check(self, name, value, expected, tol):
        self.checks.append(Check(name, value, expected, tol))

    def flag(self, name, ok):
        self.checks.append(Check(name, float(bool(ok)), 1.0, 0.0))

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def to_json(self):
        return {"name": self.name, "spec": self.spec.to_json(), **self.values,
                "checks": [c.to_json() for c in self.checks], "ok": self.ok}


def sec4():
    s = SEC4_SPEC
    rep = ExampleReport("sec4", s)
    rep.check("Mz_window", mz_window(s, 4).entries,
              [[0, 0, 0, 0], [1, 0, 0, 0], [0.5, 1, 0, 0], [0, 0, 1, 0]], 1e-14)
    rep.check("L_window", left_inverse_window(s, 4).entries,
              [[0, 1, 0, 0], [0, -0.5, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]], 1e-14)
    table = shimorin_coeffs(s, 4)
    dual, _ = shimorin_tridiagonal_verdict(s)
    x13 = table[1, 3]
    rep.check("X_13", x13, 0.25, 1e-12)
    w = dual.numeric.witness
    rep.flag("not_tridiagonal", dual.value.value == "false" and dual.agree)
    rep.flag("witness_1_3", w is not None and (w.m, w.n) == (1, 3))
    rep.values.update({"X_13": scalar_to_json(x13), "verdict": dual.to_json()})
    return rep


def sec5():
    s = SEC4_SPEC
    rep = ExampleReport("sec5", s)
    G = modulus_inv_sq_window(s, 4).entries
    rep.check("ModInvSq_block", G[:2, :2], [[1, -0.5], [-0.5, 1.25]], 1e-12)
    R = modulus_window(s, -1, 4).entries
    al, be, ga = R[0, 0].real, R[0, 1].real, R[1, 1].real
    K = standard_aluthge_coeffs(s, 6)
    rep.check("alpha_00", K[0, 0], al, 1e-10)
    rep.check("alpha_01", K[0, 1], al / 2 + be, 1e-10)
    rep.check("alpha_10", K[1, 0], al / 2 + be, 1e-10)
    rep.check("alpha_11", K[1, 1], al / 4 + be + ga, 1e-10)
    rep.check("alpha_nn", np.diag(K.X)[2:], np.ones(K.max_index - 1), 1e-10)
    verdict = K.tridiagonal_verdict()
    rep.flag("alpha_half_plus_beta_nonzero", abs(al / 2 + be) > 1e-6)
    rep.flag("standard_tridiagonal", verdict.holds)
    rep.values.update({
        "sqrt_block": {"alpha": al, "beta": be, "gamma": ga},
        "alpha_half_plus_beta": al / 2 + be,
        "table": K.to_json(verdict),
    })
    return rep


def sec9():
    s = SEC9_SPEC
    rep = ExampleReport("sec9", s)
    rep.check("L_window", left_inverse_window(s, 4).entries,
              [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1], [0, 0, 0, 0]], 1e-14)
    G = modulus_inv_sq_window(s, 4).entries
    rep.check("ModInvSq", G, [[1, 0, 0, 0], [0, 1, -1, 0], [0, -1, 2, 0], [0, 0, 0, 1]], 1e-12)
    R = modulus_window(s, -1, 4).entries
    r5 = np.sqrt(5.0)
    b = R[1, 2]
    rep.check("ModInv_block", R[1:3, 1:3], np.array([[2, -1], [-1, 3]]) / r5, 1e-10)
    rep.check("corner_b", b, -1 / r5, 1e-10)
    data = aluthge_data(s, 16)
    rep.check("F_vector", data.F_vector, np.zeros(16), 1e-12)
    sa = shimorin_aluthge_coeffs(s, 6)
    std = standard_aluthge_coeffs(s, 6)
    sa_v, std_v = sa.tridiagonal_verdict(), std.tridiagonal_verdict()
    rep.check("abs_tilde_X_13", abs(sa[1, 3]), 1 / r5, 1e-9)
    rep.flag("shimorin_aluthge_not_tridiagonal", sa_v.value.value == "false")
    rep.flag("standard_tridiagonal", std_v.holds)
    rep.values.update({
        "b": scalar_to_json(b),
        "tilde_X_13": scalar_to_json(sa[1, 3]),
        "abs_tilde_X_13": abs(sa[1, 3]),
        "shimorin_aluthge": sa_v.to_json(),
        "standard": std_v.to_json(),
    })
    return rep


EXAMPLES = {"sec4": sec4, "sec5": sec5, "sec9": sec9}
