"""JSON helpers: complex scalars travel as ``[re, im]`` pairs."""

import numbers

import numpy as np


def complex_from_json(value):
    """Accept a bare real number or a ``[re, im]`` pair."""
    if isinstance(value, bool):
        raise TypeError(f"expected a number or [re, im] pair, got {value!r}")
    if isinstance(value, numbers.Real):
        return complex(float(value), 0.0)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        re, im = value
        if all(isinstance(v, numbers.Real) and not isinstance(v, bool) for v in (re, im)):
            return complex(float(re), float(im))
    raise TypeError(f"expected a number or [re, im] pair, got {value!r}")


def complex_to_json(z):
    z = complex(z)
    return [z.real, z.imag]


def scalar_to_json(z, atol=1e-14):
    """Plain float when the imaginary part is negligible, otherwise a pair."""
    z = complex(z)
    if abs(z.imag) <= atol:
        return z.real
    return [z.real, z.imag]


def vector_to_json(v):
    return [complex_to_json(x) for x in np.asarray(v).ravel()]


def matrix_to_json(a):
    a = np.asarray(a)
    return [[complex_to_json(x) for x in row] for row in a]


def matrix_from_json(rows):
    return np.array([[complex_from_json(x) for x in row] for row in rows], dtype=complex)
