"""Shared numerical oracles for the test suite.

Everything here recomputes library quantities by an independent route:
brute-force compensated summation for series, central finite differences
for derivatives, and a 2x2 real determinant for the Jacobian.  Tests
compare library output against these, never against the library itself.
"""

import math

import numpy as np
import pytest

from harmradius import CoefficientSeq


FD_STEP = 1e-6


def brute_weighted_sum(seq: CoefficientSeq, r: float, extra_terms: int = 0) -> float:
    """|b1| + sum n(|a_n| + |b_n|) r^(n-1) by direct compensated summation."""
    terms = [abs(seq.b1)]
    for n in sorted(set(seq.a) | set(seq.b)):
        if n == 1:
            continue
        combined = abs(seq.a.get(n, 0j)) + abs(seq.b.get(n, 0j))
        terms.append(n * combined * r ** (n - 1))
    return math.fsum(terms)


def fd_wirtinger(f, z: complex, h: float = FD_STEP):
    """(f_z, f_zbar) from central differences along both axes."""
    fx = (f(z + h) - f(z - h)) / (2 * h)
    fy = (f(z + 1j * h) - f(z - 1j * h)) / (2 * h)
    return (fx - 1j * fy) / 2, (fx + 1j * fy) / 2


def fd_jacobian(f, z: complex, h: float = FD_STEP) -> float:
    """det of the real 2x2 derivative matrix from central differences."""
    fx = (f(z + h) - f(z - h)) / (2 * h)
    fy = (f(z + 1j * h) - f(z - 1j * h)) / (2 * h)
    return fx.real * fy.imag - fy.real * fx.imag


def random_accepted_sequences(count: int, rng=None, max_index: int = 40):
    """Sequences with b1 = 0 passing the weighted-sum condition at beta=0.

    Coefficients are drawn at random indices and rescaled so the full sum
    S(1-) lands strictly below 1.
    """
    rng = rng or np.random.default_rng(20260814)
    out = []
    for _ in range(count):
        k = int(rng.integers(1, 7))
        idx = rng.choice(np.arange(2, max_index + 1), size=k, replace=False)
        a, b = {}, {}
        raw = []
        for n in idx:
            val = complex(rng.normal(), rng.normal())
            tgt = a if rng.random() < 0.6 else b
            tgt[int(n)] = val
            raw.append(int(n) * abs(val))
        total = math.fsum(raw)
        level = rng.uniform(0.3, 0.995)
        scalefac = level / total
        a = {n: v * scalefac for n, v in a.items()}
        b = {n: v * scalefac for n, v in b.items()}
        out.append(CoefficientSeq(a, b, max_index))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(8251412)
