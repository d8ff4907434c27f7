"""Independent numeric oracles: explicit complex matrices standing for basis elements."""

import itertools

import numpy as np

# filled by test_acceptance.py, printed in the terminal summary by conftest.py
ACCEPTANCE_LINES = []

OMEGA = np.exp(1j * np.pi / 4)
I2 = np.eye(2, dtype=complex)
# split quaternion units: A^2 = B^2 = I, C = AB = -BA, C^2 = -I
A = np.array([[1, 0], [0, -1]], dtype=complex)
B = np.array([[0, 1], [1, 0]], dtype=complex)
C = A @ B
# quaternion units
QI = np.array([[1j, 0], [0, -1j]])
QJ = np.array([[0, 1], [-1, 0]], dtype=complex)


def monomials(gens, powers):
    """x1^e1 ... xr^er for 0 <= e_i < m_i, in lexicographic exponent order."""
    n = gens[0].shape[0] if gens else 1
    out = []
    for exps in itertools.product(*(range(m) for m in powers)):
        M = np.eye(n, dtype=complex)
        for g, e in zip(gens, exps):
            M = M @ np.linalg.matrix_power(g, e)
        out.append(M)
    return out


def clock_shift(d):
    eps = np.exp(2j * np.pi / d)
    clock = np.diag([eps ** k for k in range(d)])
    shift = np.roll(np.eye(d, dtype=complex), -1, axis=0)  # e_j -> e_{j-1}
    return clock, shift


def pauli_matrices(R, h_orders):
    """Matrices of the real basis (X_g, i X_g) read off the degrees of R."""
    r = len(h_orders)
    blocks = [clock_shift(d) for d in h_orders]
    mats = []
    seen = set()
    for idx, g in enumerate(R.degrees):
        X = np.eye(1, dtype=complex)
        for f, (clock, shift) in enumerate(blocks):
            X = np.kron(X, np.linalg.matrix_power(clock, g[f]) @ np.linalg.matrix_power(shift, g[r + f]))
        mats.append(1j * X if g in seen else X)
        seen.add(g)
    return mats


def table_matches(R, mats, tol=1e-9):
    """True when every structure constant of R reproduces the matrix product of the images."""
    for i, j in itertools.product(range(R.dim), repeat=2):
        got = sum((c.to_complex() * mats[k] for k, c in R.table[i][j]), np.zeros_like(mats[0]))
        if np.abs(got - mats[i] @ mats[j]).max() > tol:
            return False
    flat = np.array([np.concatenate([m.real.ravel(), m.imag.ravel()]) for m in mats])
    return np.linalg.matrix_rank(flat) == R.dim
