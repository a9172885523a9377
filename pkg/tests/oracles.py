"""Dense brute-force constructions used only as test oracles.

These materialize the lifted matrices that the production path deliberately
avoids; they are only feasible for tiny L.
"""

import numpy as np

from qozcp.sequences import WeightProfile, auto_correlation, cross_correlation


def shift_matrix(L: int, k: int) -> np.ndarray:
    """Toeplitz matrix with ones on the k-th diagonal (j - i = k)."""
    m = np.zeros((L, L))
    for i in range(L):
        if 0 <= i + k < L:
            m[i, i + k] = 1.0
    return m


def block_auto(L: int, k: int) -> np.ndarray:
    u = shift_matrix(L, k)
    z = np.zeros((L, L))
    return np.block([[u, z], [z, u]])


def block_cross(L: int, k: int) -> np.ndarray:
    u = shift_matrix(L, k)
    z = np.zeros((L, L))
    return np.block([[z, u], [z, z]])


def dense_lifted_form(wp: WeightProfile) -> np.ndarray:
    """The (2L)^2 x (2L)^2 Gram matrix of the lifted quartic objective."""
    L = wp.L
    full_w, full_wt = wp.symmetric()
    dim = (2 * L) ** 2
    J = np.zeros((dim, dim), dtype=np.complex128)
    for idx, k in enumerate(range(-(L - 1), L)):
        va = block_auto(L, k).flatten("F")
        vb = block_cross(L, k).flatten("F")
        J += wp.alpha * full_w[idx] * np.outer(va, va.conj())
        J += (1.0 - wp.alpha) * full_wt[idx] * np.outer(vb, vb.conj())
    return J


def dense_q(z: np.ndarray, wp: WeightProfile) -> np.ndarray:
    """Dense banded matrix Q built from the correlations of the iterate."""
    L = wp.L
    x, y = z[:L], z[L:]
    r = auto_correlation(x) + auto_correlation(y)
    c = cross_correlation(x, y)
    full_w, full_wt = wp.symmetric()
    Q = np.zeros((2 * L, 2 * L), dtype=np.complex128)
    for idx, k in enumerate(range(-(L - 1), L)):
        Q += wp.alpha * full_w[idx] * r[idx] * block_auto(L, k)
        Q += (1.0 - wp.alpha) * full_wt[idx] * c[idx] * block_cross(L, k)
    return Q


def dense_descent(z: np.ndarray, wp: WeightProfile, lam_j: float) -> np.ndarray:
    """P(z) from the dense Q and the dense entry bound."""
    L = wp.L
    Q = dense_q(z, wp)
    lam_u = 4.0 * L * float(np.max(np.abs(Q)))
    scale = 2.0 * lam_j * float(np.vdot(z, z).real) + lam_u
    return scale * z - (Q + Q.conj().T) @ z


def random_pair(rng: np.random.Generator, L: int):
    x = rng.normal(size=L) + 1j * rng.normal(size=L)
    y = rng.normal(size=L) + 1j * rng.normal(size=L)
    return x, y
