"""Vectorized numpy implementations of the hot kernels.

These are the fallback used when the compiled extension is unavailable;
both backends expose the same three functions with identical semantics
(see ``ecctensor.backend``).
"""

import numpy as np


def pairwise_pow_sum(gram: np.ndarray, two_k: int) -> float:
    """Sum of |g_ij|^two_k over all entries of a (real) Gram matrix."""
    return float(np.sum(np.abs(gram) ** two_k))


def circle_potentials(thetas: np.ndarray, two_k: int) -> np.ndarray:
    """Raw frame potential sum_{i,j} cos(t_i - t_j)^two_k per row of angles.

    thetas has shape (N, m): N candidate configurations of m points on the
    circle.  Returns shape (N,).
    """
    thetas = np.asarray(thetas, dtype=np.float64)
    c = np.cos(thetas)
    s = np.sin(thetas)
    gram = np.einsum("ni,nj->nij", c, c) + np.einsum("ni,nj->nij", s, s)
    return np.sum(gram ** two_k, axis=(1, 2))


def potential_gradient(x: np.ndarray, k: int) -> np.ndarray:
    """Euclidean gradient of (1/m^2) sum_{i,j} <x_i,x_j>^{2k} w.r.t. each row."""
    x = np.asarray(x, dtype=np.float64)
    m = x.shape[0]
    gram = x @ x.T
    return (4.0 * k / (m * m)) * ((gram ** (2 * k - 1)) @ x)
