# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the hot kernels (see ecctensor.backend)."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, fabs, sin

cnp.import_array()


cdef inline double _ipow(double base, int e) noexcept nogil:
    cdef double r = 1.0
    cdef double b = base
    while e > 0:
        if e & 1:
            r *= b
        b *= b
        e >>= 1
    return r


def pairwise_pow_sum(const double[:, ::1] gram, int two_k):
    """Sum of |g_ij|^two_k over all entries of a (real) Gram matrix."""
    cdef Py_ssize_t i, j
    cdef Py_ssize_t m = gram.shape[0]
    cdef Py_ssize_t n = gram.shape[1]
    cdef double total = 0.0
    with nogil:
        for i in range(m):
            for j in range(n):
                total += _ipow(fabs(gram[i, j]), two_k)
    return total


def circle_potentials(const double[:, ::1] thetas, int two_k):
    """Raw frame potential sum_{i,j} cos(t_i - t_j)^two_k per row of angles."""
    cdef Py_ssize_t r, i, j
    cdef Py_ssize_t nrows = thetas.shape[0]
    cdef Py_ssize_t m = thetas.shape[1]
    cdef double acc, g
    cdef double c[16]
    cdef double s[16]
    if m > 16:
        raise ValueError("circle kernel supports at most 16 points")
    out = np.empty(nrows, dtype=np.float64)
    cdef double[::1] out_v = out
    with nogil:
        for r in range(nrows):
            for i in range(m):
                c[i] = cos(thetas[r, i])
                s[i] = sin(thetas[r, i])
            acc = <double> m
            for i in range(m):
                for j in range(i + 1, m):
                    g = c[i] * c[j] + s[i] * s[j]
                    acc += 2.0 * _ipow(g, two_k)
            out_v[r] = acc
    return out


def potential_gradient(const double[:, ::1] x, int k):
    """Euclidean gradient of (1/m^2) sum_{i,j} <x_i,x_j>^{2k} w.r.t. each row."""
    cdef Py_ssize_t i, j, d
    cdef Py_ssize_t m = x.shape[0]
    cdef Py_ssize_t n = x.shape[1]
    cdef double dot, w
    cdef double scale = 4.0 * k / (<double> m * <double> m)
    out = np.zeros((m, n), dtype=np.float64)
    cdef double[:, ::1] out_v = out
    with nogil:
        for i in range(m):
            for j in range(m):
                dot = 0.0
                for d in range(n):
                    dot += x[i, d] * x[j, d]
                w = scale * _ipow(dot, 2 * k - 1)
                for d in range(n):
                    out_v[i, d] += w * x[j, d]
    return out
