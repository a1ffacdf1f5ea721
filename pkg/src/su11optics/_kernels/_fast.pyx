# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot-loop kernels; behaviour matches ``_pure`` exactly."""

import numpy as np

BACKEND = "cython"

cdef double INF = float("inf")


def compose_chain(alphas, betas):
    """Ordered left-to-right product of (a, b)-form matrices."""
    cdef double complex[::1] av = np.ascontiguousarray(alphas, dtype=np.complex128)
    cdef double complex[::1] bv = np.ascontiguousarray(betas, dtype=np.complex128)
    if av.shape[0] != bv.shape[0]:
        raise ValueError("alphas and betas must be equal-length 1-d arrays")
    cdef Py_ssize_t n = av.shape[0]
    cdef Py_ssize_t k
    cdef double complex a = 1.0
    cdef double complex b = 0.0
    cdef double complex a2, b2, na
    for k in range(n):
        a2 = av[k]
        b2 = bv[k]
        na = a * a2 + b * b2.conjugate()
        b = a * b2 + b * a2.conjugate()
        a = na
    return complex(a), complex(b)


def mobius_sweep(alphas, betas, z):
    """Apply many (a_k, b_k) matrices to one finite point z."""
    cdef double complex[::1] av = np.ascontiguousarray(alphas, dtype=np.complex128)
    cdef double complex[::1] bv = np.ascontiguousarray(betas, dtype=np.complex128)
    if av.shape[0] != bv.shape[0]:
        raise ValueError("alphas and betas must be equal-length 1-d arrays")
    cdef Py_ssize_t n = av.shape[0]
    out = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef double complex zz = z
    cdef double complex a, b, den
    cdef Py_ssize_t k
    for k in range(n):
        a = av[k]
        b = bv[k]
        den = a + b * zz
        if den == 0:
            ov[k] = INF
        else:
            ov[k] = (b.conjugate() + a.conjugate() * zz) / den
    return out


def iterate_mobius(alpha, beta, z0, n_steps):
    """Trajectory z_0 .. z_n of repeated application of one matrix."""
    cdef double complex a = alpha
    cdef double complex b = beta
    cdef double complex ac = a.conjugate()
    cdef double complex bc = b.conjugate()
    cdef Py_ssize_t n = n_steps
    out = np.empty(n + 1, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef double complex z = z0
    cdef double complex den
    cdef Py_ssize_t k
    ov[0] = z
    for k in range(1, n + 1):
        if z.real == INF or z.real == -INF or z.imag == INF or z.imag == -INF:
            z = INF if b == 0 else ac / b
        else:
            den = a + b * z
            z = INF if den == 0 else (bc + ac * z) / den
        ov[k] = z
    return out
