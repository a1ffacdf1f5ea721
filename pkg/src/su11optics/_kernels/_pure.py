"""Pure numpy/python implementation of the hot-loop kernels.

Mirrors the compiled extension in ``_fast.pyx``. Poles of the bilinear map
are reported as complex infinity (real part +inf).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

_INF = complex(float("inf"), 0.0)


def _c128(values) -> np.ndarray:
    return np.ascontiguousarray(values, dtype=np.complex128)


def compose_chain(alphas, betas) -> tuple[complex, complex]:
    """Ordered left-to-right product of (a, b)-form matrices.

    Each factor is [[a, b], [conj(b), conj(a)]]; the form is closed under
    multiplication even when individual factors are not unit-determinant
    (interface matrices are not), so this also serves stack composition.
    """
    alphas = _c128(alphas)
    betas = _c128(betas)
    if alphas.shape != betas.shape or alphas.ndim != 1:
        raise ValueError("alphas and betas must be equal-length 1-d arrays")
    a = 1.0 + 0.0j
    b = 0.0 + 0.0j
    for a2, b2 in zip(alphas.tolist(), betas.tolist()):
        a, b = a * a2 + b * b2.conjugate(), a * b2 + b * a2.conjugate()
    return a, b


def mobius_sweep(alphas, betas, z: complex) -> np.ndarray:
    """Apply many (a_k, b_k) matrices to one finite point z."""
    alphas = _c128(alphas)
    betas = _c128(betas)
    z = complex(z)
    den = alphas + betas * z
    num = np.conj(betas) + np.conj(alphas) * z
    out = np.empty_like(den)
    poles = den == 0
    np.divide(num, den, out=out, where=~poles)
    out[poles] = _INF
    return out


def iterate_mobius(alpha: complex, beta: complex, z0: complex, n_steps: int) -> np.ndarray:
    """Trajectory z_0, z_1, ..., z_n of repeated application of one matrix.

    A pole sends the trajectory through infinity, which then maps onward to
    conj(alpha)/beta.
    """
    a = complex(alpha)
    b = complex(beta)
    ac = a.conjugate()
    bc = b.conjugate()
    out = np.empty(n_steps + 1, dtype=np.complex128)
    z = complex(z0)
    out[0] = z
    for k in range(1, n_steps + 1):
        if not (abs(z.real) < float("inf") and abs(z.imag) < float("inf")):
            z = _INF if b == 0 else ac / b
        else:
            den = a + b * z
            z = _INF if den == 0 else (bc + ac * z) / den
        out[k] = z
    return out
