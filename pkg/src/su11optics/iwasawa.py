"""Unique factorization of a transfer matrix into compact x abelian x
nilpotent one-parameter factors, and the three subgroup generators.

    K(phi): alpha = exp(i phi/2),   beta = 0          (rotation of the disc)
    A(xi):  alpha = cosh(xi/2),     beta = i sinh(xi/2)
    N(nu):  alpha = 1 - i nu/2,     beta = nu/2

The factorization M = K(phi) A(xi) N(nu) is global and unique. Extraction
uses the pivot u = alpha + i beta, which for a product in this order
collapses to exp(i phi/2) exp(-xi/2) and therefore never vanishes:

    phi = 2 arg(u),   xi = -2 ln|u|,   nu = -Im((alpha - i beta)/u).

phi is reported in (-2pi, 2pi] (phi/2 is a principal argument). Note the
usual double-cover ambiguity: K(2pi) = -identity, so (phi, xi, nu) and the
same factors with phi shifted by 2pi describe matrices differing by an
overall sign.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import Su11Matrix

_INF = math.inf


def make_k(phi: float) -> Su11Matrix:
    """Compact-factor generator: rotates disc points by -phi about 0."""
    return Su11Matrix(cmath.exp(0.5j * phi), 0.0j, tol=_INF)


def make_a(xi: float) -> Su11Matrix:
    """Abelian-factor generator; fixes the boundary points +i and -i."""
    return Su11Matrix(math.cosh(0.5 * xi), 1j * math.sinh(0.5 * xi), tol=_INF)


def make_n(nu: float) -> Su11Matrix:
    """Nilpotent-factor generator; +i is its only (double) fixed point."""
    return Su11Matrix(complex(1.0, -0.5 * nu), complex(0.5 * nu, 0.0), tol=_INF)


@dataclass(frozen=True)
class IwasawaFactors:
    phi: float
    xi: float
    nu: float

    @property
    def magnification(self) -> float:
        """Scale factor exp(xi/2) of the abelian factor."""
        return math.exp(0.5 * self.xi)

    def matrix(self) -> Su11Matrix:
        return recompose(self)


def decompose(m: Su11Matrix) -> IwasawaFactors:
    u = m.alpha + 1j * m.beta
    phi = 2.0 * math.atan2(u.imag, u.real)
    xi = -2.0 * math.log(abs(u))
    w = (m.alpha - 1j * m.beta) / u
    return IwasawaFactors(phi=phi, xi=xi, nu=-w.imag)


def recompose(f: IwasawaFactors) -> Su11Matrix:
    return make_k(f.phi) @ make_a(f.xi) @ make_n(f.nu)


def magnification(f: IwasawaFactors) -> float:
    return f.magnification


__all__ = [
    "IwasawaFactors",
    "decompose",
    "magnification",
    "make_a",
    "make_k",
    "make_n",
    "recompose",
]
