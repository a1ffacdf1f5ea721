"""The real-matrix picture: conjugation by U = (1/sqrt 2) [[1, i], [i, 1]]
turns every SU(1,1) transfer matrix into a real unit-determinant 2x2
matrix, the setting of the ABCD law of first-order optics.

Expanding U M U^-1 entrywise gives the closed form

    [[Re a + Im b,  Im a + Re b],
     [Re b - Im a,  Re a - Im b]]

which maps the three subgroup generators onto their real forms

    K(phi) -> [[cos(phi/2), sin(phi/2)], [-sin(phi/2), cos(phi/2)]]
    A(xi)  -> [[exp(xi/2), 0], [0, exp(-xi/2)]]
    N(nu)  -> [[1, 0], [nu, 1]]

read as a phase-space rotation, a magnifier scaling x by exp(xi/2) (and
the conjugate direction down by the same factor), and a lens of power nu.
The real Iwasawa factors coincide with the complex-picture ones, since U
conjugation carries one factorization onto the other; that correspondence
is itself covered by tests rather than recomputed independently here.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass

from .core import Su11Matrix
from .errors import DeterminantViolation
from .iwasawa import IwasawaFactors, decompose
from .tolerances import DET_TOL

_SQRT_HALF = math.sqrt(0.5)


@dataclass(frozen=True)
class Sl2rMatrix:
    a11: float
    a12: float
    a21: float
    a22: float
    tol: InitVar[float] = DET_TOL

    def __post_init__(self, tol: float) -> None:
        for name in ("a11", "a12", "a21", "a22"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if tol != math.inf:
            defect = self.det_defect()
            if abs(defect) > tol:
                raise DeterminantViolation(
                    f"det - 1 = {defect:.3e} exceeds tol {tol:.3e}"
                )

    @classmethod
    def identity(cls) -> Sl2rMatrix:
        return cls(1.0, 0.0, 0.0, 1.0, tol=math.inf)

    def det_defect(self) -> float:
        return self.a11 * self.a22 - self.a12 * self.a21 - 1.0

    def trace(self) -> float:
        return self.a11 + self.a22

    def __matmul__(self, other: Sl2rMatrix) -> Sl2rMatrix:
        return Sl2rMatrix(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
            tol=math.inf,
        )

    def as_array(self):
        import numpy as np

        return np.array([[self.a11, self.a12], [self.a21, self.a22]])


@dataclass(frozen=True)
class FieldVector:
    """Forward/backward field amplitude pair (E+, E-)."""

    plus: complex
    minus: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "plus", complex(self.plus))
        object.__setattr__(self, "minus", complex(self.minus))
        if self.plus == 0 and self.minus == 0:
            raise ValueError("field vector must not be identically zero")


@dataclass(frozen=True)
class RealIwasawaFactors:
    phi: float
    xi: float
    nu: float


def to_sl2r(m: Su11Matrix) -> Sl2rMatrix:
    a, b = m.alpha, m.beta
    return Sl2rMatrix(
        a.real + b.imag,
        a.imag + b.real,
        b.real - a.imag,
        a.real - b.imag,
        tol=math.inf,
    )


def from_sl2r(r: Sl2rMatrix) -> Su11Matrix:
    """Inverse of :func:`to_sl2r`; the matrix defect equals r's det defect
    exactly, so no second validation is run."""
    alpha = complex(0.5 * (r.a11 + r.a22), 0.5 * (r.a12 - r.a21))
    beta = complex(0.5 * (r.a12 + r.a21), 0.5 * (r.a11 - r.a22))
    return Su11Matrix(alpha, beta, tol=math.inf)


def transform_field_vector(e: FieldVector, c: Su11Matrix) -> FieldVector:
    """Change basis: apply the conjugator c, then U, to (E+, E-).

    Which member of the conjugator family to use is the caller's choice;
    pass the identity for the plain U rotation.
    """
    p = c.alpha * e.plus + c.beta * e.minus
    q = c.beta.conjugate() * e.plus + c.alpha.conjugate() * e.minus
    return FieldVector(_SQRT_HALF * (p + 1j * q), _SQRT_HALF * (1j * p + q))


def real_iwasawa(r: Sl2rMatrix, tol: float = DET_TOL) -> RealIwasawaFactors:
    """Factor a real matrix as rotation x magnifier x lens."""
    defect = r.det_defect()
    if abs(defect) > tol:
        raise DeterminantViolation(f"det - 1 = {defect:.3e} exceeds tol {tol:.3e}")
    f: IwasawaFactors = decompose(from_sl2r(r))
    return RealIwasawaFactors(phi=f.phi, xi=f.xi, nu=f.nu)


def physical_reading(f: RealIwasawaFactors, fmt=lambda x: f"{x:.12g}") -> str:
    """One-line description of the three factor actions."""
    if max(abs(f.phi), abs(f.xi), abs(f.nu)) <= DET_TOL:
        return "identity system"
    return (
        f"rotation angle {fmt(f.phi)} rad; "
        f"magnification {fmt(math.exp(0.5 * f.xi))}; "
        f"lens power {fmt(f.nu)}"
    )


__all__ = [
    "FieldVector",
    "RealIwasawaFactors",
    "Sl2rMatrix",
    "from_sl2r",
    "physical_reading",
    "real_iwasawa",
    "to_sl2r",
    "transform_field_vector",
]
