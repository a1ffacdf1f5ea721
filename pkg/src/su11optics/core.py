"""SU(1,1) transfer matrices and their action on the extended complex plane.

A lossless multilayer relates the field amplitudes on its two sides through
a 2x2 complex matrix of the form

    [[alpha, beta], [conj(beta), conj(alpha)]],   |alpha|^2 - |beta|^2 = 1.

Only the (alpha, beta) pair is stored; the bottom row is implied by
construction, so the matrix shape cannot be violated -- only the
unit-determinant constraint can, and that is checked when a matrix is
built from external data.  Group operations on already-validated matrices
skip the redundant check (closure is exact in exact arithmetic) and an
explicit :meth:`Su11Matrix.renormalized` is provided for long product
chains instead of any silent cleanup.

The matrix acts on field quotients z = E(-)/E(+) by the bilinear map

    z  ->  (conj(beta) + conj(alpha) * z) / (alpha + beta * z),

which leaves the unit disc, its boundary and the exterior each invariant.
The point at infinity is a first-class :class:`DiscPoint` value so the map
is total (beta = 0 matrices fix infinity; a pole maps to infinity).

Complex arguments use the principal branch in (-pi, pi] throughout.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from typing import Literal, Union

from .errors import DeterminantViolation, ZeroTransmission
from .tolerances import DET_TOL, DISC_TOL

Region = Literal["inside", "boundary", "outside"]


def _as_finite_complex(value: complex, what: str) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{what} must have finite components, got {z!r}")
    return z


@dataclass(frozen=True)
class DiscPoint:
    """A point of the extended complex plane.

    ``value is None`` marks the point at infinity; use :data:`INFINITY`
    (or :meth:`infinity`). Stored finite values must have finite
    components -- float infinities are rejected so that infinity is always
    explicit.
    """

    value: complex | None

    def __post_init__(self) -> None:
        if self.value is not None:
            object.__setattr__(
                self, "value", _as_finite_complex(self.value, "DiscPoint")
            )

    @classmethod
    def infinity(cls) -> DiscPoint:
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def region(self, tol: float = DISC_TOL) -> Region:
        """Which of the three invariant regions the point belongs to."""
        if self.value is None:
            return "outside"
        r = abs(self.value)
        if abs(r - 1.0) <= tol:
            return "boundary"
        return "inside" if r < 1.0 else "outside"

    def __str__(self) -> str:
        return "infinity" if self.value is None else str(self.value)


INFINITY = DiscPoint(None)

PointLike = Union[DiscPoint, complex, float, int]


def as_point(z: PointLike) -> DiscPoint:
    """Coerce a bare complex number to a :class:`DiscPoint`."""
    return z if isinstance(z, DiscPoint) else DiscPoint(complex(z))


@dataclass(frozen=True)
class Su11Matrix:
    """The (alpha, beta) pair of a lossless-multilayer transfer matrix.

    Construction validates |alpha|^2 - |beta|^2 = 1 within ``tol`` and
    never renormalizes; pass ``tol=math.inf`` only for pairs that satisfy
    the constraint by construction.
    """

    alpha: complex
    beta: complex
    tol: InitVar[float] = DET_TOL

    def __post_init__(self, tol: float) -> None:
        object.__setattr__(self, "alpha", _as_finite_complex(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _as_finite_complex(self.beta, "beta"))
        if tol != math.inf:
            defect = self.su11_defect()
            if abs(defect) > tol:
                raise DeterminantViolation(
                    f"|alpha|^2 - |beta|^2 - 1 = {defect:.3e} exceeds tol {tol:.3e}"
                )

    @classmethod
    def identity(cls) -> Su11Matrix:
        return cls(1.0 + 0.0j, 0.0j, tol=math.inf)

    @classmethod
    def from_coefficients(
        cls, reflection: complex, transmission: complex, tol: float = DET_TOL
    ) -> Su11Matrix:
        """Build the matrix from overall reflection/transmission coefficients.

        alpha = 1/T and beta = conj(R)/conj(T); validity is checked on the
        equivalent energy condition |R|^2 + |T|^2 = 1 (lossless, identical
        bounding media).
        """
        r = complex(reflection)
        t = complex(transmission)
        if t == 0:
            raise ZeroTransmission("transmission coefficient is zero")
        energy_defect = abs(r) ** 2 + abs(t) ** 2 - 1.0
        if abs(energy_defect) > tol:
            raise DeterminantViolation(
                f"|R|^2 + |T|^2 - 1 = {energy_defect:.3e} exceeds tol {tol:.3e}"
            )
        # the implied matrix defect is energy_defect / |T|^2, already vetted
        return cls(1.0 / t, r.conjugate() / t.conjugate(), tol=math.inf)

    def su11_defect(self) -> float:
        """|alpha|^2 - |beta|^2 - 1; zero for an exact group element."""
        a, b = self.alpha, self.beta
        return a.real**2 + a.imag**2 - b.real**2 - b.imag**2 - 1.0

    def __matmul__(self, other: Su11Matrix) -> Su11Matrix:
        a1, b1 = self.alpha, self.beta
        a2, b2 = other.alpha, other.beta
        return Su11Matrix(
            a1 * a2 + b1 * b2.conjugate(),
            a1 * b2 + b1 * a2.conjugate(),
            tol=math.inf,
        )

    def inverse(self) -> Su11Matrix:
        return Su11Matrix(self.alpha.conjugate(), -self.beta, tol=math.inf)

    def trace(self) -> float:
        return 2.0 * self.alpha.real

    def renormalized(self) -> Su11Matrix:
        """Scale (alpha, beta) by 1/sqrt(|alpha|^2 - |beta|^2).

        The explicit cleanup for drift accumulated over long chains.
        """
        norm = self.su11_defect() + 1.0
        if norm <= 0.0:
            raise DeterminantViolation(
                f"cannot renormalize: |alpha|^2 - |beta|^2 = {norm:.3e} <= 0"
            )
        s = 1.0 / math.sqrt(norm)
        return Su11Matrix(self.alpha * s, self.beta * s, tol=math.inf)

    def apply(self, z: PointLike) -> DiscPoint:
        """The induced bilinear map on the extended complex plane."""
        a, b = self.alpha, self.beta
        p = as_point(z)
        if p.is_infinity:
            if b == 0:
                return INFINITY
            return DiscPoint(a.conjugate() / b)
        zv = p.value
        den = a + b * zv
        if den == 0:
            return INFINITY
        return DiscPoint((b.conjugate() + a.conjugate() * zv) / den)

    def as_array(self):
        """The full 2x2 complex matrix as a numpy array."""
        import numpy as np

        a, b = self.alpha, self.beta
        return np.array([[a, b], [b.conjugate(), a.conjugate()]])

    def __str__(self) -> str:
        return f"[[{self.alpha}, {self.beta}], [conj, conj]]"


def max_entry_diff(m1: Su11Matrix, m2: Su11Matrix) -> float:
    """max(|alpha1 - alpha2|, |beta1 - beta2|) -- the distance used in tests
    and in CLI residual reports."""
    return max(abs(m1.alpha - m2.alpha), abs(m1.beta - m2.beta))


def principal_arg(z: complex) -> float:
    """Argument in (-pi, pi]; atan2(+0, x<0) = +pi pins the branch cut."""
    return math.atan2(z.imag, z.real) if z != 0 else 0.0


__all__ = [
    "DiscPoint",
    "INFINITY",
    "PointLike",
    "Region",
    "Su11Matrix",
    "as_point",
    "max_entry_diff",
    "principal_arg",
]
