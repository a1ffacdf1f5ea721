"""Trace classification, fixed points, and reduction to canonical form.

A transfer matrix falls in one of three disjoint classes:

    class K:  trace^2 < 4   two fixed points, one inside the unit disc and
                            one outside, related by inversion z -> 1/conj(z)
    class A:  trace^2 > 4   two fixed points on the boundary
    class N:  trace^2 = 4   one double fixed point on the boundary

Numerically the parabolic set is a band |trace^2 - 4| <= CLASS_TOL.
Fixed points solve  beta z^2 + 2i Im(alpha) z - conj(beta) = 0, i.e.

    z = (-i Im(alpha) +/- sqrt(Re(alpha)^2 - 1)) / beta,

with {0, infinity} for beta = 0. For class K the small root is computed
from the large one through the Vieta product -conj(beta)/beta: the naive
quotient cancels catastrophically when |beta| is small.

Any non-degenerate matrix can be conjugated into a pure subgroup form by
an element moving its fixed points onto the canonical ones (0 for K, +/-i
for A, +i for N). The conjugator is only fixed up to the residual subgroup
acting on the left; the conventions choosing one member are documented on
:func:`reduce_to_canonical`. Trace <= -2 matrices reduce to -A(xi) / -N(nu)
(the minus sign is forced by trace preservation) and carry trace_sign
"minus".
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import DiscPoint, INFINITY, Su11Matrix
from .errors import DegenerateMatrix
from .iwasawa import make_k
from .tolerances import CLASS_TOL, DET_TOL

ClassTag = Literal["K", "A", "N"]
TraceSign = Literal["plus", "minus"]
FixedPointKind = Literal[
    "pair_inside_outside", "pair_boundary", "double_boundary", "all_points"
]


@dataclass(frozen=True)
class Classification:
    class_tag: ClassTag
    trace: float
    trace_sign: TraceSign
    degenerate: bool


@dataclass(frozen=True)
class FixedPointSet:
    """Fixed points of the bilinear action, tagged by geometric kind.

    points is ordered (inside, outside) for ``pair_inside_outside``, holds
    the two Eq-root points (+ root first) for ``pair_boundary``, the single
    double point for ``double_boundary``, and is empty for ``all_points``.
    """

    kind: FixedPointKind
    points: tuple[DiscPoint, ...]


@dataclass(frozen=True)
class ConjugatorFamily:
    """One chosen member of the family of conjugators reducing a matrix.

    The full family is obtained by left-multiplying ``canonical_member``
    with any element of ``residual_subgroup``.
    """

    canonical_member: Su11Matrix
    family_parameter_description: str
    residual_subgroup: ClassTag


@dataclass(frozen=True)
class CanonicalReduction:
    conjugator: ConjugatorFamily
    canonical: Su11Matrix
    classification: Classification
    parameter: float
    sign: int

    def off_form_residual(self) -> float:
        return off_form_residual(self.canonical, self.conjugator.residual_subgroup, self.sign)


def classify(m: Su11Matrix, band: float = CLASS_TOL) -> Classification:
    """Tag a matrix by the trace criterion.

    degenerate flags +/- identity; it forces class N (the criterion band is
    narrower than the entrywise degeneracy band, and the identity is the
    parabolic limit).
    """
    t = m.trace()
    degenerate = (
        abs(m.beta) <= DET_TOL
        and abs(m.alpha.imag) <= DET_TOL
        and abs(m.alpha.real ** 2 - 1.0) <= DET_TOL
    )
    d = t * t - 4.0
    if degenerate or abs(d) <= band:
        tag: ClassTag = "N"
    elif d < 0.0:
        tag = "K"
    else:
        tag = "A"
    return Classification(
        class_tag=tag,
        trace=t,
        trace_sign="plus" if t >= 0.0 else "minus",
        degenerate=degenerate,
    )


def _point_or_infinity(z: complex) -> DiscPoint:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        return INFINITY
    return DiscPoint(z)


def fixed_points(m: Su11Matrix, band: float = CLASS_TOL) -> FixedPointSet:
    """Solve z = Phi[m, z]; the variant follows the trace class.

    In the measure-zero sliver where beta is numerically zero but the
    matrix sits inside the parabolic trace band without being degenerate
    (a rotation by ~1e-5), the true geometry {0, infinity} is reported
    rather than a fabricated boundary point.
    """
    c = classify(m, band)
    if c.degenerate:
        return FixedPointSet(kind="all_points", points=())
    a, b = m.alpha, m.beta
    if abs(b) <= DET_TOL and c.class_tag != "A":
        return FixedPointSet(
            kind="pair_inside_outside", points=(DiscPoint(0.0j), INFINITY)
        )
    if c.class_tag == "N":
        z = -1j * a.imag / b
        return FixedPointSet(kind="double_boundary", points=(_point_or_infinity(z),))
    q = complex(0.0, -a.imag)
    if c.class_tag == "A":
        s = math.sqrt(a.real**2 - 1.0)
        return FixedPointSet(
            kind="pair_boundary",
            points=(_point_or_infinity((q + s) / b), _point_or_infinity((q - s) / b)),
        )
    # class K: sqrt is imaginary; take the larger root, recover the small
    # one from the product of roots
    s = 1j * math.sqrt(1.0 - a.real**2)
    big = (q + s) / b if abs(q + s) >= abs(q - s) else (q - s) / b
    small = (-b.conjugate() / b) / big
    inside, outside = (small, big) if abs(small) <= abs(big) else (big, small)
    return FixedPointSet(
        kind="pair_inside_outside",
        points=(_point_or_infinity(inside), _point_or_infinity(outside)),
    )


def conjugate(m: Su11Matrix, c: Su11Matrix) -> Su11Matrix:
    """c m c^-1; preserves the trace and transports fixed points by c."""
    return c @ m @ c.inverse()


def _conjugator_to_origin(z_f: complex) -> Su11Matrix:
    # disc automorphism sending z_f (|z_f| < 1) to 0, with real positive a
    a = 1.0 / math.sqrt(1.0 - abs(z_f) ** 2)
    return Su11Matrix(a, -a * z_f.conjugate(), tol=math.inf)


def _conjugator_to_poles(z1: complex, z2: complex) -> Su11Matrix:
    """Map the boundary pair (z1, z2) to (+i, -i).

    The two complex conditions conj(b) + conj(a) z = +/- i (a + b z) form a
    real homogeneous 4x4 system in (Re a, Im a, Re b, Im b) whose kernel is
    the 2-plane swept by the residual family A(t) C0. The indefinite form
    q = |a|^2 - |b|^2 has signature (+1, -1) on that plane, so its positive
    eigendirection is the family ray; normalizing q = 1 and orienting
    Re(a) > 0 (tie-break Im(a) > 0) picks a member deterministically.
    """
    x1, y1 = z1.real, z1.imag
    x2, y2 = z2.real, z2.imag
    system = np.array(
        [
            [x1, y1 + 1.0, 1.0 + y1, x1],
            [y1 - 1.0, -x1, -x1, y1 - 1.0],
            [x2, y2 - 1.0, 1.0 - y2, -x2],
            [y2 + 1.0, -x2, x2, -1.0 - y2],
        ]
    )
    _, _, vt = np.linalg.svd(system)
    k1, k2 = vt[-1], vt[-2]

    def q(u: np.ndarray, v: np.ndarray) -> float:
        return float(u[0] * v[0] + u[1] * v[1] - u[2] * v[2] - u[3] * v[3])

    form = np.array([[q(k1, k1), q(k1, k2)], [q(k1, k2), q(k2, k2)]])
    eigvals, eigvecs = np.linalg.eigh(form)
    direction = eigvecs[:, -1]
    v = direction[0] * k1 + direction[1] * k2
    qv = q(v, v)
    if qv <= 0.0:
        # the positive direction always exists on the true kernel; if the
        # numerics miss it, the swapped target (z2, z1) -> (+i, -i) is the
        # same family rotated by K(pi)
        return make_k(math.pi) @ _conjugator_to_poles(z2, z1)
    v = v / math.sqrt(qv)
    a = complex(v[0], v[1])
    b = complex(v[2], v[3])
    if a.real < 0.0 or (a.real == 0.0 and a.imag < 0.0):
        a, b = -a, -b
    return Su11Matrix(a, b, tol=math.inf)


def reduce_to_canonical(m: Su11Matrix, band: float = CLASS_TOL) -> CanonicalReduction:
    """Conjugate m into pure K / +-A / +-N form.

    Conventions for the reported family member: class K fixes chi = 0
    (conjugator with real positive a); class A normalizes the 4x4-kernel
    vector with Re(a) > 0; class N uses the pure rotation
    K(arg(z_f) - pi/2). Dispatch follows the fixed-point geometry, which
    agrees with the trace tag away from the band edges.
    """
    cls = classify(m, band)
    if cls.degenerate:
        raise DegenerateMatrix(
            "matrix is +/- identity; every conjugation works and no "
            "canonical reduction is defined"
        )
    fps = fixed_points(m, band)
    sign = 1 if cls.trace >= 0.0 else -1

    if fps.kind == "pair_inside_outside":
        z_in = fps.points[0]
        c = (
            Su11Matrix.identity()
            if z_in.value == 0
            else _conjugator_to_origin(z_in.value)
        )
        canonical = conjugate(m, c)
        phi_hat = 2.0 * math.atan2(canonical.alpha.imag, canonical.alpha.real)
        family = ConjugatorFamily(
            canonical_member=c,
            family_parameter_description=(
                "left multiplication by any rotation factor K(chi); chi = 0 chosen"
            ),
            residual_subgroup="K",
        )
        return CanonicalReduction(family, canonical, cls, parameter=phi_hat, sign=1)

    if fps.kind == "pair_boundary":
        z1, z2 = fps.points
        c = _conjugator_to_poles(z1.value, z2.value)
        canonical = conjugate(m, c)
        xi_hat = 2.0 * math.asinh(sign * canonical.beta.imag)
        family = ConjugatorFamily(
            canonical_member=c,
            family_parameter_description=(
                "left multiplication by any magnifier factor A(xi'); "
                "kernel vector normalized with Re(a) > 0"
            ),
            residual_subgroup="A",
        )
        return CanonicalReduction(family, canonical, cls, parameter=xi_hat, sign=sign)

    # double_boundary
    z_f = fps.points[0].value
    psi = cmath.phase(z_f) - 0.5 * math.pi
    c = make_k(psi)
    canonical = conjugate(m, c)
    nu_hat = sign * 2.0 * canonical.beta.real
    family = ConjugatorFamily(
        canonical_member=c,
        family_parameter_description=(
            "left multiplication by any lens factor N(nu'); "
            "pure rotation K(arg(z_f) - pi/2) chosen"
        ),
        residual_subgroup="N",
    )
    return CanonicalReduction(family, canonical, cls, parameter=nu_hat, sign=sign)


def off_form_residual(canonical: Su11Matrix, tag: ClassTag, sign: int = 1) -> float:
    """How far a matrix is from the exact subgroup form it should have."""
    a, b = canonical.alpha, canonical.beta
    if tag == "K":
        return abs(b)
    if tag == "A":
        return max(abs(b.real), abs(a.imag))
    return max(abs(a.real - sign), abs(b.imag))


__all__ = [
    "CanonicalReduction",
    "ClassTag",
    "Classification",
    "ConjugatorFamily",
    "FixedPointKind",
    "FixedPointSet",
    "TraceSign",
    "classify",
    "conjugate",
    "fixed_points",
    "off_form_residual",
    "reduce_to_canonical",
]
