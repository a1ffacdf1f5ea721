"""Subgroup orbits and iterated-action trajectories in the unit disc.

Orbits of the three one-parameter subgroups through a seed point trace the
classical picture: rotation orbits are circles centred at the origin,
magnifier orbits are circular arcs running from +i to -i through the seed,
and lens orbits are circles through +i that join the seed z to -conj(z).
Every orbit stays in the seed's invariant region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _kernels
from .core import DiscPoint, INFINITY, PointLike, Su11Matrix, as_point
from .errors import DuplicatePoints, InvalidRange
from .tolerances import GEO_TOL

Subgroup = Literal["K", "A", "N"]

# parameter windows that cover the visually complete arcs at double precision
DEFAULT_RANGES: dict[str, tuple[float, float]] = {
    "K": (0.0, 4.0 * math.pi),
    "A": (-6.0, 6.0),
    "N": (-20.0, 20.0),
}
DEFAULT_SAMPLES = 256


@dataclass(frozen=True)
class Orbit:
    subgroup: Subgroup
    seed: DiscPoint
    samples: tuple[tuple[float, DiscPoint], ...]


@dataclass(frozen=True)
class Trajectory:
    matrix: Su11Matrix
    seed: DiscPoint
    samples: tuple[tuple[float, DiscPoint], ...]


def _generator_arrays(subgroup: Subgroup, params: np.ndarray):
    if subgroup == "K":
        return np.exp(0.5j * params), np.zeros_like(params, dtype=np.complex128)
    if subgroup == "A":
        return np.cosh(0.5 * params) + 0.0j, 1j * np.sinh(0.5 * params)
    if subgroup == "N":
        return 1.0 - 0.5j * params, 0.5 * params + 0.0j
    raise InvalidRange(f"unknown subgroup {subgroup!r} (expected K, A or N)")


def _from_kernel_value(z: complex) -> DiscPoint:
    if math.isfinite(z.real) and math.isfinite(z.imag):
        return DiscPoint(z)
    return INFINITY


def orbit(
    subgroup: Subgroup,
    seed: PointLike,
    param_range: tuple[float, float] | None = None,
    n_samples: int = DEFAULT_SAMPLES,
) -> Orbit:
    """Sample the subgroup orbit through ``seed`` on a uniform parameter grid."""
    seed_pt = as_point(seed)
    if seed_pt.is_infinity:
        raise InvalidRange("orbit seed must be a finite point")
    if param_range is None:
        param_range = DEFAULT_RANGES.get(subgroup)
        if param_range is None:
            raise InvalidRange(f"unknown subgroup {subgroup!r} (expected K, A or N)")
    lo, hi = float(param_range[0]), float(param_range[1])
    if not (lo < hi):
        raise InvalidRange(f"empty parameter range [{lo}, {hi}]")
    if n_samples < 2:
        raise InvalidRange(f"need at least 2 samples, got {n_samples}")
    params = np.linspace(lo, hi, int(n_samples))
    alphas, betas = _generator_arrays(subgroup, params)
    values = _kernels.mobius_sweep(alphas, betas, seed_pt.value)
    samples = tuple(
        (float(p), _from_kernel_value(complex(z)))
        for p, z in zip(params.tolist(), values.tolist())
    )
    return Orbit(subgroup=subgroup, seed=seed_pt, samples=samples)


def iterate(m: Su11Matrix, seed: PointLike, n_steps: int) -> Trajectory:
    """Trajectory seed, m(seed), m(m(seed)), ... with the step as parameter."""
    if n_steps < 1:
        raise ValueError(f"need at least one step, got {n_steps}")
    seed_pt = as_point(seed)
    if seed_pt.is_infinity:
        first = m.apply(seed_pt)
        rest = (
            _kernels.iterate_mobius(m.alpha, m.beta, first.value, n_steps - 1)
            if not first.is_infinity
            else None
        )
        samples = [(0.0, seed_pt), (1.0, first)]
        if rest is None:
            # beta = 0 keeps infinity fixed forever
            samples.extend((float(k), INFINITY) for k in range(2, n_steps + 1))
        else:
            samples.extend(
                (float(k + 1), _from_kernel_value(complex(z)))
                for k, z in enumerate(rest.tolist()[1:], start=1)
            )
        return Trajectory(matrix=m, seed=seed_pt, samples=tuple(samples))
    values = _kernels.iterate_mobius(m.alpha, m.beta, seed_pt.value, n_steps)
    samples = tuple(
        (float(k), _from_kernel_value(complex(z))) for k, z in enumerate(values.tolist())
    )
    return Trajectory(matrix=m, seed=seed_pt, samples=samples)


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float


def fit_circle(
    p1: PointLike, p2: PointLike, p3: PointLike, tol: float = GEO_TOL
) -> Circle | None:
    """Circumcircle through three points; None when they are collinear.

    Collinearity uses the triangle-area test |cross| <= tol * d12 * d13
    (i.e. the sine of the spanned angle is below tol).
    """
    pts = []
    for p in (p1, p2, p3):
        pt = as_point(p)
        if pt.is_infinity:
            raise ValueError("circle fit needs finite points")
        pts.append(pt.value)
    a, b, c = pts
    d_ab, d_ac, d_bc = abs(b - a), abs(c - a), abs(c - b)
    if min(d_ab, d_ac, d_bc) <= tol:
        raise DuplicatePoints("circle fit needs three distinct points")
    cross = ((b - a).conjugate() * (c - a)).imag
    if abs(cross) <= tol * d_ab * d_ac:
        return None
    d = 2.0 * cross
    na, nb, nc = abs(a) ** 2, abs(b) ** 2, abs(c) ** 2
    ux = (na * (b.imag - c.imag) + nb * (c.imag - a.imag) + nc * (a.imag - b.imag)) / d
    uy = (na * (c.real - b.real) + nb * (a.real - c.real) + nc * (b.real - a.real)) / d
    center = complex(ux, uy)
    return Circle(center=center, radius=abs(center - a))


__all__ = [
    "Circle",
    "DEFAULT_RANGES",
    "DEFAULT_SAMPLES",
    "Orbit",
    "Subgroup",
    "Trajectory",
    "fit_circle",
    "iterate",
    "orbit",
]
