"""Laminate geometry: stacking sequences, lamination points, auxetic zones.

An uncoupled laminate that is orthotropic in extension is described, once the
material is fixed, by the two lamination parameters (xi3, xi1). Their
admissible region is the parabolic domain

    2*xi3**2 - 1 <= xi1 <= 1,   -1 <= xi1 <= 1,

whose parabolic boundary is exactly the set of points realizable by balanced
angle-ply stacks with orientations +delta/-delta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UniformSignError
from .material import DimensionlessMaterial, _checked_ratio, _nu12_fraction

#: Absolute tolerance for membership in the lamination domain.
DOMAIN_TOL = 1e-12
#: Absolute tolerance for membership on the parabolic boundary.
PARABOLA_TOL = 1e-9


@dataclass(frozen=True)
class LaminationPoint:
    """Lamination parameters (xi3, xi1) of an orthotropic laminate."""

    xi3: float
    xi1: float

    def parabola_gap(self) -> float:
        """Signed distance xi1 - (2*xi3**2 - 1) to the parabolic boundary."""
        return self.xi1 - (2.0 * self.xi3 * self.xi3 - 1.0)

    def on_parabola(self, tol: float = PARABOLA_TOL) -> bool:
        return abs(self.parabola_gap()) <= tol


@dataclass(frozen=True)
class StackingSequence:
    """Orientation angles of a stack of identical, equal-thickness plies.

    Orientations are reduced to (-pi/2, pi/2] on construction.
    """

    plies: tuple[float, ...]

    def __init__(self, plies):
        angles = tuple(_reduce_orientation(a) for a in plies)
        if not angles:
            raise DomainError("a stacking sequence needs at least one ply")
        object.__setattr__(self, "plies", angles)

    def __len__(self) -> int:
        return len(self.plies)


@dataclass(frozen=True)
class AuxeticZone:
    """Angular interval (theta1, theta2) where the Poisson's ratio is negative.

    The zone is symmetric about pi/4 by construction: theta2 = pi/2 - theta1.
    ``empty`` marks no auxetic direction at all; ``full`` marks the whole
    quadrant (kept for numerical robustness although laminates of non-auxetic
    plies cannot reach it).
    """

    theta1: float
    theta2: float
    width: float
    empty: bool = False
    full: bool = False


def _reduce_orientation(angle: float) -> float:
    """Map an orientation angle to (-pi/2, pi/2]."""
    a = math.fmod(float(angle), math.pi)
    if a > math.pi / 2.0:
        a -= math.pi
    elif a <= -math.pi / 2.0:
        a += math.pi
    return a


def lamination_parameters(s: StackingSequence) -> tuple[float, float, float, float]:
    """Lamination parameters (xi1, xi2, xi3, xi4) of an equal-thickness stack.

    xi1 + i*xi2 and xi3 + i*xi4 are the stack averages of exp(4i*delta_j)
    and exp(2i*delta_j).
    """
    angles = np.asarray(s.plies)
    z4 = np.exp(4.0j * angles).mean()
    z2 = np.exp(2.0j * angles).mean()
    return float(z4.real), float(z4.imag), float(z2.real), float(z2.imag)


def in_domain(p: LaminationPoint, tol: float = DOMAIN_TOL) -> bool:
    """Membership test for the lamination domain."""
    return (
        p.xi1 <= 1.0 + tol
        and p.xi1 >= -1.0 - tol
        and 2.0 * p.xi3 * p.xi3 - 1.0 <= p.xi1 + tol
    )


def angle_ply_point(delta: float) -> LaminationPoint:
    """Lamination point of the balanced angle ply with orientations +-delta.

    xi1 is computed as 2*xi3**2 - 1, so the point sits on the parabolic
    boundary exactly, not merely to rounding.
    """
    if not 0.0 <= delta <= math.pi / 2.0:
        raise DomainError(f"angle-ply half angle {delta!r} outside [0, pi/2]")
    xi3 = math.cos(2.0 * delta)
    return LaminationPoint(xi3=xi3, xi1=2.0 * xi3 * xi3 - 1.0)


def delta_from_point(p: LaminationPoint) -> float:
    """Half angle of the angle-ply stack realizing a parabolic-boundary point.

    Interior points have no angle-ply realization and are rejected.
    """
    if not p.on_parabola():
        raise DomainError(
            f"point ({p.xi3:.6g}, {p.xi1:.6g}) is off the parabolic boundary: "
            "no angle-ply realization"
        )
    return 0.5 * math.acos(min(1.0, max(-1.0, p.xi3)))


def nu12_laminate(m: DimensionlessMaterial, p: LaminationPoint, theta) -> float | np.ndarray:
    """Directional Poisson's ratio of the laminate at lamination point p."""
    if not in_domain(p):
        raise DomainError(f"({p.xi3:.6g}, {p.xi1:.6g}) outside the lamination domain")
    num, den = _nu12_fraction(m.tau0, m.tau1, m.rho, m.sign, p.xi3, p.xi1, theta)
    return _checked_ratio(num, den, 2.0 * m.tau0 * m.tau1 + m.tau0 * m.tau0)


def _numerator_terms(m: DimensionlessMaterial, xi3, xi1):
    """(constant, cos4-coefficient) split of the sign numerator."""
    iso = 2.0 * (m.tau0 * m.tau1 - xi3 * xi3)
    aniso = m.tau0 * m.tau0 - m.rho * m.rho * xi1 * xi1
    direct = 2.0 * (xi3 * xi3 - m.sign * m.tau1 * m.rho * xi1)
    return iso - aniso, direct


def nu12_numerator(m: DimensionlessMaterial, p: LaminationPoint, theta) -> float | np.ndarray:
    """Sign-carrying numerator of the laminate Poisson's ratio.

    Shares the sign of nu12 wherever the (positive) denominator holds, and
    depends on direction only through cos(4*theta): the angle is reduced
    modulo pi/2 with an exact remainder, making the quarter-turn periodicity
    hold bit for bit on exactly representable shifts.
    """
    if not in_domain(p):
        raise DomainError(f"({p.xi3:.6g}, {p.xi1:.6g}) outside the lamination domain")
    const, direct = _numerator_terms(m, p.xi3, p.xi1)
    th = np.fmod(np.asarray(theta, dtype=float), np.pi / 2.0)
    out = const + direct * np.cos(4.0 * th)
    return float(out) if out.ndim == 0 else out


def zone_threshold(m: DimensionlessMaterial, p: LaminationPoint) -> float:
    """Threshold on cos(4*theta) below which the laminate is auxetic.

    Defined where the directional coefficient of the numerator is nonzero;
    a vanishing coefficient means nu12 keeps one sign for all directions,
    which is signalled as UniformSignError.
    """
    if not in_domain(p):
        raise DomainError(f"({p.xi3:.6g}, {p.xi1:.6g}) outside the lamination domain")
    const, direct = _numerator_terms(m, p.xi3, p.xi1)
    scale = 1.0 + p.xi3 * p.xi3 + m.tau1 * m.rho * abs(p.xi1)
    if abs(direct) <= 1e-12 * scale:
        raise UniformSignError(
            "directional term vanishes at this point: the Poisson's ratio "
            f"is {'negative' if const < 0.0 else 'non-negative'} for every direction"
        )
    return -const / direct


def zone_threshold_on_boundary(m: DimensionlessMaterial, xi1) -> float | np.ndarray:
    """Zone threshold restricted to the parabolic boundary, as a function of xi1.

    On the boundary 2*xi3**2 = xi1 + 1, which eliminates xi3. Accepts scalar
    or ndarray xi1; the caller is responsible for keeping the denominator
    positive (it vanishes where the directional term changes sign).
    """
    x1 = np.asarray(xi1, dtype=float)
    num = m.tau0 * m.tau0 - 2.0 * m.tau0 * m.tau1 + 1.0 + x1 - m.rho * m.rho * x1 * x1
    den = 1.0 + (1.0 - 2.0 * m.sign * m.tau1 * m.rho) * x1
    out = num / den
    return float(out) if out.ndim == 0 else out


def zone_from_threshold(threshold: float) -> AuxeticZone:
    """Invert cos(4*theta) < threshold into the auxetic angular interval."""
    if threshold <= -1.0:
        return AuxeticZone(theta1=math.nan, theta2=math.nan, width=0.0, empty=True)
    if threshold >= 1.0:
        return AuxeticZone(
            theta1=0.0, theta2=math.pi / 2.0, width=math.pi / 2.0, full=True
        )
    theta1 = 0.25 * math.acos(threshold)
    theta2 = math.pi / 2.0 - theta1
    return AuxeticZone(theta1=theta1, theta2=theta2, width=theta2 - theta1)
