"""Ply material descriptions and conversions.

The conversion chain is: engineering constants of a unidirectional ply ->
plane-stress reduced stiffness -> polar invariants (moduli and angles of the
harmonic decomposition) -> dimensionless ratios. The dimensionless ratios,
together with two lamination parameters, fully determine the directional
Poisson's ratio of any uncoupled orthotropic laminate made of that ply.

All angles are radians. Moduli are GPa. Directions are measured from the
fiber axis (the frame is chosen so that the second polar angle is zero).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidMaterialError, PoleError

#: Denominators smaller than this (relative to the tensor scale) are poles.
POLE_RTOL = 1e-12


@dataclass(frozen=True)
class EngineeringConstants:
    """In-plane engineering constants of a unidirectional ply.

    Attributes:
        name: Text label.
        e1: Young's modulus along the fibers (GPa).
        e2: Young's modulus transverse to the fibers (GPa).
        g12: In-plane shear modulus (GPa).
        nu12: Major Poisson's ratio.
    """

    name: str
    e1: float
    e2: float
    g12: float
    nu12: float

    def __post_init__(self):
        if self.e1 <= 0.0 or self.e2 <= 0.0 or self.g12 <= 0.0:
            raise InvalidMaterialError(f"{self.name!r}: moduli must be positive")
        # Positive definiteness of the plane-stress compliance.
        if self.nu12 * self.nu12 >= self.e1 / self.e2:
            raise InvalidMaterialError(
                f"{self.name!r}: nu12^2 = {self.nu12 * self.nu12:.4g} must stay "
                f"below E1/E2 = {self.e1 / self.e2:.4g}"
            )


@dataclass(frozen=True)
class ReducedStiffness:
    """Plane-stress reduced stiffness of an orthotropic ply, material frame.

    The shear-normal couplings q16 and q26 vanish by orthotropy, so only the
    four independent components are stored (GPa).
    """

    q11: float
    q12: float
    q22: float
    q66: float

    def __post_init__(self):
        if self.q11 <= 0.0 or self.q22 <= 0.0 or self.q66 <= 0.0:
            raise InvalidMaterialError("reduced stiffness diagonal must be positive")
        if self.q11 * self.q22 - self.q12 * self.q12 <= 0.0:
            raise InvalidMaterialError("reduced stiffness is not positive definite")

    def as_matrix(self) -> np.ndarray:
        """3x3 stiffness matrix in contracted notation (engineering shear)."""
        return np.array(
            [
                [self.q11, self.q12, 0.0],
                [self.q12, self.q22, 0.0],
                [0.0, 0.0, self.q66],
            ]
        )


@dataclass(frozen=True)
class PolarParameters:
    """Polar invariants of a planar fourth-order tensor.

    t0, t1 are the isotropic moduli, r0, r1 the anisotropic ones, and phi0,
    phi1 the polar angles. Only the difference phi0 - phi1 is frame
    invariant; for an ordinary orthotropic ply it is a multiple of pi/4.
    """

    t0: float
    t1: float
    r0: float
    r1: float
    phi0: float = 0.0
    phi1: float = 0.0

    def __post_init__(self):
        if min(self.t0, self.t1, self.r0, self.r1) < 0.0:
            raise InvalidMaterialError("polar moduli must be non-negative")

    @property
    def k(self) -> int:
        """Orthotropy class: 0 when cos 4(phi0 - phi1) >= 0, else 1."""
        return 0 if math.cos(4.0 * (self.phi0 - self.phi1)) >= 0.0 else 1


@dataclass(frozen=True)
class DimensionlessMaterial:
    """Dimensionless material description (tau0, tau1, rho, k).

    The three ratios are the polar moduli divided by r1; together with the
    binary invariant k they are the only material input to every laminate
    Poisson's ratio and auxeticity formula in this package.
    """

    tau0: float
    tau1: float
    rho: float
    k: int = 0

    def __post_init__(self):
        if self.tau0 <= 0.0 or self.tau1 <= 0.0 or self.rho < 0.0:
            raise InvalidMaterialError("dimensionless moduli out of range")
        if self.k not in (0, 1):
            raise InvalidMaterialError(f"k must be 0 or 1, got {self.k}")

    @property
    def sign(self) -> float:
        """(-1)**k, the sign carried by the anisotropic r0 term."""
        return -1.0 if self.k else 1.0


def reduce_stiffness(ec: EngineeringConstants) -> ReducedStiffness:
    """Plane-stress reduced stiffness from engineering constants."""
    nu21 = ec.nu12 * ec.e2 / ec.e1
    d = 1.0 - ec.nu12 * nu21
    return ReducedStiffness(
        q11=ec.e1 / d,
        q12=ec.nu12 * ec.e2 / d,
        q22=ec.e2 / d,
        q66=ec.g12,
    )


def polar_from_stiffness(q: ReducedStiffness) -> PolarParameters:
    """Polar invariants of a reduced stiffness given in its material frame.

    The two anisotropic phases are fixed by sign inspection of the bracketed
    component combinations: phi0 is 0 or pi/4 and phi1 is 0 or pi/2, which
    avoids any angle-wrapping ambiguity.
    """
    t0 = (q.q11 - 2.0 * q.q12 + 4.0 * q.q66 + q.q22) / 8.0
    t1 = (q.q11 + 2.0 * q.q12 + q.q22) / 8.0
    b0 = (q.q11 - 2.0 * q.q12 - 4.0 * q.q66 + q.q22) / 8.0
    b1 = (q.q11 - q.q22) / 8.0
    return PolarParameters(
        t0=t0,
        t1=t1,
        r0=abs(b0),
        r1=abs(b1),
        phi0=0.0 if b0 >= 0.0 else math.pi / 4.0,
        phi1=0.0 if b1 >= 0.0 else math.pi / 2.0,
    )


def dimensionless(p: PolarParameters) -> DimensionlessMaterial:
    """Reduce polar invariants to the ratios (t0/r1, t1/r1, r0/r1, k).

    Raises InvalidMaterialError when r1 = 0 (square-symmetric ply): the
    ratios only exist because r1 does not vanish for a unidirectional ply.
    """
    if not p.r1 > 0.0:
        raise InvalidMaterialError("r1 = 0: square-symmetric ply has no ratio form")
    return DimensionlessMaterial(
        tau0=p.t0 / p.r1, tau1=p.t1 / p.r1, rho=p.r0 / p.r1, k=p.k
    )


def determinant_delta(p: PolarParameters) -> float:
    """Determinant-like positive invariant of the stiffness tensor.

    Equals one quarter of the determinant of the 3x3 Kelvin-normalized
    stiffness matrix; it is positive exactly for positive definite tensors.
    """
    cos4 = math.cos(4.0 * (p.phi0 - p.phi1))
    return 4.0 * p.t1 * (p.t0 * p.t0 - p.r0 * p.r0) - 8.0 * p.r1 * p.r1 * (
        p.t0 - p.r0 * cos4
    )


def compliance_polar(p: PolarParameters) -> PolarParameters:
    """Polar invariants of the compliance tensor (the stiffness inverse).

    The moduli come out non-negative by construction because they are
    magnitudes of complex combinations of the stiffness invariants.
    Raises InvalidMaterialError when the determinant invariant is not
    positive (tensor not invertible as a positive definite one).
    """
    delta = determinant_delta(p)
    if delta <= 0.0:
        raise InvalidMaterialError(f"non-positive determinant invariant {delta:.4g}")
    e0 = cmath.exp(4.0j * p.phi0)
    e1 = cmath.exp(2.0j * p.phi1)
    big_phi = p.phi0 - p.phi1
    c0 = (p.r1 * p.r1 * e1 * e1 - p.t1 * p.r0 * e0) / delta
    c1 = p.r1 * e1 * (p.r0 * cmath.exp(4.0j * big_phi) - p.t0) / (2.0 * delta)
    return PolarParameters(
        t0=(p.t0 * p.t1 - p.r1 * p.r1) / delta,
        t1=(p.t0 * p.t0 - p.r0 * p.r0) / (4.0 * delta),
        r0=abs(c0),
        r1=abs(c1),
        phi0=cmath.phase(c0) / 4.0,
        phi1=cmath.phase(c1) / 2.0,
    )


def _nu12_fraction(tau0, tau1, rho, sign, xi3, xi1, theta):
    """Numerator and denominator of the directional Poisson's ratio.

    Shared kernel for the single ply (xi3 = xi1 = 1) and the laminate.
    Accepts scalar or ndarray theta. The angle is reduced modulo pi first
    (fmod is exact), so the periodicity of the ratio holds to the last bit
    whenever the shifted angle is exactly representable.
    """
    th = np.fmod(np.asarray(theta, dtype=float), np.pi)
    c2 = np.cos(2.0 * th)
    c4 = np.cos(4.0 * th)
    iso = 2.0 * (tau0 * tau1 - xi3 * xi3)
    aniso = tau0 * tau0 - rho * rho * xi1 * xi1
    direct = 2.0 * (xi3 * xi3 - sign * tau1 * rho * xi1)
    num = iso - aniso + direct * c4
    den = iso + aniso + direct * c4 + 4.0 * xi3 * (sign * rho * xi1 - tau0) * c2
    return num, den


def _checked_ratio(num, den, scale):
    """num/den with a pole guard relative to the given tensor scale."""
    if np.any(np.asarray(den) <= POLE_RTOL * scale):
        raise PoleError("Poisson's ratio denominator vanished: input is not positive definite")
    out = num / den
    return float(out) if np.isscalar(out) or out.ndim == 0 else out


def nu12_ply(m: DimensionlessMaterial, theta) -> float | np.ndarray:
    """Directional Poisson's ratio of the single ply.

    theta is measured from the fiber direction; scalar or ndarray.
    """
    num, den = _nu12_fraction(m.tau0, m.tau1, m.rho, m.sign, 1.0, 1.0, theta)
    return _checked_ratio(num, den, 2.0 * m.tau0 * m.tau1 + m.tau0 * m.tau0)


def nu12_from_compliance(s: PolarParameters, theta) -> float | np.ndarray:
    """Directional Poisson's ratio evaluated from compliance polar invariants.

    Independent route used to cross-check the stiffness-side formula: the
    ratio is -s12(theta)/s11(theta) written with the compliance invariants.
    """
    th = np.fmod(np.asarray(theta, dtype=float), np.pi)
    a0 = s.r0 * np.cos(4.0 * (s.phi0 - th))
    num = s.t0 - 2.0 * s.t1 + a0
    den = s.t0 + 2.0 * s.t1 + a0 + 4.0 * s.r1 * np.cos(2.0 * (s.phi1 - th))
    return _checked_ratio(num, den, s.t0 + 2.0 * s.t1)
