"""Independent matrix-route reference implementations for cross-checks.

Everything here works on explicit 3x3 matrices in contracted notation with
engineering shear strain and classical transformation formulas, never
touching the polar-invariant code paths under test.
"""

from __future__ import annotations

import numpy as np


def q_matrix(e1: float, e2: float, g12: float, nu12: float) -> np.ndarray:
    """Plane-stress stiffness from engineering constants, via compliance."""
    s = np.array(
        [
            [1.0 / e1, -nu12 / e1, 0.0],
            [-nu12 / e1, 1.0 / e2, 0.0],
            [0.0, 0.0, 1.0 / g12],
        ]
    )
    return np.linalg.inv(s)


def rotate_stiffness(q: np.ndarray, angle: float) -> np.ndarray:
    """Stiffness of the same material rotated by +angle (classical formulas)."""
    c, s = np.cos(angle), np.sin(angle)
    q11, q12, q22, q66 = q[0, 0], q[0, 1], q[1, 1], q[2, 2]
    q16, q26 = q[0, 2], q[1, 2]
    assert abs(q16) < 1e-12 and abs(q26) < 1e-12, "material frame expected"
    c2, s2 = c * c, s * s
    c4, s4 = c2 * c2, s2 * s2
    sc = s * c
    b11 = q11 * c4 + 2.0 * (q12 + 2.0 * q66) * s2 * c2 + q22 * s4
    b12 = (q11 + q22 - 4.0 * q66) * s2 * c2 + q12 * (s4 + c4)
    b22 = q11 * s4 + 2.0 * (q12 + 2.0 * q66) * s2 * c2 + q22 * c4
    b16 = (q11 - q12 - 2.0 * q66) * sc * c2 + (q12 - q22 + 2.0 * q66) * sc * s2
    b26 = (q11 - q12 - 2.0 * q66) * sc * s2 + (q12 - q22 + 2.0 * q66) * sc * c2
    b66 = (q11 + q22 - 2.0 * q12 - 2.0 * q66) * s2 * c2 + q66 * (s4 + c4)
    return np.array([[b11, b12, b16], [b12, b22, b26], [b16, b26, b66]])


def rotate_general(q: np.ndarray, angle: float) -> np.ndarray:
    """Rotation of a stiffness matrix with nonzero shear couplings.

    Material rotated by +angle: congruence with the inverse stress
    transformation, q_rot = T(-a) q T(-a)^T.
    """
    c, s = np.cos(angle), np.sin(angle)
    t = np.array(
        [
            [c * c, s * s, -2.0 * s * c],
            [s * s, c * c, 2.0 * s * c],
            [s * c, -s * c, c * c - s * s],
        ]
    )
    return t @ q @ t.T


def nu12_direct(q: np.ndarray, theta: float) -> float:
    """-s12/s11 in the frame rotated by theta, from matrix inversion."""
    s = np.linalg.inv(rotate_general(q, -theta))
    return -s[0, 1] / s[0, 0]


def nu21_direct(q: np.ndarray, theta: float) -> float:
    """-s12/s22 in the frame rotated by theta."""
    s = np.linalg.inv(rotate_general(q, -theta))
    return -s[0, 1] / s[1, 1]


def laminate_stiffness(q: np.ndarray, angles) -> np.ndarray:
    """Extension stiffness of an equal-thickness stack of identical plies."""
    return np.mean([rotate_stiffness(q, a) for a in angles], axis=0)


def polar_of_matrix(mat: np.ndarray, shear_factor: float):
    """Polar decomposition of a 3x3 contracted-notation matrix.

    shear_factor converts the contracted 66 entry to the tensor component
    (1 for stiffness, 4 for compliance with engineering shear strain).
    Returns (t0, t1, complex r0-vector, complex r1-vector).
    """
    xxxx, xxyy, yyyy = mat[0, 0], mat[0, 1], mat[1, 1]
    xyxy = mat[2, 2] / shear_factor
    t0 = (xxxx - 2.0 * xxyy + 4.0 * xyxy + yyyy) / 8.0
    t1 = (xxxx + 2.0 * xxyy + yyyy) / 8.0
    c0 = complex((xxxx - 2.0 * xxyy - 4.0 * xyxy + yyyy) / 8.0, 0.0)
    c1 = complex((xxxx - yyyy) / 8.0, 0.0)
    return t0, t1, c0, c1


def kelvin_determinant(q: np.ndarray) -> float:
    """Determinant of the Kelvin-normalized 3x3 stiffness matrix."""
    k = np.array(
        [
            [q[0, 0], q[0, 1], np.sqrt(2.0) * q[0, 2]],
            [q[0, 1], q[1, 1], np.sqrt(2.0) * q[1, 2]],
            [np.sqrt(2.0) * q[0, 2], np.sqrt(2.0) * q[1, 2], 2.0 * q[2, 2]],
        ]
    )
    return float(np.linalg.det(k))
