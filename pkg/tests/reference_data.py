"""Frozen reference values for the bundled unidirectional-ply corpus.

POLAR_MODULI and RATIO_TABLE are the tabulated polar characterization of the
15 bundled plies (GPa and dimensionless, rounded to 2 and 3 decimals as
tabulated). MIN_NU_TABLE and MAX_ZONE_TABLE are the corresponding optimum
tabulations: the lowest directional Poisson's ratio and the widest auxetic
zone per material (angles in degrees).
"""

# (T0, T1, R0, R1) per material, bundled order
POLAR_MODULI = [
    (1.66, 1.34, 0.91, 1.20),
    (26.88, 24.74, 19.71, 21.43),
    (29.80, 29.14, 24.21, 23.42),
    (12.23, 12.11, 10.09, 10.25),
    (27.52, 26.85, 24.93, 25.29),
    (10.85, 10.74, 8.75, 8.88),
    (30.67, 30.35, 23.67, 23.46),
    (19.34, 18.12, 15.14, 15.93),
    (11.98, 11.89, 9.88, 10.00),
    (39.73, 38.01, 34.83, 36.06),
    (16.89, 15.53, 11.58, 12.73),
    (19.55, 18.26, 14.52, 15.45),
    (19.02, 18.74, 15.28, 15.60),
    (20.55, 18.89, 14.27, 15.83),
    (20.00, 18.77, 13.60, 14.51),
]

# (tau0, tau1, rho) per material
RATIO_TABLE = [
    (1.383, 1.116, 0.758),
    (1.254, 1.154, 0.919),
    (1.272, 1.244, 1.033),
    (1.193, 1.181, 0.984),
    (1.088, 1.062, 0.986),
    (1.221, 1.209, 0.984),
    (1.307, 1.293, 1.009),
    (1.214, 1.138, 0.951),
    (1.198, 1.189, 0.988),
    (1.102, 1.054, 0.966),
    (1.327, 1.220, 0.910),
    (1.265, 1.182, 0.940),
    (1.219, 1.201, 0.979),
    (1.298, 1.193, 0.901),
    (1.378, 1.293, 0.937),
]

# (nu12_min, theta_deg, xi3, xi1, delta_deg)
MIN_NU_TABLE = [
    (-0.42, 31.2, 0.93, 0.72, 10.9),
    (-0.33, 39.1, 0.68, -0.07, 23.5),
    (-0.23, 41.9, 0.55, -0.39, 28.3),
    (-0.35, 40.2, 0.60, -0.27, 26.4),
    (-0.95, 34.2, 0.69, -0.03, 23.0),
    (-0.28, 40.9, 0.59, -0.29, 26.8),
    (-0.16, 42.7, 0.55, -0.39, 28.3),
    (-0.39, 38.6, 0.67, -0.11, 24.1),
    (-0.33, 40.4, 0.60, -0.28, 26.6),
    (-0.94, 33.1, 0.74, 0.10, 21.0),
    (-0.20, 41.2, 0.65, -0.16, 24.8),
    (-0.28, 40.2, 0.65, -0.16, 24.8),
    (-0.29, 40.7, 0.60, -0.27, 26.5),
    (-0.24, 40.3, 0.67, -0.10, 24.0),
    (-0.12, 42.8, 0.59, -0.29, 26.8),
]

# (xi3_opt, xi1_opt, theta1, theta2, delta_theta, delta, nu12_min, theta_min)
MAX_ZONE_TABLE = [
    (1.00, 1.00, 8.9, 81.1, 72.2, 0.0, -0.39, 27.2),
    (0.88, 0.54, 23.6, 66.4, 42.8, 14.3, -0.19, 37.2),
    (0.73, 0.07, 30.7, 59.3, 28.6, 21.5, -0.16, 41.1),
    (0.81, 0.31, 26.9, 63.1, 36.2, 18.0, -0.21, 38.9),
    (0.94, 0.75, 16.2, 73.8, 57.6, 10.3, -0.36, 30.5),
    (0.78, 0.22, 28.6, 61.4, 32.7, 19.3, -0.18, 39.9),
    (0.69, -0.04, 33.0, 56.9, 23.9, 23.1, -0.12, 42.3),
    (0.87, 0.53, 22.9, 67.0, 44.0, 14.5, -0.21, 36.6),
    (0.80, 0.28, 27.4, 62.6, 35.1, 18.5, -0.21, 39.2),
    (0.96, 0.85, 13.9, 76.0, 62.1, 8.0, -0.31, 28.9),
    (0.81, 0.31, 28.3, 61.7, 33.3, 17.9, -0.14, 40.2),
    (0.83, 0.39, 26.2, 63.8, 37.6, 16.8, -0.17, 38.8),
    (0.79, 0.25, 28.1, 61.9, 33.8, 18.8, -0.19, 39.7),
    (0.84, 0.43, 26.3, 63.7, 37.3, 16.2, -0.16, 39.0),
    (0.72, 0.03, 32.9, 57.1, 24.1, 22.1, -0.10, 42.4),
]

#: Materials whose widest zone exceeds 45 degrees (positive threshold max).
WIDE_ZONE_INDICES = {1, 5, 10}
