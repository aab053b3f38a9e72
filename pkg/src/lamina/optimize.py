"""Auxeticity feasibility and the two optimization problems.

Three questions are answered for a given ply material:

* feasibility: can any lamination point make the laminate auxetic somewhere
  (negative margin), and what does the feasible region look like;
* minimum Poisson's ratio over lamination points and directions;
* widest auxetic angular zone over lamination points.

The zone maximization has a closed form on the parabolic boundary; the ratio
minimization combines per-point stationary directions (a quadratic in
cos 2*theta) with a lattice sweep and derivative-free refinement. A plain
exhaustive lattice search is provided to cross-check both optimizers.

All searches operate on the canonical half-domain xi3 >= 0; mirrored
solutions (xi3 < 0) correspond to the same stacks rotated by a quarter turn.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import DomainError
from .laminate import (
    AuxeticZone,
    LaminationPoint,
    delta_from_point,
    in_domain,
    nu12_laminate,
    zone_from_threshold,
    zone_threshold_on_boundary,
)
from .material import DimensionlessMaterial

#: Refined optima closer than this to the parabola are projected onto it.
BOUNDARY_SNAP_TOL = 1e-6
#: Ties in objective value are broken toward the smaller direction angle.
TIE_TOL = 1e-12


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of the auxeticity feasibility test for one material.

    ``xi_boundary`` holds the zero-margin contour clipped to the lamination
    domain, as one polyline (tuple of points) per connected piece.
    """

    feasible: bool
    eta_min: float
    argmin: LaminationPoint
    xi_boundary: tuple[tuple[LaminationPoint, ...], ...]


@dataclass(frozen=True)
class MinNuResult:
    """Global minimum of the laminate Poisson's ratio.

    ``delta`` is the angle-ply half angle when the optimal point lies on the
    parabolic boundary, else None.
    """

    nu_min: float
    theta: float
    point: LaminationPoint
    delta: float | None


@dataclass(frozen=True)
class MaxZoneResult:
    """Widest auxetic zone and the boundary point realizing it.

    ``clamped`` records that the threshold maximum sat at an interval
    endpoint rather than at an interior stationary point.
    """

    point: LaminationPoint
    lambda_max: float
    zone: AuxeticZone
    delta: float
    nu_min: float
    theta_min: float
    clamped: bool


@dataclass(frozen=True)
class GridSpec:
    """Lattice resolutions for the exhaustive search (per axis, >= 201)."""

    n_xi3: int = 1001
    n_xi1: int = 1001
    n_theta: int = 1801

    def __post_init__(self):
        if min(self.n_xi3, self.n_xi1, self.n_theta) < 201:
            raise ValueError("lattice resolutions must be at least 201 per axis")


# ---------------------------------------------------------------------------
# auxeticity margin (minimum of the sign numerator over directions)
# ---------------------------------------------------------------------------


def _margin(m: DimensionlessMaterial, xi3, xi1):
    """Vectorized auxeticity margin at (xi3, xi1)."""
    iso = 2.0 * (m.tau0 * m.tau1 - xi3 * xi3)
    aniso = m.tau0 * m.tau0 - m.rho * m.rho * xi1 * xi1
    direct = 2.0 * (xi3 * xi3 - m.sign * m.tau1 * m.rho * xi1)
    return iso - aniso - np.abs(direct)


def auxetic_margin(m: DimensionlessMaterial, p: LaminationPoint) -> float:
    """Minimum over directions of the Poisson's-ratio sign numerator.

    Negative exactly when some direction of the laminate at p is auxetic.
    """
    if not in_domain(p):
        raise DomainError(f"({p.xi3:.6g}, {p.xi1:.6g}) outside the lamination domain")
    return float(_margin(m, p.xi3, p.xi1))


# ---------------------------------------------------------------------------
# per-point direction minimization
# ---------------------------------------------------------------------------

_ENDPOINT_C2 = np.array([1.0, 0.0, -1.0])  # theta = 0, pi/4, pi/2


def _nu_of_c2(m: DimensionlessMaterial, xi3, xi1, c2):
    """nu12 evaluated through cos 2*theta (cos 4*theta = 2*c2**2 - 1)."""
    c4 = 2.0 * c2 * c2 - 1.0
    iso = 2.0 * (m.tau0 * m.tau1 - xi3 * xi3)
    aniso = m.tau0 * m.tau0 - m.rho * m.rho * xi1 * xi1
    direct = 2.0 * (xi3 * xi3 - m.sign * m.tau1 * m.rho * xi1)
    num = iso - aniso + direct * c4
    den = iso + aniso + direct * c4 + 4.0 * xi3 * (m.sign * m.rho * xi1 - m.tau0) * c2
    return np.where(den > 0.0, num / np.where(den > 0.0, den, 1.0), np.inf)


def _stationary_c2(m: DimensionlessMaterial, xi3, xi1):
    """The two stationary-direction roots in cos 2*theta (NaN where absent).

    Setting the theta derivative of nu12 to zero and factoring out sin
    2*theta leaves a quadratic in cos 2*theta with the coefficients below.
    Vectorized over (xi3, xi1).
    """
    x3 = np.atleast_1d(np.asarray(xi3, dtype=float))
    x1 = np.atleast_1d(np.asarray(xi1, dtype=float))
    b = x3 * x3 - m.sign * m.tau1 * m.rho * x1
    n4 = 2.0 * b
    n0 = 2.0 * (m.tau0 * m.tau1 - x3 * x3) - m.tau0 * m.tau0 + m.rho * m.rho * x1 * x1
    d2 = 4.0 * x3 * (m.sign * m.rho * x1 - m.tau0)
    qa = -2.0 * n4 * d2
    qb = -8.0 * n4 * (m.tau0 * m.tau0 - m.rho * m.rho * x1 * x1)
    qc = d2 * (n0 - n4)

    scale = 1.0 + np.abs(qa) + np.abs(qb) + np.abs(qc)
    quad = np.abs(qa) > 1e-14 * scale
    lin = ~quad & (np.abs(qb) > 1e-14 * scale)

    root1 = np.full(x3.shape, np.nan)
    root2 = np.full(x3.shape, np.nan)
    with np.errstate(invalid="ignore", divide="ignore"):
        disc = qb * qb - 4.0 * qa * qc
        ok = quad & (disc >= 0.0)
        sq = np.sqrt(np.where(ok, disc, 0.0))
        root1 = np.where(ok, (-qb + sq) / (2.0 * qa), root1)
        root2 = np.where(ok, (-qb - sq) / (2.0 * qa), root2)
        root1 = np.where(lin, -qc / np.where(lin, qb, 1.0), root1)
    for r in (root1, root2):
        bad = np.abs(r) > 1.0 + 1e-10
        r[bad] = np.nan
        np.clip(r, -1.0, 1.0, out=r)
    return root1, root2


def _min_nu_grid(m: DimensionlessMaterial, xi3, xi1):
    """Vectorized (nu_min, theta_min) over directions at each point."""
    x3 = np.atleast_1d(np.asarray(xi3, dtype=float))
    x1 = np.atleast_1d(np.asarray(xi1, dtype=float))
    root1, root2 = _stationary_c2(m, x3, x1)
    cands = np.stack(
        [
            np.broadcast_to(_ENDPOINT_C2[0], x3.shape),
            np.broadcast_to(_ENDPOINT_C2[1], x3.shape),
            np.broadcast_to(_ENDPOINT_C2[2], x3.shape),
            root1,
            root2,
        ]
    )
    with np.errstate(invalid="ignore"):
        vals = _nu_of_c2(m, x3[None, ...], x1[None, ...], cands)
        vals = np.where(np.isnan(cands), np.inf, vals)
        nu = vals.min(axis=0)
        # smallest theta among near-ties, i.e. the largest admissible c2
        tol = TIE_TOL * (1.0 + np.abs(nu))
        tied_c2 = np.where(vals <= nu + tol, cands, -np.inf)
        theta = 0.5 * np.arccos(np.clip(tied_c2.max(axis=0), -1.0, 1.0))
    return nu, theta


def min_nu12_at_point(
    m: DimensionlessMaterial, p: LaminationPoint
) -> tuple[float, float]:
    """Minimum of nu12 over directions at a fixed lamination point.

    Evaluates the stationary directions (both quadratic roots) together with
    the interval endpoints 0, pi/4, pi/2 and returns the smallest value with
    its direction; ties resolve to the smaller angle. Near-degenerate
    quadratics additionally fall back to a dense direction sweep with local
    refinement.
    """
    if not in_domain(p):
        raise DomainError(f"({p.xi3:.6g}, {p.xi1:.6g}) outside the lamination domain")
    nu_arr, th_arr = _min_nu_grid(m, p.xi3, p.xi1)
    nu, theta = float(nu_arr[0]), float(th_arr[0])

    quad_scale = abs(p.xi3) * abs(p.xi3 * p.xi3 - m.sign * m.tau1 * m.rho * p.xi1)
    if quad_scale < 1e-12:
        thetas = np.linspace(0.0, np.pi / 2.0, 1801)
        vals = nu12_laminate(m, p, thetas)
        j = int(np.argmin(vals))
        lo = thetas[max(0, j - 1)]
        hi = thetas[min(len(thetas) - 1, j + 1)]
        res = minimize_scalar(
            lambda t: float(nu12_laminate(m, p, t)),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-12},
        )
        if res.fun < nu - TIE_TOL * (1.0 + abs(nu)):
            nu, theta = float(res.fun), float(res.x)
    return nu, theta


# ---------------------------------------------------------------------------
# global minimum of nu12
# ---------------------------------------------------------------------------


def _project_into_domain(x3: float, x1: float) -> tuple[float, float]:
    x3 = min(1.0, max(0.0, x3))
    x1 = min(1.0, max(2.0 * x3 * x3 - 1.0, x1))
    return x3, x1


_COMPASS_MOVES = (
    (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0),
    (1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0),
)


def _compass_refine(objective, x3: float, x1: float, step: float):
    """Derivative-free descent over the half-domain with projection.

    Diagonal moves let the pattern slide along the curved boundary of the
    projection instead of stalling against it.
    """
    best = objective(x3, x1)
    while step > 1e-9:
        moved = False
        for dx3, dx1 in _COMPASS_MOVES:
            t3, t1 = _project_into_domain(x3 + dx3 * step, x1 + dx1 * step)
            val = objective(t3, t1)
            if val < best - TIE_TOL * (1.0 + abs(best)):
                best, x3, x1 = val, t3, t1
                moved = True
        if not moved:
            step *= 0.5
    return best, x3, x1


def _polish_on_parabola(objective_1d, xs, scan_values):
    """Cell-local polish around the best entry of a dense boundary scan."""
    j = int(np.argmin(scan_values))
    lo = float(xs[max(0, j - 1)])
    hi = float(xs[min(len(xs) - 1, j + 1)])
    res = minimize_scalar(
        objective_1d, bounds=(lo, hi), method="bounded", options={"xatol": 1e-11}
    )
    if res.fun <= scan_values[j]:
        return float(res.fun), float(res.x)
    return float(scan_values[j]), float(xs[j])


def min_nu12_global(m: DimensionlessMaterial, coarse: int = 101) -> MinNuResult:
    """Global minimum of nu12 over the lamination domain and directions.

    Three stages: a coarse lattice sweep of the per-point direction minimum
    over the canonical half-domain, a pattern-search refinement of the
    lattice best (interior candidate), and a dense scan of the parabolic
    boundary with a cell-local polish (boundary candidate). The better of
    the two candidates wins, with boundary preferred on ties; an optimum
    within 1e-6 of the parabola is projected onto it exactly and annotated
    with its angle-ply half angle.
    """
    g3 = np.linspace(0.0, 1.0, coarse)
    g1 = np.linspace(-1.0, 1.0, coarse)
    X3, X1 = np.meshgrid(g3, g1, indexing="ij")
    mask = 2.0 * X3 * X3 - 1.0 <= X1 + 1e-12
    f3, f1 = X3[mask], X1[mask]
    nu, _ = _min_nu_grid(m, f3, f1)
    j = int(np.argmin(nu))
    h = float(g3[1] - g3[0])

    def objective(a3, a1):
        return float(_min_nu_grid(m, a3, a1)[0][0])

    best, x3, x1 = _compass_refine(objective, float(f3[j]), float(f1[j]), 2.0 * h)

    xs = np.linspace(0.0, 1.0, 2001)
    scan, _ = _min_nu_grid(m, xs, 2.0 * xs * xs - 1.0)
    b_val, b_x3 = _polish_on_parabola(
        lambda a3: objective(a3, 2.0 * a3 * a3 - 1.0), xs, scan
    )
    if b_val <= best + TIE_TOL * (1.0 + abs(best)):
        best, x3, x1 = b_val, b_x3, 2.0 * b_x3 * b_x3 - 1.0

    delta = None
    if abs(x1 - (2.0 * x3 * x3 - 1.0)) <= BOUNDARY_SNAP_TOL:
        x1 = 2.0 * x3 * x3 - 1.0
    point = LaminationPoint(xi3=x3, xi1=x1)
    nu_min, theta = min_nu12_at_point(m, point)
    if point.on_parabola():
        delta = delta_from_point(point)
    return MinNuResult(nu_min=nu_min, theta=theta, point=point, delta=delta)


# ---------------------------------------------------------------------------
# widest auxetic zone
# ---------------------------------------------------------------------------


def _threshold_support(m: DimensionlessMaterial) -> tuple[float, float]:
    """xi1 interval of the parabolic boundary with positive directional term.

    The term is linear in xi1 and positive at xi1 = 0; outside its positive
    interval the zone is empty for laminates of non-auxetic plies, so the
    threshold maximization is restricted to it.
    """
    q = 1.0 - 2.0 * m.sign * m.tau1 * m.rho
    lo, hi = -1.0, 1.0
    if q > 0.0 and -1.0 / q > -1.0:
        lo = -1.0 / q
    elif q < 0.0 and -1.0 / q < 1.0:
        hi = -1.0 / q
    return lo, hi


def max_zone(m: DimensionlessMaterial) -> MaxZoneResult:
    """Widest auxetic zone over lamination points for the given material.

    The threshold on cos(4*theta) increases with xi3 at fixed xi1, so the
    search reduces to the parabolic boundary, where the stationary points of
    the restricted threshold solve a quadratic in xi1. Stationary candidates
    inside the admissible interval compete with its finite endpoints; when
    an endpoint wins, the result is flagged as clamped. A dense sweep with
    bounded polish backs up the closed form.
    """
    lo, hi = _threshold_support(m)
    pole_lo = lo > -1.0
    pole_hi = hi < 1.0
    # shrink away from the pole where the threshold diverges to -inf
    s_lo = lo + 1e-9 if pole_lo else lo
    s_hi = hi - 1e-9 if pole_hi else hi

    q = 1.0 - 2.0 * m.sign * m.tau1 * m.rho
    r2 = m.rho * m.rho
    # stationary points of the boundary threshold: q*r2*x^2 + 2*r2*x - c0 = 0
    c0 = 1.0 - q * (m.tau0 * m.tau0 - 2.0 * m.tau0 * m.tau1 + 1.0)
    candidates: list[tuple[float, float, bool]] = []

    def add_candidate(x1: float, clamped: bool):
        if s_lo <= x1 <= s_hi:
            lam = float(zone_threshold_on_boundary(m, x1))
            candidates.append((lam, x1, clamped))

    if abs(q) * r2 > 1e-14:
        disc = 4.0 * r2 * r2 + 4.0 * q * r2 * c0
        if disc >= 0.0:
            sq = math.sqrt(disc)
            add_candidate((-2.0 * r2 + sq) / (2.0 * q * r2), False)
            add_candidate((-2.0 * r2 - sq) / (2.0 * q * r2), False)
    elif r2 > 1e-14:
        add_candidate(c0 / (2.0 * r2), False)
    if not pole_lo:
        add_candidate(lo, True)
    if not pole_hi:
        add_candidate(hi, True)

    # defensive sweep, polished, in case the closed form missed the max
    grid = np.linspace(s_lo, s_hi, 4097)
    lam_grid = zone_threshold_on_boundary(m, grid)
    jg = int(np.argmax(lam_grid))
    res = minimize_scalar(
        lambda x1: -float(zone_threshold_on_boundary(m, x1)),
        bounds=(grid[max(0, jg - 1)], grid[min(len(grid) - 1, jg + 1)]),
        method="bounded",
        options={"xatol": 1e-12},
    )
    swept = float(res.x)
    for endpoint, present in ((lo, not pole_lo), (hi, not pole_hi)):
        if present and abs(swept - endpoint) <= 1e-9:
            swept = endpoint
            add_candidate(endpoint, True)
            break
    else:
        add_candidate(swept, False)

    if not candidates:
        raise DomainError("no admissible boundary interval for the zone threshold")
    # max threshold; ties resolve to larger xi1 (smaller angle-ply angle)
    lam_max, x1_opt, clamped = max(candidates, key=lambda c: (c[0], c[1], not c[2]))

    xi3 = math.sqrt((x1_opt + 1.0) / 2.0)
    point = LaminationPoint(xi3=xi3, xi1=x1_opt)
    zone = zone_from_threshold(lam_max)
    delta = delta_from_point(point)
    nu_min, theta_min = min_nu12_at_point(m, point)
    axis_nu = nu12_laminate(m, point, 0.0)
    if axis_nu <= 0.0:
        warnings.warn(
            f"nu12 at theta = 0 is {axis_nu:.4g} <= 0, violating axis positivity "
            "for laminates of non-auxetic plies; input material is suspect",
            stacklevel=2,
        )
    return MaxZoneResult(
        point=point,
        lambda_max=lam_max,
        zone=zone,
        delta=delta,
        nu_min=nu_min,
        theta_min=theta_min,
        clamped=clamped,
    )


# ---------------------------------------------------------------------------
# feasibility and the zero-margin contour
# ---------------------------------------------------------------------------


def _chain_segments(segments):
    """Order marching-squares segments (pairs of edge ids) into chains."""
    adjacency: dict = {}
    for a, b in segments:
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    seen = set()
    chains = []
    # deterministic iteration: sorted edge ids, endpoints (degree 1) first
    order = sorted(adjacency, key=lambda e: (len(adjacency[e]) != 1, e))
    for start in order:
        if start in seen:
            continue
        chain = [start]
        seen.add(start)
        while True:
            nxt = [e for e in adjacency[chain[-1]] if e not in seen]
            if not nxt:
                break
            nxt.sort()
            chain.append(nxt[0])
            seen.add(nxt[0])
        if len(adjacency[start]) > 1 and len(chain) > 2:
            first = [e for e in adjacency[start] if e == chain[-1]]
            if first:
                chain.append(start)  # closed loop
        chains.append(chain)
    return chains


_CELL_EDGES = {
    1: [("w", "s")], 2: [("s", "e")], 3: [("w", "e")], 4: [("e", "n")],
    5: [("w", "n"), ("s", "e")], 6: [("s", "n")], 7: [("w", "n")],
    8: [("n", "w")], 9: [("n", "s")], 10: [("n", "e"), ("w", "s")],
    11: [("n", "e")], 12: [("e", "w")], 13: [("e", "s")], 14: [("s", "w")],
}


def _zero_contour(func, xs, ys, values):
    """Marching squares with per-edge root polishing.

    func(x, y) is the scalar field, values its samples on the xs-by-ys grid.
    Returns polylines as lists of (x, y) with each vertex polished along its
    grid edge to |func| below 1e-12 of scale.
    """
    pos = values > 0.0
    nx, ny = len(xs), len(ys)
    point_cache: dict = {}

    def edge_point(edge_id):
        if edge_id in point_cache:
            return point_cache[edge_id]
        kind, i, j = edge_id
        if kind == "h":
            (x0, y0), (x1, y1) = (xs[i], ys[j]), (xs[i + 1], ys[j])
        else:
            (x0, y0), (x1, y1) = (xs[i], ys[j]), (xs[i], ys[j + 1])
        f0, f1 = func(x0, y0), func(x1, y1)
        if f0 == 0.0:
            pt = (x0, y0)
        elif f1 == 0.0:
            pt = (x1, y1)
        else:
            t = brentq(
                lambda u: func(x0 + u * (x1 - x0), y0 + u * (y1 - y0)),
                0.0, 1.0, xtol=1e-14,
            )
            pt = (x0 + t * (x1 - x0), y0 + t * (y1 - y0))
        point_cache[edge_id] = pt
        return pt

    segments = []
    for i in range(nx - 1):
        for j in range(ny - 1):
            code = (
                (8 if pos[i, j + 1] else 0)
                | (4 if pos[i + 1, j + 1] else 0)
                | (2 if pos[i + 1, j] else 0)
                | (1 if pos[i, j] else 0)
            )
            if code in (0, 15):
                continue
            pairs = _CELL_EDGES[code]
            if code in (5, 10):
                center = func(0.5 * (xs[i] + xs[i + 1]), 0.5 * (ys[j] + ys[j + 1]))
                if center <= 0.0:
                    pairs = _CELL_EDGES[15 - code]
            names = {
                "s": ("h", i, j), "n": ("h", i, j + 1),
                "w": ("v", i, j), "e": ("v", i + 1, j),
            }
            for a, b in pairs:
                segments.append((names[a], names[b]))

    polylines = []
    for chain in _chain_segments(segments):
        polylines.append([edge_point(e) for e in chain])
    return polylines


def feasibility(
    m: DimensionlessMaterial, grid: int = 201, contour_grid: int = 257
) -> FeasibilityResult:
    """Minimize the auxeticity margin and extract its zero contour.

    The margin minimum is located by a lattice sweep over the half-domain
    combined with a dense scan of the parabolic boundary, then refined
    (compass search and a bounded boundary polish). The zero contour is
    extracted by marching squares over the full domain with per-edge root
    polishing, keeping only points inside the lamination domain.
    """
    g3 = np.linspace(0.0, 1.0, grid)
    g1 = np.linspace(-1.0, 1.0, grid)
    X3, X1 = np.meshgrid(g3, g1, indexing="ij")
    mask = 2.0 * X3 * X3 - 1.0 <= X1 + 1e-12
    vals = np.where(mask, _margin(m, X3, X1), np.inf)
    j = np.unravel_index(int(np.argmin(vals)), vals.shape)

    def objective(a3, a1):
        return float(_margin(m, a3, a1))

    best, x3, x1 = _compass_refine(
        objective, float(X3[j]), float(X1[j]), 2.0 / (grid - 1)
    )

    b3 = np.linspace(0.0, 1.0, 2001)
    bvals = _margin(m, b3, 2.0 * b3 * b3 - 1.0)
    b_val, b_x3 = _polish_on_parabola(
        lambda a3: objective(a3, 2.0 * a3 * a3 - 1.0), b3, bvals
    )
    if b_val <= best + TIE_TOL * (1.0 + abs(best)):
        best, x3, x1 = b_val, b_x3, 2.0 * b_x3 * b_x3 - 1.0
    if abs(x1 - (2.0 * x3 * x3 - 1.0)) <= BOUNDARY_SNAP_TOL:
        x1 = 2.0 * x3 * x3 - 1.0
    argmin = LaminationPoint(xi3=x3, xi1=x1)
    eta_min = float(_margin(m, x3, x1))

    polylines = []
    if eta_min < 0.0:
        cx = np.linspace(-1.0, 1.0, contour_grid)
        cy = np.linspace(-1.0, 1.0, contour_grid)
        CX, CY = np.meshgrid(cx, cy, indexing="ij")
        cvals = _margin(m, CX, CY)
        raw = _zero_contour(lambda a, b: float(_margin(m, a, b)), cx, cy, cvals)
        for line in raw:
            run: list[LaminationPoint] = []
            for x, y in line:
                p = LaminationPoint(xi3=x, xi1=y)
                if in_domain(p):
                    run.append(p)
                elif len(run) >= 2:
                    polylines.append(tuple(run))
                    run = []
                else:
                    run = []
            if len(run) >= 2:
                polylines.append(tuple(run))

    return FeasibilityResult(
        feasible=eta_min < 0.0,
        eta_min=eta_min,
        argmin=argmin,
        xi_boundary=tuple(polylines),
    )


# ---------------------------------------------------------------------------
# exhaustive lattice search
# ---------------------------------------------------------------------------


def brute_force_search(
    m: DimensionlessMaterial, grid: GridSpec = GridSpec()
) -> tuple[MinNuResult, MaxZoneResult]:
    """Exhaustive lattice evaluation for cross-checking the optimizers.

    nu12 is evaluated on the full (xi3, xi1, theta) lattice restricted to the
    canonical half-domain and the zone threshold on the (xi3, xi1) lattice
    where its directional term is positive; the lattice optima are returned
    in the same result types as the refined searches. The zone result's
    direction minimum is taken on the theta lattice, keeping this path
    independent of the closed-form direction solver.
    """
    xi3s = np.linspace(0.0, 1.0, grid.n_xi3)
    xi1s = np.linspace(-1.0, 1.0, grid.n_xi1)
    thetas = np.linspace(0.0, np.pi / 2.0, grid.n_theta)
    c2 = np.cos(2.0 * thetas)
    c4 = np.cos(4.0 * thetas)

    best_nu = np.inf
    best_idx = (0.0, 0.0, 0.0)
    lam_best = -np.inf
    lam_point = (1.0, 1.0)
    t0, t1, rho, sg = m.tau0, m.tau1, m.rho, m.sign
    for x3 in xi3s:
        x1 = xi1s[xi1s >= 2.0 * x3 * x3 - 1.0 - 1e-12]
        if x1.size == 0:
            continue
        iso = 2.0 * (t0 * t1 - x3 * x3)
        aniso = t0 * t0 - rho * rho * x1 * x1
        direct = 2.0 * (x3 * x3 - sg * t1 * rho * x1)
        num = (iso - aniso)[:, None] + direct[:, None] * c4[None, :]
        den = (
            (iso + aniso)[:, None]
            + direct[:, None] * c4[None, :]
            + (4.0 * x3 * (sg * rho * x1 - t0))[:, None] * c2[None, :]
        )
        vals = np.where(den > 0.0, num / np.where(den > 0.0, den, 1.0), np.inf)
        jj = np.unravel_index(int(np.argmin(vals)), vals.shape)
        if vals[jj] < best_nu:
            best_nu = float(vals[jj])
            best_idx = (float(x3), float(x1[jj[0]]), float(thetas[jj[1]]))

        pos = direct > 0.0
        if np.any(pos):
            lam = (aniso[pos] - iso) / direct[pos]
            jl = int(np.argmax(lam))
            if lam[jl] > lam_best:
                lam_best = float(lam[jl])
                lam_point = (float(x3), float(x1[pos][jl]))

    point = LaminationPoint(xi3=best_idx[0], xi1=best_idx[1])
    delta = delta_from_point(point) if point.on_parabola() else None
    min_result = MinNuResult(
        nu_min=best_nu, theta=best_idx[2], point=point, delta=delta
    )

    zpoint = LaminationPoint(xi3=lam_point[0], xi1=lam_point[1])
    zvals = nu12_laminate(m, zpoint, thetas)
    jz = int(np.argmin(zvals))
    zone_result = MaxZoneResult(
        point=zpoint,
        lambda_max=lam_best,
        zone=zone_from_threshold(lam_best),
        delta=0.5 * math.acos(min(1.0, max(-1.0, zpoint.xi3))),
        nu_min=float(zvals[jz]),
        theta_min=float(thetas[jz]),
        clamped=False,
    )
    return min_result, zone_result
