"""Float maximization of the objectives over E: interior roots, edges and grids."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Optional, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .app_constants import PUBLISHED_BOUNDS, PUBLISHED_EDGES, PublishedEdge
from .certify import certified_max
from .objectives import REGION, SQRT_GUARD, BoundFunction, OptimizationResult, get_bound_function

DEFAULT_TOL = 1e-10
NEWTON_STARTS = 50
NEWTON_MAX_ITER = 60
MAX_HALVINGS = 30
DEDUP_DISTANCE = 1e-6
INTERIOR_MARGIN = 1e-9
EDGE_SCAN = 2000
EDGE_ORDER = ("y0", "x0", "x1", "curve")

# A function of the edge parameter.
EdgeMap = Callable[[Any], Any]


@dataclass(frozen=True)
class EdgeReport:
    edge: str
    result: OptimizationResult
    published: Optional[PublishedEdge]

    @property
    def matches(self) -> Optional[bool]:
        if self.published is None:
            return None
        return prefix_matches(self.result.value, self.published.value, rounded=self.published.rounded)

    @property
    def reference_gap(self) -> Optional[float]:
        if self.published is None or self.published.reference is None:
            return None
        return abs(self.result.value - float(self.published.reference))


@dataclass(frozen=True)
class H31Bound:
    b1: float
    b2: float
    total: float
    method: str
    b1_result: OptimizationResult
    b2_result: OptimizationResult
    b2_enclosure: Optional[Tuple[float, float]] = None
    total_enclosure: Optional[Tuple[float, float]] = None

    @property
    def published(self) -> str:
        return PUBLISHED_BOUNDS["h31"].value

    @property
    def announced(self) -> Optional[str]:
        return PUBLISHED_BOUNDS["h31"].announced


def truncation_range(published: str, digits: Optional[int] = None) -> Tuple[float, float]:
    """[start, end) of the reals whose leading significant digits read ``published``."""
    value = float(published)
    significant = published.replace(".", "").lstrip("0")
    count = len(significant) if digits is None else digits
    magnitude = math.floor(math.log10(value)) if value else 0
    step = 10.0 ** (magnitude - count + 1)
    start = math.floor(value / step + 1e-9) * step
    return start, start + step


def rounding_range(published: str, digits: Optional[int] = None) -> Tuple[float, float]:
    """[start, end) of the reals that round to ``published`` at its last digit."""
    start, end = truncation_range(published, digits)
    half = 0.5 * (end - start)
    return start - half, end - half


def published_range(published: str, digits: Optional[int] = None, rounded: bool = False) -> Tuple[float, float]:
    return (rounding_range if rounded else truncation_range)(published, digits)


def prefix_matches(value: float, published: str, digits: Optional[int] = None, rounded: bool = False) -> bool:
    start, end = published_range(published, digits, rounded)
    return start - 1e-12 <= value < end


def enclosure_matches(
    enclosure: Tuple[float, float], published: str, digits: Optional[int] = None, rounded: bool = False
) -> bool:
    start, end = published_range(published, digits, rounded)
    lo, hi = enclosure
    return lo < end and hi >= start - 1e-12


def _start_points(n: int) -> Tuple[np.ndarray, np.ndarray]:
    t = (np.arange(n) + 0.5) / n
    xs = np.repeat(t, n)
    ys = np.tile(t, n) * REGION.y_max(xs)
    return xs, ys


def _inside(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return REGION.strictly_inside(x, y, INTERIOR_MARGIN)


def _newton(fn: BoundFunction, x: np.ndarray, y: np.ndarray, tol: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Damped Newton on grad fn = 0, vectorized over all starts."""
    alive = _inside(x, y)
    for _ in range(NEWTON_MAX_ITER):
        gx = np.zeros_like(x)
        gy = np.zeros_like(y)
        gx[alive], gy[alive] = fn.gradient(x[alive], y[alive])
        norm = np.hypot(gx, gy)
        idx = np.flatnonzero(alive & (norm >= tol))
        if idx.size == 0:
            break
        hxx, hxy, hyy = fn.hessian(x[idx], y[idx])
        det = hxx * hyy - hxy * hxy
        with np.errstate(divide="ignore", invalid="ignore"):
            dx = (hxy * gy[idx] - hyy * gx[idx]) / det
            dy = (hxy * gx[idx] - hxx * gy[idx]) / det
        step = np.ones(idx.size)
        accepted = np.zeros(idx.size, dtype=bool)
        pending = np.isfinite(dx) & np.isfinite(dy)
        for _ in range(MAX_HALVINGS):
            if not pending.any():
                break
            p = np.flatnonzero(pending)
            tx = x[idx[p]] + step[p] * dx[p]
            ty = y[idx[p]] + step[p] * dy[p]
            inside = _inside(tx, ty)
            ok = np.zeros(p.size, dtype=bool)
            if inside.any():
                ngx, ngy = fn.gradient(tx[inside], ty[inside])
                ok[inside] = np.hypot(ngx, ngy) < norm[idx[p[inside]]]
            good = p[ok]
            x[idx[good]] = tx[ok]
            y[idx[good]] = ty[ok]
            accepted[good] = True
            pending[good] = False
            step[pending] *= 0.5
        alive[idx[~accepted]] = False
    residual = np.full_like(x, np.inf)
    if alive.any():
        gx, gy = fn.gradient(x[alive], y[alive])
        residual[alive] = np.hypot(gx, gy)
    return x, y, residual


def interior_critical_points(fn: BoundFunction, tol: float = DEFAULT_TOL) -> list[OptimizationResult]:
    x, y, residual = _newton(fn, *_start_points(NEWTON_STARTS), tol)
    converged = np.flatnonzero(residual < tol)
    order = converged[np.lexsort((y[converged], x[converged]))]
    roots: list[Tuple[float, float, float]] = []
    for i in order:
        px, py = float(x[i]), float(y[i])
        if all(math.hypot(px - qx, py - qy) > DEDUP_DISTANCE for qx, qy, _ in roots):
            roots.append((px, py, float(residual[i])))
    return [
        OptimizationResult(
            function=fn.name,
            value=float(fn.value(px, py)),
            argmax=(px, py),
            location="interior",
            method="newton",
            residual=res,
        )
        for px, py, res in roots
    ]


def edge_restriction(fn: BoundFunction, edge: str) -> Tuple[EdgeMap, Optional[EdgeMap]]:
    """Value and slope of ``fn`` as functions of the edge parameter."""
    if edge == "curve":
        return fn.curve_value, fn.curve_slope
    piece = REGION.edges[edge]

    def value_at(t: Any) -> Any:
        return fn.value(*piece.point(t))

    if piece.axis is None:
        return value_at, None

    def slope_at(t: Any) -> Any:
        return fn.gradient(*piece.point(t))[piece.axis]

    return value_at, slope_at


def _refine(value_at: EdgeMap, slope_at: Optional[EdgeMap], lo: float, hi: float, tol: float) -> float:
    """Root of the slope when it falls from + to - on [lo, hi], else bounded Brent on the value."""
    if slope_at is not None:
        # The slope is infinite where the root term vanishes.
        with np.errstate(divide="ignore", invalid="ignore"):
            s_lo, s_hi = float(slope_at(lo)), float(slope_at(hi))
            if math.isfinite(s_lo) and math.isfinite(s_hi) and s_lo > 0 > s_hi:
                return float(brentq(lambda t: float(slope_at(t)), lo, hi, xtol=tol))
    refined = minimize_scalar(lambda t: -float(value_at(t)), bounds=(lo, hi), method="bounded", options={"xatol": tol})
    return float(refined.x)


def boundary_max(fn: BoundFunction, edge: str, tol: float = DEFAULT_TOL, scan: int = EDGE_SCAN) -> OptimizationResult:
    piece = REGION.edges[edge]
    value_at, slope_at = edge_restriction(fn, edge)
    if piece.t_min == piece.t_max:
        best_t, best_v = piece.t_min, float(value_at(piece.t_min))
    else:
        ts = np.linspace(piece.t_min, piece.t_max, scan)
        values = value_at(ts)
        i = int(np.argmax(values))
        best_t, best_v = float(ts[i]), float(values[i])
        lo, hi = float(ts[max(i - 1, 0)]), float(ts[min(i + 1, scan - 1)])
        t = _refine(value_at, slope_at, lo, hi, tol)
        v = float(value_at(t))
        if v > best_v:
            best_t, best_v = t, v
    px, py = piece.point(best_t)
    return OptimizationResult(
        function=fn.name,
        value=best_v,
        argmax=(float(px), float(py)),
        location=edge,
        method="newton",
    )


def _ranking(result: OptimizationResult) -> Tuple[float, float, float]:
    return (result.value, -result.argmax[0], -result.argmax[1])


def global_max(fn: BoundFunction, tol: float = DEFAULT_TOL) -> OptimizationResult:
    candidates = interior_critical_points(fn, tol)
    candidates.extend(boundary_max(fn, edge, tol) for edge in EDGE_ORDER)
    return max(candidates, key=_ranking)


def boundary_report(fn: BoundFunction, tol: float = DEFAULT_TOL) -> list[EdgeReport]:
    published = PUBLISHED_EDGES.get(fn.name, {})
    return [EdgeReport(edge, boundary_max(fn, edge, tol), published.get(edge)) for edge in EDGE_ORDER]


def region_grid(nx: int, ny: int) -> Tuple[np.ndarray, np.ndarray]:
    """Grid points of E in x-major ascending order."""
    xs = np.linspace(0.0, 1.0, nx)
    ys = np.linspace(0.0, math.sqrt(1.0 / 3.0), ny)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    gx, gy = gx.ravel(), gy.ravel()
    keep = REGION.radicand(gx, gy) >= -SQRT_GUARD
    return gx[keep], gy[keep]


def grid_search(fn: BoundFunction, nx: int, ny: int) -> OptimizationResult:
    gx, gy = region_grid(nx, ny)
    cx = np.linspace(0.0, 1.0, nx)
    px = np.concatenate([gx, cx])
    py = np.concatenate([gy, REGION.y_max(cx)])
    values = np.concatenate([fn.value(gx, gy), fn.curve_value(cx)])
    i = int(np.argmax(values))
    x, y = float(px[i]), float(py[i])
    return OptimizationResult(
        function=fn.name,
        value=float(values[i]),
        argmax=(x, y),
        location=REGION.locate(x, y, tol=1e-12),
        method="grid",
    )


def grid_oracle(fn: BoundFunction, nx: int, ny: int) -> float:
    return grid_search(fn, nx, ny).value


def theorem_h31_bound(
    tol: float = DEFAULT_TOL,
    method: str = "newton",
    eps: float = 1e-9,
    box_cap: int = 10_000_000,
    nx: int = 201,
    ny: int = 201,
) -> H31Bound:
    phi1 = get_bound_function("PHI1")
    phi2 = get_bound_function("PHI2")
    if method == "certified":
        r1 = certified_max(phi1, eps, box_cap=box_cap)
        # d(4t^2)/dt = 8t < 8 on [0, 1]: eps / 8 on PHI2 keeps B2 within eps.
        r2 = certified_max(phi2, eps / 8, box_cap=box_cap)
        lo1, hi1 = r1.enclosure
        lo2, hi2 = r2.enclosure
        b2_enclosure = (4 * lo2 * lo2, 4 * hi2 * hi2)
        return H31Bound(
            b1=hi1,
            b2=b2_enclosure[1],
            total=hi1 + b2_enclosure[1],
            method=method,
            b1_result=r1,
            b2_result=r2,
            b2_enclosure=b2_enclosure,
            total_enclosure=(lo1 + b2_enclosure[0], hi1 + b2_enclosure[1]),
        )
    if method == "grid":
        r1, r2 = grid_search(phi1, nx, ny), grid_search(phi2, nx, ny)
    else:
        r1, r2 = global_max(phi1, tol), global_max(phi2, tol)
    b2 = 4 * r2.value * r2.value
    return H31Bound(b1=r1.value, b2=b2, total=r1.value + b2, method=r1.method, b1_result=r1, b2_result=r2)
