"""The closed-form objectives maximized over the region E.

E = {(x, y) : 0 <= x <= 1, 0 <= y <= sqrt((1 - x^2) / 3)} with x = |w11| and
y = |w13|. Each objective is written once against a small arithmetic backend
so the same expressions serve numpy float evaluation and the natural
interval extension over ``mpmath.iv``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np
from mpmath import iv, libmp

from .errors import DomainError, UsageError

# Radicands in [-SQRT_GUARD, 0) are roundoff on the curve edge and read as 0.
SQRT_GUARD = 1e-14


class FloatBackend:
    name = "float"

    def sqrt(self, r: Any) -> Any:
        r = np.asarray(r, dtype=float)
        if np.any(r < -SQRT_GUARD):
            raise DomainError(f"Square root of negative radicand `{float(np.min(r)):.3e}` outside region E")
        out = np.sqrt(np.maximum(r, 0.0))
        return out[()] if out.ndim == 0 else out

    def inv_sqrt(self, n: int) -> float:
        return 1.0 / math.sqrt(n)


class IntervalBackend:
    """Outward-rounded evaluation on ``mpmath.iv`` intervals."""

    name = "interval"

    def sqrt(self, r: Any) -> Any:
        lo, hi = endpoints(r)
        if hi < 0:
            raise DomainError(f"Interval radicand `[{lo:.3e}, {hi:.3e}]` lies entirely below 0")
        if lo < 0:
            r = iv.mpf([0, hi])
        return iv.sqrt(r)

    def inv_sqrt(self, n: int) -> Any:
        return 1 / iv.sqrt(iv.mpf(n))


FLOAT = FloatBackend()
INTERVAL = IntervalBackend()


def endpoints(v: Any) -> Tuple[float, float]:
    if isinstance(v, iv.mpf):
        a, b = v._mpi_
        return libmp.to_float(a, rnd=libmp.round_floor), libmp.to_float(b, rnd=libmp.round_ceiling)
    value = float(v)
    return value, value


def interval(lo: float, hi: float | None = None) -> Any:
    return iv.mpf([lo, lo if hi is None else hi])


@dataclass(frozen=True)
class OptimizationResult:
    function: str
    value: float
    argmax: Tuple[float, float]
    location: str
    method: str
    enclosure: Optional[Tuple[float, float]] = None
    residual: Optional[float] = None
    boxes: Optional[int] = None


@dataclass(frozen=True)
class Edge:
    name: str
    t_min: float
    t_max: float
    point: Callable[[Any], Tuple[Any, Any]]
    # Gradient component along the edge; None where the edge is not axis-parallel.
    axis: Optional[int] = None


def _curve_y(t: Any) -> Any:
    return np.sqrt(np.maximum((1.0 - np.asarray(t, dtype=float) ** 2) / 3.0, 0.0))


def _curve_dy(x: Any, c: Any) -> Any:
    """d/dx of sqrt((1 - x^2) / 3); infinite at x = 1."""
    return -x / (3 * c)


class Region:
    """The feasibility region E for (|w11|, |w13|)."""

    name = "E"
    y_top = endpoints(iv.sqrt(iv.mpf(1) / 3))[1]

    edges: Dict[str, Edge] = {
        "y0": Edge("y0", 0.0, 1.0, lambda t: (np.asarray(t, dtype=float), np.zeros_like(t, dtype=float)), axis=0),
        "x0": Edge(
            "x0", 0.0, math.sqrt(1.0 / 3.0), lambda t: (np.zeros_like(t, dtype=float), np.asarray(t, dtype=float)), axis=1
        ),
        "x1": Edge("x1", 0.0, 0.0, lambda t: (np.ones_like(t, dtype=float), np.asarray(t, dtype=float))),
        "curve": Edge("curve", 0.0, 1.0, lambda t: (np.asarray(t, dtype=float), _curve_y(t))),
    }

    @staticmethod
    def radicand(x: Any, y: Any) -> Any:
        return 1 - x**2 - 3 * y**2

    @staticmethod
    def y_max(x: Any) -> Any:
        return _curve_y(x)

    def contains(self, x: Any, y: Any, slack: float = SQRT_GUARD) -> Any:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return (x >= 0) & (x <= 1) & (y >= 0) & (self.radicand(x, y) >= -slack)

    def strictly_inside(self, x: Any, y: Any, margin: float = 1e-9) -> Any:
        return (x > margin) & (x < 1 - margin) & (y > margin) & (self.radicand(x, y) > margin)

    def locate(self, x: float, y: float, tol: float = 1e-6) -> str:
        if x >= 1 - tol and y <= tol:
            return "x1"
        if y <= tol:
            return "y0"
        if x <= tol:
            return "x0"
        if self.radicand(x, y) <= tol:
            return "curve"
        return "interior"


REGION = Region()


def _root(x: Any, y: Any, ops: Any, uses_x: bool = True) -> Any:
    return ops.sqrt(1 - x**2 - 3 * y**2 if uses_x else 1 - 3 * y**2)


def _root_gradient(x: Any, y: Any, s: Any, uses_x: bool = True) -> Tuple[Any, Any]:
    return (-x / s if uses_x else 0), -3 * y / s


def _root_hessian(x: Any, y: Any, s: Any, uses_x: bool = True) -> Tuple[Any, Any, Any]:
    s3 = s**3
    syy = -3 / s - 9 * y**2 / s3
    if not uses_x:
        return 0, 0, syy
    return -1 / s - x**2 / s3, -3 * x * y / s3, syy


class BoundFunction:
    """A closed-form majorant on E with analytic gradient and Hessian.

    ``value`` and ``gradient`` accept numpy arrays or ``mpmath.iv``
    intervals (pass ``ops=INTERVAL``); ``hessian`` is float only.
    """

    name = ""
    target = ""
    region = REGION

    def value(self, x: Any, y: Any, ops: Any = FLOAT) -> Any:
        raise NotImplementedError

    def gradient(self, x: Any, y: Any, ops: Any = FLOAT) -> Tuple[Any, Any]:
        raise NotImplementedError

    def hessian(self, x: Any, y: Any) -> Tuple[Any, Any, Any]:
        raise NotImplementedError

    def curve_value(self, x: Any) -> Any:
        """The value on y = sqrt((1 - x^2) / 3), where 1 - x^2 - 3y^2 is exactly 0."""
        raise NotImplementedError

    def curve_slope(self, x: Any) -> Any:
        """d/dx of ``curve_value``."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"BoundFunction({self.name})"


class F1(BoundFunction):
    """x^3/3 + xy + sqrt(1 - x^2 - 3y^2)/sqrt(5); majorant of |gamma_3|."""

    name = "F1"
    target = "gamma3"

    def value(self, x, y, ops=FLOAT):
        return x**3 / 3 + x * y + ops.inv_sqrt(5) * _root(x, y, ops)

    def gradient(self, x, y, ops=FLOAT):
        sx, sy = _root_gradient(x, y, _root(x, y, ops))
        k = ops.inv_sqrt(5)
        return x**2 + y + k * sx, x + k * sy

    def hessian(self, x, y):
        sxx, sxy, syy = _root_hessian(x, y, _root(x, y, FLOAT))
        k = FLOAT.inv_sqrt(5)
        return 2 * x + k * sxx, 1 + k * sxy, k * syy

    def curve_value(self, x):
        return x**3 / 3 + x * _curve_y(x)

    def curve_slope(self, x):
        c = _curve_y(x)
        return x**2 + c + x * _curve_dy(x, c)


class F2(BoundFunction):
    """x^3 + 4xy + 2 sqrt(1 - x^2 - 3y^2)/sqrt(5); majorant of |a4| - |a3|."""

    name = "F2"
    target = "diff43"

    def value(self, x, y, ops=FLOAT):
        return x**3 + 4 * x * y + 2 * ops.inv_sqrt(5) * _root(x, y, ops)

    def gradient(self, x, y, ops=FLOAT):
        sx, sy = _root_gradient(x, y, _root(x, y, ops))
        k = 2 * ops.inv_sqrt(5)
        return 3 * x**2 + 4 * y + k * sx, 4 * x + k * sy

    def hessian(self, x, y):
        sxx, sxy, syy = _root_hessian(x, y, _root(x, y, FLOAT))
        k = 2 * FLOAT.inv_sqrt(5)
        return 6 * x + k * sxx, 4 + k * sxy, k * syy

    def curve_value(self, x):
        return x**3 + 4 * x * _curve_y(x)

    def curve_slope(self, x):
        c = _curve_y(x)
        return 3 * x**2 + 4 * (c + x * _curve_dy(x, c))


class F3(BoundFunction):
    """x + x^3 + 2 sqrt(1 - x^2 - 3y^2)/sqrt(5); majorant of |a2 a3 - a4|.

    The radicand carries 3y^2: only then is F3 on the curve edge x + x^3.
    Only the y-derivative involves y, and it vanishes on y = 0 alone.
    """

    name = "F3"
    target = "zalcman23"

    def value(self, x, y, ops=FLOAT):
        return x + x**3 + 2 * ops.inv_sqrt(5) * _root(x, y, ops)

    def gradient(self, x, y, ops=FLOAT):
        sx, sy = _root_gradient(x, y, _root(x, y, ops))
        k = 2 * ops.inv_sqrt(5)
        return 1 + 3 * x**2 + k * sx, k * sy

    def hessian(self, x, y):
        sxx, sxy, syy = _root_hessian(x, y, _root(x, y, FLOAT))
        k = 2 * FLOAT.inv_sqrt(5)
        return 6 * x + k * sxx, k * sxy, k * syy

    def curve_value(self, x):
        return x + x**3

    def curve_slope(self, x):
        return 1 + 3 * x**2


class F4(BoundFunction):
    """x^4 + 4y^2 + 4x sqrt(1 - x^2 - 3y^2)/sqrt(5); majorant of |H2(2)|."""

    name = "F4"
    target = "h22"

    def value(self, x, y, ops=FLOAT):
        return x**4 + 4 * y**2 + 4 * ops.inv_sqrt(5) * x * _root(x, y, ops)

    def gradient(self, x, y, ops=FLOAT):
        s = _root(x, y, ops)
        sx, sy = _root_gradient(x, y, s)
        k = 4 * ops.inv_sqrt(5)
        return 4 * x**3 + k * (s + x * sx), 8 * y + k * x * sy

    def hessian(self, x, y):
        s = _root(x, y, FLOAT)
        sx, sy = _root_gradient(x, y, s)
        sxx, sxy, syy = _root_hessian(x, y, s)
        k = 4 * FLOAT.inv_sqrt(5)
        return 12 * x**2 + k * (2 * sx + x * sxx), k * (sy + x * sxy), 8 + k * x * syy

    def curve_value(self, x):
        return x**4 + 4 * (1 - x**2) / 3

    def curve_slope(self, x):
        return 4 * x**3 - 8 * x / 3


class PHI1(BoundFunction):
    """2x^2 y + y^2 + 2 sqrt(1 - 3y^2)/sqrt(15); majorant of the B1 term of |H3(1)|."""

    name = "PHI1"
    target = "h31"

    def value(self, x, y, ops=FLOAT):
        return 2 * x**2 * y + y**2 + 2 * ops.inv_sqrt(15) * _root(x, y, ops, uses_x=False)

    def gradient(self, x, y, ops=FLOAT):
        _, ty = _root_gradient(x, y, _root(x, y, ops, uses_x=False), uses_x=False)
        return 4 * x * y, 2 * x**2 + 2 * y + 2 * ops.inv_sqrt(15) * ty

    def hessian(self, x, y):
        _, _, tyy = _root_hessian(x, y, _root(x, y, FLOAT, uses_x=False), uses_x=False)
        return 4 * y, 4 * x, 2 + 2 * FLOAT.inv_sqrt(15) * tyy

    def curve_value(self, x):
        # 1 - 3y^2 = x^2 on the curve.
        return 2 * x**2 * _curve_y(x) + (1 - x**2) / 3 + 2 * FLOAT.inv_sqrt(15) * x

    def curve_slope(self, x):
        c = _curve_y(x)
        return 4 * x * c + 2 * x**2 * _curve_dy(x, c) - 2 * x / 3 + 2 * FLOAT.inv_sqrt(15)


class PHI2(BoundFunction):
    """xy + sqrt(1 - x^2 - 3y^2)/sqrt(5); the B2 term of |H3(1)| is at most 4 PHI2^2."""

    name = "PHI2"
    target = "h31"

    def value(self, x, y, ops=FLOAT):
        return x * y + ops.inv_sqrt(5) * _root(x, y, ops)

    def gradient(self, x, y, ops=FLOAT):
        sx, sy = _root_gradient(x, y, _root(x, y, ops))
        k = ops.inv_sqrt(5)
        return y + k * sx, x + k * sy

    def hessian(self, x, y):
        sxx, sxy, syy = _root_hessian(x, y, _root(x, y, FLOAT))
        k = FLOAT.inv_sqrt(5)
        return k * sxx, 1 + k * sxy, k * syy

    def curve_value(self, x):
        return x * _curve_y(x)

    def curve_slope(self, x):
        c = _curve_y(x)
        return c + x * _curve_dy(x, c)


BOUND_FUNCTIONS: Dict[str, BoundFunction] = {fn.name: fn for fn in (F1(), F2(), F3(), F4(), PHI1(), PHI2())}


def get_bound_function(name: str) -> BoundFunction:
    try:
        return BOUND_FUNCTIONS[name.upper()]
    except KeyError:
        choices = ", ".join(sorted(BOUND_FUNCTIONS))
        raise UsageError(f"Unknown bound function `{name}`. Use one of: {choices}") from None
