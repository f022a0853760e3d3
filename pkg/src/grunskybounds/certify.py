"""Rigorous enclosures of max fn over E by interval branch-and-bound.

Boxes are axis-aligned and split on their longest side. A box is dropped
when the interval radicand 1 - x^2 - 3y^2 is negative on all of it. Lower
bounds come only from outward-rounded point evaluations at points verified
to lie in E; upper bounds are interval extensions over the box, clipped by
the parent box bound so they never grow down the tree.
"""
from __future__ import annotations

import math
from typing import Optional, Tuple

import numpy as np
import pybnb

from .errors import BudgetExceeded, GrunskyError
from .objectives import INTERVAL, REGION, BoundFunction, OptimizationResult, endpoints, interval

Box = Tuple[float, float, float, float]

DEFAULT_BOX_CAP = 10_000_000
FORMS = ("mean_value", "natural")
ROOT_BOX: Box = (0.0, 1.0, 0.0, REGION.y_top)
CURVE_NUDGES = 4


def _finite(*values) -> bool:
    return all(math.isfinite(end) for v in values for end in endpoints(v))


def box_upper_bound(fn: BoundFunction, box: Box, form: str = "mean_value") -> Optional[float]:
    """Upper end of an enclosure of fn over box ∩ E, or None when the box misses E."""
    xl, xh, yl, yh = box
    X, Y = interval(xl, xh), interval(yl, yh)
    if endpoints(REGION.radicand(X, Y))[1] < 0:
        return None
    hi = endpoints(fn.value(X, Y, INTERVAL))[1]
    if form == "mean_value":
        gx, gy = fn.gradient(X, Y, INTERVAL)
        # A finite gradient enclosure means the radicand stays positive on the whole box.
        if _finite(gx, gy):
            cx, cy = 0.5 * (xl + xh), 0.5 * (yl + yh)
            centre = fn.value(interval(cx), interval(cy), INTERVAL)
            hi = min(hi, endpoints(centre + gx * (X - cx) + gy * (Y - cy))[1])
    return hi


def verified_value(fn: BoundFunction, x: float, y: float) -> Optional[float]:
    """Lower end of fn(x, y) if (x, y) is provably in E."""
    X, Y = interval(x), interval(y)
    if x < 0 or x > 1 or y < 0 or endpoints(REGION.radicand(X, Y))[0] < 0:
        return None
    return endpoints(fn.value(X, Y, INTERVAL))[0]


def best_point(fn: BoundFunction, box: Box) -> Optional[Tuple[float, Tuple[float, float]]]:
    xl, xh, yl, yh = box
    cx, cy = 0.5 * (xl + xh), 0.5 * (yl + yh)
    candidates = [(cx, cy)]
    y_curve = float(REGION.y_max(cx))
    if yl <= y_curve <= yh:
        candidates.append((cx, y_curve))
    best = None
    for x, y in candidates:
        value = verified_value(fn, x, y)
        for _ in range(CURVE_NUDGES):
            if value is not None or y <= yl:
                break
            y = float(np.nextafter(y, 0.0))
            value = verified_value(fn, x, y)
        if value is not None and (best is None or value > best[0]):
            best = (value, (x, y))
    return best


def split_box(box: Box) -> Tuple[Box, Box]:
    xl, xh, yl, yh = box
    if xh - xl >= yh - yl:
        mid = 0.5 * (xl + xh)
        return (xl, mid, yl, yh), (mid, xh, yl, yh)
    mid = 0.5 * (yl + yh)
    return (xl, xh, yl, mid), (xl, xh, mid, yh)


class BoxCover(pybnb.Problem):
    def __init__(self, fn: BoundFunction, form: str = "mean_value") -> None:
        if form not in FORMS:
            raise GrunskyError(f"Unknown interval form `{form}`. Use one of: {', '.join(FORMS)}")
        self._fn = fn
        self._form = form
        self._box = ROOT_BOX
        self._ceiling = math.inf
        self._cached: Optional[Tuple[Box, float]] = None

    def sense(self):
        return pybnb.maximize

    def objective(self):
        best = best_point(self._fn, self._box)
        return self.infeasible_objective() if best is None else best[0]

    def bound(self):
        if self._cached is None or self._cached[0] != self._box:
            hi = box_upper_bound(self._fn, self._box, self._form)
            value = self.infeasible_objective() if hi is None else min(hi, self._ceiling)
            self._cached = (self._box, value)
        return self._cached[1]

    def save_state(self, node):
        node.state = (self._box, self._ceiling)

    def load_state(self, node):
        (self._box, self._ceiling) = node.state

    def branch(self):
        ceiling = self.bound()
        for child_box in split_box(self._box):
            child = pybnb.Node()
            child.state = (child_box, ceiling)
            yield child


def certified_max(
    fn: BoundFunction,
    eps: float,
    box_cap: int = DEFAULT_BOX_CAP,
    form: str = "mean_value",
) -> OptimizationResult:
    if not eps > 0:
        raise GrunskyError(f"eps must be positive, got `{eps}`")
    problem = BoxCover(fn, form)
    results = pybnb.Solver(comm=None).solve(
        problem,
        absolute_gap=eps,
        relative_gap=None,
        queue_tolerance=0,
        queue_strategy="bound",
        node_limit=box_cap,
        log=None,
        disable_signal_handlers=True,
    )
    if results.best_node is None:
        raise GrunskyError(f"Certified search for `{fn.name}` found no verified point in E")
    lo = float(results.objective)
    hi = max(float(results.bound), lo)
    if hi - lo > eps:
        if results.termination_condition == pybnb.TerminationCondition.node_limit:
            raise BudgetExceeded(
                f"Certified search for `{fn.name}` used the box cap `{box_cap}` with gap {hi - lo:.3e} > eps `{eps}`. "
                "Raise --box-cap or GRUNSKY_BOX_CAP.",
                boxes=int(results.nodes),
            )
        raise GrunskyError(
            f"Certified search for `{fn.name}` stopped with `{results.termination_condition}` at gap {hi - lo:.3e}"
        )
    best_box, _ = results.best_node.state
    _, (x, y) = best_point(fn, best_box)
    return OptimizationResult(
        function=fn.name,
        value=lo,
        argmax=(x, y),
        location=REGION.locate(x, y),
        method="certified",
        enclosure=(lo, hi),
        boxes=int(results.nodes),
    )
