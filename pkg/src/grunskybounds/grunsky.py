"""Grunsky coefficients of the square-root transform and the identities they satisfy."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .errors import MissingEntry, NotNormalized, OrderTooSmall
from .power_series import Index, TruncatedSeries, difference_quotient_log, require_normalized, sqrt_transform

DEFAULT_CAP = 8
# Slack comparisons are done in binary64 from exact inputs.
FLOAT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class GrunskyTable:
    """omega[(p, q)] for p, q >= 1; an odd table keeps p and q odd only."""

    omega: Dict[Index, Fraction]
    source: str
    parity: str
    cap: int

    def __getitem__(self, index: Index) -> Fraction:
        p, q = index
        if (p, q) in self.omega:
            return self.omega[(p, q)]
        if (q, p) in self.omega:
            return self.omega[(q, p)]
        raise MissingEntry(
            f"Grunsky table for `{self.source}` has no entry omega_{p},{q} (cap {self.cap}, {self.parity} indices)"
        )

    def is_symmetric(self) -> bool:
        return all(self.omega.get((q, p), value) == value for (p, q), value in self.omega.items())

    def items(self) -> list[Tuple[Index, Fraction]]:
        return sorted(self.omega.items())


@dataclass(frozen=True)
class CoefficientVector:
    a: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.a) < 2 or self.a[0] != 0 or self.a[1] != 1:
            head = ", ".join(str(c) for c in self.a[:2])
            raise NotNormalized(f"Coefficient vector must start `0, 1`, got `{head}`")

    @classmethod
    def from_series(cls, f: TruncatedSeries) -> CoefficientVector:
        require_normalized(f)
        return cls(f.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n >= len(self.a):
            raise MissingEntry(f"Coefficient a_{n} is not available (have a_0..a_{len(self.a) - 1})")
        return self.a[n]


@dataclass(frozen=True)
class QuadraticFormWeights:
    """Real weights x_1, x_3, x_5, ...; ``x[k]`` multiplies index 2k + 1."""

    x: Tuple[float, ...]

    @classmethod
    def of(cls, *values: float) -> QuadraticFormWeights:
        return cls(tuple(float(v) for v in values))

    def index(self, k: int) -> int:
        return 2 * k + 1


@dataclass(frozen=True)
class IdentityResidual:
    name: str
    residual: Fraction

    @property
    def ok(self) -> bool:
        return self.residual == 0


@dataclass(frozen=True)
class LebedevReport:
    source: str
    residuals: Tuple[IdentityResidual, ...]

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.residuals)


@dataclass(frozen=True)
class ModulusCheck:
    name: str
    value: float
    bound: float

    @property
    def holds(self) -> bool:
        return self.value <= self.bound + FLOAT_TOLERANCE


def compute_odd_grunsky(f: TruncatedSeries, cap: int = DEFAULT_CAP, source: str = "custom") -> GrunskyTable:
    require_normalized(f)
    table = difference_quotient_log(sqrt_transform(f), cap)
    omega = {
        (p, q): value
        for (p, q), value in table.coeffs.items()
        if p % 2 == 1 and q % 2 == 1
    }
    return GrunskyTable(omega=omega, source=source, parity="odd", cap=cap)


def compute_grunsky(f: TruncatedSeries, cap: int, source: str = "custom") -> GrunskyTable:
    """All omega_{p,q} with p, q >= 1 of ``f`` itself."""
    table = difference_quotient_log(f, cap)
    omega = {(p, q): value for (p, q), value in table.coeffs.items() if p >= 1 and q >= 1}
    return GrunskyTable(omega=omega, source=source, parity="full", cap=cap)


def lebedev_residuals(a: CoefficientVector, table: GrunskyTable) -> Tuple[IdentityResidual, ...]:
    w11, w13, w15 = table[(1, 1)], table[(1, 3)], table[(1, 5)]
    w33, w35 = table[(3, 3)], table[(3, 5)]
    return (
        IdentityResidual("a2", a[2] - 2 * w11),
        IdentityResidual("a3", a[3] - (2 * w13 + 3 * w11**2)),
        IdentityResidual("a4", a[4] - (2 * w33 + 8 * w11 * w13 + Fraction(10, 3) * w11**3)),
        IdentityResidual(
            "a5",
            a[5]
            - (2 * w35 + 8 * w11 * w33 + 5 * w13**2 + 18 * w11**2 * w13 + Fraction(7, 3) * w11**4),
        ),
        IdentityResidual("constraint", 3 * w15 - 3 * w11 * w13 + w11**3 - 3 * w33),
    )


def verify_lebedev_identities(f: TruncatedSeries, source: str = "custom") -> LebedevReport:
    require_normalized(f)
    if f.order < 5:
        raise OrderTooSmall(f"Identity checks need a_5; series order `{f.order}` is below 5")
    table = compute_odd_grunsky(f, DEFAULT_CAP, source)
    return LebedevReport(source, lebedev_residuals(CoefficientVector.from_series(f), table))


def omega33_substitution(table: GrunskyTable) -> Fraction:
    w11 = table[(1, 1)]
    return table[(1, 5)] - w11 * table[(1, 3)] + w11**3 / 3


def grunsky_form_slack(table: GrunskyTable, w: QuadraticFormWeights, qmax: int) -> float:
    right = sum(x * x / w.index(k) for k, x in enumerate(w.x))
    left = 0.0
    for q in range(1, qmax + 1):
        inner = sum(float(table[(w.index(k), 2 * q - 1)]) * x for k, x in enumerate(w.x))
        left += (2 * q - 1) * inner * inner
    return right - left


def _root(r: float) -> float:
    return math.sqrt(max(r, 0.0))


def moduli_bounds(table: GrunskyTable) -> list[ModulusCheck]:
    x = abs(float(table[(1, 1)]))
    y = abs(float(table[(1, 3)]))
    return [
        ModulusCheck("omega13", y, _root((1 - x * x) / 3)),
        ModulusCheck("omega15", abs(float(table[(1, 5)])), _root((1 - x * x - 3 * y * y) / 5)),
    ]


def omega35_bound(table: GrunskyTable) -> list[ModulusCheck]:
    y = abs(float(table[(1, 3)]))
    w33 = abs(float(table[(3, 3)]))
    value = abs(float(table[(3, 5)]))
    return [
        ModulusCheck("omega35", value, _root(1 - 3 * y * y - 9 * w33 * w33) / math.sqrt(15)),
        ModulusCheck("omega35_weak", value, _root(1 - 3 * y * y) / math.sqrt(15)),
    ]


def standard_weights() -> Iterable[QuadraticFormWeights]:
    for pair in ((1, 0), (0, 1), (1, 1), (1, -1), (2, 3)):
        yield QuadraticFormWeights.of(*pair)
