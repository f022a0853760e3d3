"""Exact truncated power series over the rationals.

Coefficients are ``fractions.Fraction`` throughout; nothing in this module
rounds. Univariate series carry an explicit truncation ``order`` and every
operation keeps the smallest order of its operands, so retained
coefficients are always exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from .errors import CapTooLarge, ConstantTermNotOne, MissingEntry, NotNormalized, SeriesError, ZeroConstantTerm

Rational = Union[int, Fraction]
Index = Tuple[int, int]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: Tuple[Fraction, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise SeriesError(f"Series order must be non-negative, got `{self.order}`")
        values = tuple(Fraction(c) for c in self.coeffs)
        if len(values) != self.order + 1:
            raise SeriesError(
                f"Series of order {self.order} needs {self.order + 1} coefficients, got {len(values)}"
            )
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def from_coefficients(cls, values: Iterable[Rational], order: int | None = None) -> TruncatedSeries:
        """Pad with zeros (or cut) to ``order``; the default order is ``len(values) - 1``."""
        items = [Fraction(v) for v in values]
        if order is None:
            order = max(len(items) - 1, 0)
        items = (items + [ZERO] * (order + 1))[: order + 1]
        return cls(tuple(items), order)

    @classmethod
    def constant(cls, value: Rational, order: int) -> TruncatedSeries:
        return cls.from_coefficients([value], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError(f"Cannot raise truncation order from {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries(tuple(self[n] + other[n] for n in range(order + 1)), order)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries(tuple(self[n] - other[n] for n in range(order + 1)), order)

    def scale(self, factor: Rational) -> TruncatedSeries:
        return TruncatedSeries(tuple(c * factor for c in self.coeffs), self.order)

    def is_normalized(self) -> bool:
        return self.order >= 1 and self[0] == 0 and self[1] == 1


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    out = [sum((a[k] * b[n - k] for k in range(n + 1)), ZERO) for n in range(order + 1)]
    return TruncatedSeries(tuple(out), order)


def ps_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if b[0] == 0:
        raise ZeroConstantTerm("Cannot divide by a series whose constant term is 0")
    order = min(a.order, b.order)
    out: list[Fraction] = []
    for n in range(order + 1):
        acc = a[n] - sum((b[k] * out[n - k] for k in range(1, n + 1)), ZERO)
        out.append(acc / b[0])
    return TruncatedSeries(tuple(out), order)


def ps_derivative(a: TruncatedSeries) -> TruncatedSeries:
    if a.order == 0:
        return TruncatedSeries.constant(0, 0)
    return TruncatedSeries(tuple(n * a[n] for n in range(1, a.order + 1)), a.order - 1)


def ps_integral(a: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative with zero constant term; the order grows by one."""
    return TruncatedSeries((ZERO,) + tuple(a[n] / (n + 1) for n in range(a.order + 1)), a.order + 1)


def _require_unit_constant(a: TruncatedSeries, what: str) -> None:
    if a[0] != 1:
        raise ConstantTermNotOne(f"{what} needs constant term 1, got `{a[0]}`")


def ps_log1(a: TruncatedSeries) -> TruncatedSeries:
    """log(a) for a(0) = 1, from L' = a'/a."""
    _require_unit_constant(a, "log")
    if a.order == 0:
        return TruncatedSeries.constant(0, 0)
    return ps_integral(ps_div(ps_derivative(a), a.truncate(a.order - 1)))


def ps_log1_compose(a: TruncatedSeries) -> TruncatedSeries:
    """log(a) for a(0) = 1, by summing log(1+u) with u = a - 1."""
    _require_unit_constant(a, "log")
    u = a - TruncatedSeries.constant(1, a.order)
    total = TruncatedSeries.constant(0, a.order)
    power = TruncatedSeries.constant(1, a.order)
    for k in range(1, a.order + 1):
        power = ps_mul(power, u)
        sign = 1 if k % 2 else -1
        total = total + power.scale(Fraction(sign, k))
    return total


def ps_exp(a: TruncatedSeries) -> TruncatedSeries:
    if a[0] != 0:
        raise SeriesError(f"exp needs constant term 0, got `{a[0]}`")
    out = [ONE]
    for n in range(1, a.order + 1):
        out.append(sum((k * a[k] * out[n - k] for k in range(1, n + 1)), ZERO) / n)
    return TruncatedSeries(tuple(out), a.order)


def ps_sqrt1(a: TruncatedSeries) -> TruncatedSeries:
    """The square root with s(0) = 1 of a series with a(0) = 1."""
    _require_unit_constant(a, "sqrt")
    out = [ONE]
    for n in range(1, a.order + 1):
        acc = a[n] - sum((out[k] * out[n - k] for k in range(1, n)), ZERO)
        out.append(acc / 2)
    return TruncatedSeries(tuple(out), a.order)


def require_normalized(f: TruncatedSeries) -> None:
    if not f.is_normalized():
        head = ", ".join(str(c) for c in f.coeffs[:2])
        raise NotNormalized(f"Function must start `0, 1` (f(0)=0, f'(0)=1), got `{head}`")


def sqrt_transform(f: TruncatedSeries) -> TruncatedSeries:
    """f2(z) = sqrt(f(z^2)), an odd series of order 2 * f.order."""
    require_normalized(f)
    quotient = f.coeffs[1:]
    squared_arg = [ZERO] * (2 * (f.order - 1) + 1)
    for k, c in enumerate(quotient):
        squared_arg[2 * k] = c
    root = ps_sqrt1(TruncatedSeries(tuple(squared_arg), 2 * (f.order - 1)))
    # z * root reaches z^(2*order - 1); the next coefficient is even-indexed, hence 0.
    return TruncatedSeries((ZERO,) + root.coeffs + (ZERO,), 2 * f.order)


@dataclass(frozen=True)
class BivariateSeries:
    coeffs: Dict[Index, Fraction] = field(compare=True)
    cap: int

    def __post_init__(self) -> None:
        table = {}
        for p in range(self.cap + 1):
            for q in range(self.cap + 1 - p):
                table[(p, q)] = Fraction(self.coeffs.get((p, q), 0))
        object.__setattr__(self, "coeffs", table)

    def __getitem__(self, index: Index) -> Fraction:
        try:
            return self.coeffs[index]
        except KeyError:
            raise MissingEntry(f"Entry `{index}` is outside the table (total degree cap {self.cap})") from None

    def is_symmetric(self) -> bool:
        return all(value == self.coeffs[(q, p)] for (p, q), value in self.coeffs.items())

    def __sub__(self, other: BivariateSeries) -> BivariateSeries:
        cap = min(self.cap, other.cap)
        return BivariateSeries({k: self[k] - other[k] for k in _indices(cap)}, cap)


def _indices(cap: int) -> list[Index]:
    return [(p, q) for p in range(cap + 1) for q in range(cap + 1 - p)]


def bivariate_mul(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    cap = min(a.cap, b.cap)
    out: Dict[Index, Fraction] = {}
    nonzero_a = [(k, v) for k, v in a.coeffs.items() if v and k[0] + k[1] <= cap]
    nonzero_b = [(k, v) for k, v in b.coeffs.items() if v and k[0] + k[1] <= cap]
    for (i, j), av in nonzero_a:
        for (k, l), bv in nonzero_b:
            if i + j + k + l <= cap:
                key = (i + k, j + l)
                out[key] = out.get(key, ZERO) + av * bv
    return BivariateSeries(out, cap)


def bivariate_log1(a: BivariateSeries) -> BivariateSeries:
    """log(a) for a[0,0] = 1, composing log(1+u) with u = a - 1 by total degree."""
    if a[(0, 0)] != 1:
        raise ConstantTermNotOne(f"log needs constant term 1, got `{a[(0, 0)]}`")
    u = a - BivariateSeries({(0, 0): ONE}, a.cap)
    total: Dict[Index, Fraction] = {}
    power = BivariateSeries({(0, 0): ONE}, a.cap)
    # u has no constant term, so u^k starts at total degree k.
    for k in range(1, a.cap + 1):
        power = bivariate_mul(power, u)
        weight = Fraction(1 if k % 2 else -1, k)
        for key, value in power.coeffs.items():
            if value:
                total[key] = total.get(key, ZERO) + weight * value
    return BivariateSeries(total, a.cap)


def quotient_table(f: TruncatedSeries, cap: int) -> BivariateSeries:
    """(f(t) - f(z)) / (t - z) as a table: entry (i, j) is a_{i+j+1}."""
    require_normalized(f)
    if cap < 0 or cap > f.order - 1:
        raise CapTooLarge(f"Cap `{cap}` needs coefficients up to a_{cap + 1}; series has order {f.order}")
    return BivariateSeries({(i, j): f[i + j + 1] for i, j in _indices(cap)}, cap)


def difference_quotient_log(f: TruncatedSeries, cap: int) -> BivariateSeries:
    return bivariate_log1(quotient_table(f, cap))
