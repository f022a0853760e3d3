"""Coefficient functionals, computed from a_n and again from Grunsky coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import MissingEntry, OrderTooSmall, SeriesError
from .grunsky import CoefficientVector, GrunskyTable
from .power_series import TruncatedSeries, ps_log1, require_normalized


@dataclass(frozen=True)
class LogCoefficients:
    gamma: Tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        """gamma_n, counted from 1."""
        if n < 1 or n > len(self.gamma):
            raise MissingEntry(f"gamma_{n} not computed (have gamma_1..gamma_{len(self.gamma)})")
        return self.gamma[n - 1]


@dataclass(frozen=True)
class FunctionalReport:
    name: str
    direct: Fraction
    via_omega: Fraction
    # "exact" compares signed values, "modulus" compares absolute values.
    agreement: str = "exact"

    @property
    def matches(self) -> bool:
        if self.agreement == "modulus":
            return abs(self.direct) == abs(self.via_omega)
        return self.direct == self.via_omega


@dataclass(frozen=True)
class H31Split:
    b1_term: Fraction
    b2_term: Fraction
    b2_substituted: Fraction

    @property
    def value(self) -> Fraction:
        return self.b1_term - self.b2_term


def log_coefficients(f: TruncatedSeries, n: int) -> LogCoefficients:
    require_normalized(f)
    if f.order < n + 1:
        raise OrderTooSmall(f"gamma_{n} needs a_{n + 1}; series order is {f.order}")
    quotient = TruncatedSeries(f.coeffs[1:], f.order - 1)
    logged = ps_log1(quotient)
    return LogCoefficients(tuple(logged[k] / 2 for k in range(1, n + 1)))


def gamma3_direct(a: CoefficientVector) -> Fraction:
    return (a[4] - a[2] * a[3] + a[2] ** 3 / 3) / 2


def gamma3_omega_forms(table: GrunskyTable) -> Tuple[Fraction, Fraction]:
    w11, w13 = table[(1, 1)], table[(1, 3)]
    return (
        table[(3, 3)] + 2 * w11 * w13,
        table[(1, 5)] + w11 * w13 + w11**3 / 3,
    )


def gamma3_omega(table: GrunskyTable) -> Fraction:
    first, second = gamma3_omega_forms(table)
    if first != second:
        raise SeriesError(f"gamma_3 forms disagree on `{table.source}`: {first} != {second}")
    return first


def hankel2(a: CoefficientVector) -> Fraction:
    return a[2] * a[4] - a[3] ** 2


def hankel2_omega(table: GrunskyTable) -> Fraction:
    w11, w13 = table[(1, 1)], table[(1, 3)]
    return 4 * w11 * table[(1, 5)] - 4 * w13**2 - w11**4


def hankel2_omega_unsubstituted(table: GrunskyTable) -> Fraction:
    w11, w13 = table[(1, 1)], table[(1, 3)]
    return 4 * w11 * table[(3, 3)] + 4 * w11**2 * w13 - 4 * w13**2 - Fraction(7, 3) * w11**4


def hankel3(a: CoefficientVector) -> Fraction:
    a2, a3, a4, a5 = a[2], a[3], a[4], a[5]
    return a3 * (a2 * a4 - a3**2) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2**2)


def h31_split(table: GrunskyTable) -> H31Split:
    w11, w13, w15 = table[(1, 1)], table[(1, 3)], table[(1, 5)]
    b1 = (2 * w13 - w11**2) * (2 * table[(3, 5)] + w13**2 - 2 * w11**2 * w13)
    b2 = (2 * table[(3, 3)] - Fraction(2, 3) * w11**3) ** 2
    return H31Split(b1_term=b1, b2_term=b2, b2_substituted=4 * (w15 - w11 * w13) ** 2)


def hankel3_omega(table: GrunskyTable) -> Fraction:
    return h31_split(table).value


def zalcman23(a: CoefficientVector) -> Fraction:
    return a[2] * a[3] - a[4]


def zalcman23_omega(table: GrunskyTable) -> Fraction:
    """Signed opposite of a2 a3 - a4; compare moduli."""
    w11 = table[(1, 1)]
    return 2 * table[(1, 5)] + 2 * w11 * table[(1, 3)] - 2 * w11**3


def zalcman23_omega_unsubstituted(table: GrunskyTable) -> Fraction:
    w11 = table[(1, 1)]
    return 2 * table[(3, 3)] + 4 * w11 * table[(1, 3)] - Fraction(8, 3) * w11**3


def diff43(a: CoefficientVector) -> Fraction:
    return abs(a[4]) - abs(a[3])


def a4_minus_w11_a3(a: CoefficientVector, table: GrunskyTable) -> Fraction:
    return a[4] - table[(1, 1)] * a[3]


def a4_minus_w11_a3_omega_forms(table: GrunskyTable) -> Tuple[Fraction, Fraction]:
    # The middle term is 6 w11 w13; reading it as 6 w11 w33 breaks the next substitution.
    w11, w13 = table[(1, 1)], table[(1, 3)]
    return (
        2 * table[(3, 3)] + 6 * w11 * w13 + w11**3 / 3,
        2 * table[(1, 5)] + 4 * w11 * w13 + w11**3,
    )


def a3_minus_a2_squared(a: CoefficientVector) -> Fraction:
    return a[3] - a[2] ** 2


def a3_minus_a2_squared_omega(table: GrunskyTable) -> Fraction:
    return 2 * table[(1, 3)] - table[(1, 1)] ** 2


def _determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    matrix = [list(row) for row in rows]
    size = len(matrix)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if matrix[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            det = -det
        det *= matrix[col][col]
        for r in range(col + 1, size):
            factor = matrix[r][col] / matrix[col][col]
            if factor:
                for c in range(col, size):
                    matrix[r][c] -= factor * matrix[col][c]
    return det


def hankel_determinant(a: CoefficientVector, q: int, n: int) -> Fraction:
    """H_q(n) = det[a_{n+i+j}] for 0 <= i, j < q."""
    if q < 1 or n < 1:
        raise SeriesError(f"Hankel determinant needs q >= 1 and n >= 1, got q={q}, n={n}")
    return _determinant([[a[n + i + j] for j in range(q)] for i in range(q)])


def functional_reports(f: TruncatedSeries, table: GrunskyTable) -> list[FunctionalReport]:
    a = CoefficientVector.from_series(f)
    first, second = gamma3_omega_forms(table)
    split = h31_split(table)
    a4_forms = a4_minus_w11_a3_omega_forms(table)
    return [
        FunctionalReport("gamma3", log_coefficients(f, 3)[3], first),
        FunctionalReport("gamma3_second_form", gamma3_direct(a), second),
        FunctionalReport("h22", hankel2(a), hankel2_omega(table)),
        FunctionalReport("h22_unsubstituted", hankel_determinant(a, 2, 2), hankel2_omega_unsubstituted(table)),
        FunctionalReport("h31", hankel3(a), split.value),
        FunctionalReport("h31_determinant", hankel_determinant(a, 3, 1), split.b1_term - split.b2_substituted),
        FunctionalReport("zalcman23", zalcman23(a), zalcman23_omega(table), agreement="modulus"),
        FunctionalReport("zalcman23_unsubstituted", zalcman23(a), zalcman23_omega_unsubstituted(table), agreement="modulus"),
        FunctionalReport("a3_minus_a2sq", a3_minus_a2_squared(a), a3_minus_a2_squared_omega(table)),
        FunctionalReport("a4_minus_w11_a3", a4_minus_w11_a3(a, table), a4_forms[0]),
        FunctionalReport("a4_minus_w11_a3_substituted", a4_minus_w11_a3(a, table), a4_forms[1]),
    ]
