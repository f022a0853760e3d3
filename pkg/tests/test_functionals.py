from __future__ import annotations

import unittest
from fractions import Fraction as F

from support import SRC  # noqa: F401

from grunskybounds.bound_optimizer import global_max, theorem_h31_bound
from grunskybounds.catalogue import catalogue, geometric, identity, koebe
from grunskybounds.errors import MissingEntry, OrderTooSmall
from grunskybounds.functionals import (
    a3_minus_a2_squared,
    a4_minus_w11_a3,
    a4_minus_w11_a3_omega_forms,
    diff43,
    functional_reports,
    gamma3_omega,
    gamma3_omega_forms,
    h31_split,
    hankel2,
    hankel2_omega,
    hankel3,
    hankel3_omega,
    hankel_determinant,
    log_coefficients,
    zalcman23,
    zalcman23_omega,
)
from grunskybounds.grunsky import CoefficientVector, compute_odd_grunsky
from grunskybounds.objectives import get_bound_function
from grunskybounds.power_series import TruncatedSeries

SLICE = TruncatedSeries.from_coefficients([0, 1, F(-2, 3), F(1, 4), 3, F(-5, 2)], 10)


def vector(f: TruncatedSeries) -> CoefficientVector:
    return CoefficientVector.from_series(f)


class LogCoefficientTests(unittest.TestCase):
    def test_koebe(self) -> None:
        gamma = log_coefficients(koebe(10), 5)
        self.assertEqual([gamma[n] for n in range(1, 6)], [F(1, n) for n in range(1, 6)])

    def test_geometric(self) -> None:
        gamma = log_coefficients(geometric(10), 4)
        self.assertEqual([gamma[n] for n in range(1, 5)], [F(1, 2 * n) for n in range(1, 5)])

    def test_identity(self) -> None:
        self.assertTrue(all(g == 0 for g in log_coefficients(identity(10), 6).gamma))

    def test_gamma3_matches_coefficient_formula(self) -> None:
        a = vector(SLICE)
        expected = (a[4] - a[2] * a[3] + a[2] ** 3 / 3) / 2
        self.assertEqual(log_coefficients(SLICE, 3)[3], expected)

    def test_order_too_small(self) -> None:
        with self.assertRaises(OrderTooSmall):
            log_coefficients(koebe(3), 3)

    def test_uncomputed_index(self) -> None:
        gamma = log_coefficients(koebe(10), 3)
        for n in (0, 4):
            with self.assertRaises(MissingEntry):
                gamma[n]


class OmegaFormTests(unittest.TestCase):
    def test_gamma3(self) -> None:
        self.assertEqual(gamma3_omega(compute_odd_grunsky(koebe(10))), F(1, 3))
        self.assertEqual(gamma3_omega(compute_odd_grunsky(identity(10))), 0)
        self.assertEqual(gamma3_omega(compute_odd_grunsky(geometric(10))), F(1, 6))
        first, second = gamma3_omega_forms(compute_odd_grunsky(SLICE))
        self.assertEqual(first, second)
        self.assertEqual(first, log_coefficients(SLICE, 3)[3])

    def test_hankel2(self) -> None:
        self.assertEqual(hankel2(vector(koebe(10))), -1)
        self.assertEqual(hankel2(vector(identity(10))), 0)
        self.assertEqual(hankel2_omega(compute_odd_grunsky(koebe(10))), -1)

    def test_hankel3(self) -> None:
        self.assertEqual(hankel3(vector(koebe(10))), 0)
        self.assertEqual(hankel3(vector(identity(10))), 0)
        self.assertEqual(hankel3_omega(compute_odd_grunsky(koebe(10))), 0)

    def test_zalcman(self) -> None:
        self.assertEqual(zalcman23(vector(koebe(10))), 2)
        self.assertEqual(zalcman23(vector(identity(10))), 0)
        self.assertEqual(zalcman23(vector(geometric(10))), 0)
        for f in (koebe(10), geometric(10), SLICE):
            self.assertEqual(abs(zalcman23(vector(f))), abs(zalcman23_omega(compute_odd_grunsky(f))))

    def test_zalcman_sign_is_opposite(self) -> None:
        self.assertEqual(zalcman23(vector(SLICE)), -zalcman23_omega(compute_odd_grunsky(SLICE)))

    def test_diff43(self) -> None:
        self.assertEqual(diff43(vector(koebe(10))), 1)
        self.assertEqual(diff43(vector(identity(10))), 0)
        self.assertEqual(diff43(vector(geometric(10))), 0)

    def test_a4_minus_w11_a3(self) -> None:
        for f in (koebe(10), geometric(10), SLICE):
            table = compute_odd_grunsky(f)
            direct = a4_minus_w11_a3(vector(f), table)
            self.assertEqual(a4_minus_w11_a3_omega_forms(table), (direct, direct))
        self.assertEqual(a4_minus_w11_a3(vector(koebe(10)), compute_odd_grunsky(koebe(10))), 1)

    def test_h31_b2_substitution(self) -> None:
        for f in (koebe(10), geometric(10), SLICE):
            split = h31_split(compute_odd_grunsky(f))
            self.assertEqual(split.b2_term, split.b2_substituted)

    def test_a3_minus_a2_squared_on_catalogue(self) -> None:
        values = {item.name: a3_minus_a2_squared(vector(item.series)) for item in catalogue(10)}
        self.assertEqual(values, {"koebe": -1, "identity": 0, "geometric": 0})
        self.assertTrue(all(abs(v) <= 1 for v in values.values()))


class HankelDeterminantTests(unittest.TestCase):
    def test_matches_closed_forms(self) -> None:
        for f in (koebe(10), geometric(10), SLICE):
            a = vector(f)
            self.assertEqual(hankel_determinant(a, 2, 2), hankel2(a))
            self.assertEqual(hankel_determinant(a, 3, 1), hankel3(a))

    def test_first_order(self) -> None:
        a = vector(koebe(10))
        self.assertEqual(hankel_determinant(a, 1, 4), 4)
        self.assertEqual(hankel_determinant(a, 2, 1), a[3] - a[2] ** 2)


class FunctionalReportTests(unittest.TestCase):
    def test_all_reports_agree(self) -> None:
        for f in [item.series for item in catalogue(10)] + [SLICE]:
            for report in functional_reports(f, compute_odd_grunsky(f)):
                self.assertTrue(report.matches, report)

    def test_report_names(self) -> None:
        names = [r.name for r in functional_reports(koebe(10), compute_odd_grunsky(koebe(10)))]
        for required in ("gamma3", "gamma3_second_form", "h22", "h31", "zalcman23", "a3_minus_a2sq", "a4_minus_w11_a3"):
            self.assertIn(required, names)

    def test_catalogue_values_stay_below_maxima(self) -> None:
        ceiling = {name: global_max(get_bound_function(name)).value for name in ("F1", "F2", "F3", "F4")}
        h31_total = theorem_h31_bound().total
        for item in catalogue(10):
            a = vector(item.series)
            self.assertLessEqual(abs(log_coefficients(item.series, 3)[3]), ceiling["F1"], item.name)
            self.assertLessEqual(diff43(a), ceiling["F2"], item.name)
            self.assertLessEqual(abs(zalcman23(a)), ceiling["F3"], item.name)
            self.assertLessEqual(abs(hankel2(a)), ceiling["F4"], item.name)
            self.assertLessEqual(abs(hankel3(a)), h31_total, item.name)


if __name__ == "__main__":
    unittest.main()
