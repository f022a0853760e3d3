from __future__ import annotations

import math
import unittest

from support import SRC  # noqa: F401

from grunskybounds.bound_optimizer import (
    EDGE_ORDER,
    boundary_max,
    boundary_report,
    enclosure_matches,
    global_max,
    grid_oracle,
    grid_search,
    interior_critical_points,
    prefix_matches,
    region_grid,
    theorem_h31_bound,
    truncation_range,
)
from grunskybounds.objectives import BOUND_FUNCTIONS, REGION, get_bound_function


def near(result, point, delta) -> bool:
    return math.hypot(result.argmax[0] - point[0], result.argmax[1] - point[1]) <= delta


class InteriorTests(unittest.TestCase):
    def test_f1(self) -> None:
        roots = interior_critical_points(get_bound_function("F1"))
        best = max(roots, key=lambda r: r.value)
        self.assertTrue(near(best, (0.81267, 0.243532), 1e-4), best)
        self.assertGreaterEqual(best.value, 0.5566178)
        self.assertLess(best.value, 0.5566179)
        self.assertTrue(all(r.residual < 1e-10 for r in roots))

    def test_f2(self) -> None:
        roots = interior_critical_points(get_bound_function("F2"))
        self.assertTrue(any(near(r, (0.836343, 0.2872063), 1e-4) for r in roots))

    def test_phi2(self) -> None:
        roots = interior_critical_points(get_bound_function("PHI2"))
        match = [r for r in roots if near(r, (1 / math.sqrt(5), 1 / math.sqrt(15)), 1e-8)]
        self.assertEqual(len(match), 1)
        self.assertAlmostEqual(match[0].value, 4 / (5 * math.sqrt(3)), delta=1e-12)

    def test_f4_saddle(self) -> None:
        roots = interior_critical_points(get_bound_function("F4"))
        match = [r for r in roots if near(r, (math.sqrt(11 / 30), math.sqrt(281 / 1800)), 1e-6)]
        self.assertEqual(len(match), 1)
        self.assertAlmostEqual(match[0].value, 1079 / 900, delta=1e-9)

    def test_no_interior_roots(self) -> None:
        self.assertEqual(interior_critical_points(get_bound_function("F3")), [])
        self.assertEqual(interior_critical_points(get_bound_function("PHI1")), [])

    def test_roots_are_deduplicated_and_inside(self) -> None:
        for fn in BOUND_FUNCTIONS.values():
            roots = interior_critical_points(fn)
            for i, a in enumerate(roots):
                self.assertEqual(a.location, "interior")
                self.assertTrue(REGION.strictly_inside(*a.argmax))
                for b in roots[i + 1 :]:
                    self.assertGreater(math.hypot(a.argmax[0] - b.argmax[0], a.argmax[1] - b.argmax[1]), 1e-6)


class BoundaryTests(unittest.TestCase):
    def test_f4_y0(self) -> None:
        result = boundary_max(get_bound_function("F4"), "y0")
        self.assertTrue(prefix_matches(result.value, "1.3614356"))
        self.assertAlmostEqual(result.argmax[0], 0.918107, delta=1e-5)
        self.assertEqual(result.argmax[1], 0.0)

    def test_f3_y0(self) -> None:
        result = boundary_max(get_bound_function("F3"), "y0")
        self.assertTrue(prefix_matches(result.value, "2.10064"))
        self.assertAlmostEqual(result.argmax[0], 0.9740, delta=1e-3)

    def test_phi1_curve(self) -> None:
        result = boundary_max(get_bound_function("PHI1"), "curve")
        self.assertAlmostEqual(result.value, 0.977237979066635, delta=1e-11)
        self.assertTrue(prefix_matches(result.value, "0.977238", rounded=True))
        self.assertFalse(prefix_matches(result.value, "0.977238"))
        self.assertAlmostEqual(result.argmax[0], 0.813, delta=1e-3)

    def test_f1_corner(self) -> None:
        result = boundary_max(get_bound_function("F1"), "x1")
        self.assertAlmostEqual(result.value, 1 / 3, delta=1e-15)
        self.assertEqual(result.argmax, (1.0, 0.0))

    def test_f2_curve(self) -> None:
        result = boundary_max(get_bound_function("F2"), "curve")
        self.assertAlmostEqual(result.value, 1.649614024793, delta=1e-11)
        self.assertAlmostEqual(result.argmax[0], 0.862808, delta=1e-5)

    def test_rounded_and_misprinted_curve_entries(self) -> None:
        phi1 = {r.edge: r for r in boundary_report(get_bound_function("PHI1"))}["curve"]
        self.assertTrue(phi1.matches)
        self.assertLess(phi1.reference_gap, 1e-11)
        f2 = {r.edge: r for r in boundary_report(get_bound_function("F2"))}["curve"]
        self.assertFalse(f2.matches)
        self.assertLess(f2.reference_gap, 1e-11)
        self.assertIsNone({r.edge: r for r in boundary_report(get_bound_function("F4"))}["y0"].reference_gap)

    def test_f1_curve_exceeds_printed_bound(self) -> None:
        reports = {r.edge: r for r in boundary_report(get_bound_function("F1"))}
        curve = reports["curve"]
        self.assertGreater(curve.result.value, 1 / math.sqrt(5))
        self.assertAlmostEqual(curve.result.value, 0.4695, delta=1e-4)
        self.assertAlmostEqual(curve.result.argmax[0], 0.8983441461, delta=1e-8)
        self.assertFalse(curve.matches)
        self.assertTrue(reports["x1"].matches)

    def test_reports_cover_every_edge(self) -> None:
        for fn in BOUND_FUNCTIONS.values():
            self.assertEqual([r.edge for r in boundary_report(fn)], list(EDGE_ORDER))
        phi2 = {r.edge: r for r in boundary_report(get_bound_function("PHI2"))}
        self.assertIsNone(phi2["x1"].matches)
        self.assertTrue(phi2["curve"].matches)


class GlobalMaxTests(unittest.TestCase):
    def test_gamma3(self) -> None:
        result = global_max(get_bound_function("F1"))
        self.assertEqual(result.location, "interior")
        self.assertGreaterEqual(result.value, 0.5566178)
        self.assertLessEqual(result.value, 0.5566179)

    def test_diff43(self) -> None:
        result = global_max(get_bound_function("F2"))
        self.assertEqual(result.location, "interior")
        self.assertGreaterEqual(result.value, 1.751853)
        self.assertLessEqual(result.value, 1.751854)
        self.assertTrue(near(result, (0.836343, 0.2872063), 1e-4))

    def test_zalcman(self) -> None:
        result = global_max(get_bound_function("F3"))
        self.assertEqual(result.location, "y0")
        self.assertGreaterEqual(result.value, 2.10064)
        self.assertLessEqual(result.value, 2.10065)

    def test_h22(self) -> None:
        result = global_max(get_bound_function("F4"))
        self.assertEqual(result.location, "y0")
        self.assertGreaterEqual(result.value, 1.3614356)
        self.assertLessEqual(result.value, 1.3614357)
        self.assertAlmostEqual(result.argmax[0], 0.918107, delta=1e-4)

    def test_dominates_every_candidate(self) -> None:
        for fn in BOUND_FUNCTIONS.values():
            best = global_max(fn)
            for root in interior_critical_points(fn):
                self.assertGreaterEqual(best.value, root.value)
            for edge in EDGE_ORDER:
                self.assertGreaterEqual(best.value, boundary_max(fn, edge).value)

    def test_deterministic(self) -> None:
        fn = get_bound_function("PHI1")
        self.assertEqual(global_max(fn), global_max(fn))


class GridTests(unittest.TestCase):
    def test_region_grid_clips_curve(self) -> None:
        xs, ys = region_grid(2, 2)
        self.assertEqual(list(zip(xs.tolist(), ys.tolist()))[:2], [(0.0, 0.0), (0.0, math.sqrt(1 / 3))])
        self.assertEqual(len(xs), 3)
        self.assertEqual(len(region_grid(3, 3)[0]), 6)

    def test_small_grid_is_a_lower_bound(self) -> None:
        for fn in BOUND_FUNCTIONS.values():
            self.assertLessEqual(grid_oracle(fn, 2, 2), global_max(fn).value + 1e-12)

    def test_dense_oracle_agrees(self) -> None:
        for fn in BOUND_FUNCTIONS.values():
            best = global_max(fn).value
            oracle = grid_oracle(fn, 2001, 2001)
            self.assertLessEqual(oracle, best + 1e-12, fn.name)
            self.assertLessEqual(best - oracle, 1e-4, fn.name)

    def test_grid_search_result(self) -> None:
        result = grid_search(get_bound_function("F3"), 201, 201)
        self.assertEqual(result.method, "grid")
        self.assertEqual(result.location, "y0")
        self.assertTrue(REGION.contains(*result.argmax))


class H31Tests(unittest.TestCase):
    def test_newton(self) -> None:
        bound = theorem_h31_bound(1e-10)
        self.assertAlmostEqual(bound.b1, 0.97723798, delta=1e-8)
        self.assertAlmostEqual(bound.b2, 64 / 75, delta=1e-9)
        self.assertGreaterEqual(bound.total, 1.830571)
        self.assertLessEqual(bound.total, 1.830572)
        self.assertTrue(prefix_matches(bound.total, bound.published, 5))
        self.assertEqual(bound.b1_result.location, "curve")
        self.assertEqual(bound.b2_result.location, "interior")

    def test_labels(self) -> None:
        bound = theorem_h31_bound(1e-10)
        self.assertEqual(bound.published, "1.83056")
        self.assertEqual(bound.announced, "2.321434")

    def test_grid(self) -> None:
        bound = theorem_h31_bound(1e-10, method="grid", nx=401, ny=401)
        self.assertEqual(bound.method, "grid")
        self.assertLessEqual(bound.total, theorem_h31_bound(1e-10).total + 1e-12)


class PublishedMatchingTests(unittest.TestCase):
    def test_truncation_range(self) -> None:
        start, end = truncation_range("0.5566178")
        self.assertAlmostEqual(start, 0.5566178, delta=1e-15)
        self.assertAlmostEqual(end, 0.5566179, delta=1e-15)
        start, end = truncation_range("1.83056", 5)
        self.assertAlmostEqual(start, 1.8305, delta=1e-15)
        self.assertAlmostEqual(end, 1.8306, delta=1e-15)

    def test_prefix_matches(self) -> None:
        self.assertTrue(prefix_matches(0.55661786, "0.5566178"))
        self.assertFalse(prefix_matches(0.5566177, "0.5566178"))
        self.assertFalse(prefix_matches(0.556618, "0.5566178"))
        self.assertTrue(prefix_matches(1.8305715, "1.83056", 5))
        self.assertFalse(prefix_matches(1.8305715, "1.83056"))

    def test_enclosure_matches(self) -> None:
        self.assertTrue(enclosure_matches((1.36143, 1.3614357), "1.3614356"))
        self.assertFalse(enclosure_matches((1.0, 1.2), "1.3614356"))


if __name__ == "__main__":
    unittest.main()
