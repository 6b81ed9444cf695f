import math
from django.test import SimpleTestCase
from kummer.exceptions import WindowTooSmall
from kummer.functions import kummer_m
from kummer.roots import positive_roots, positive_roots_escalating


class PositiveRootsTestCase(SimpleTestCase):
    """
    Positive Roots Test Case
    """

    def test_no_roots_for_nonnegative_a(self):
        """
        Test a >= 0 has no positive roots
        """
        self.assertEqual(positive_roots(1, 2, 100).roots, ())
        self.assertEqual(positive_roots(0, 2, 10).count, 0)

    def test_linear_polynomial_root(self):
        """
        Test root of 1 - xi/2
        """
        roots = positive_roots(-1, 2, 10)
        self.assertEqual(roots.count, 1)
        self.assertAlmostEqual(roots.roots[0], 2.0, places=9)

    def test_non_integer_a(self):
        """
        Test ceil(-a) roots for a = -2.3
        """
        roots = positive_roots(-2.3, 1.5, 50)
        self.assertEqual(roots.count, 3)
        for root in roots:
            self.assertLess(abs(kummer_m(-2.3, 1.5, root)), 1e-6)

    def test_window_too_small(self):
        """
        Test narrow window raises WindowTooSmall
        """
        with self.assertRaises(WindowTooSmall):
            positive_roots(-2.5, 4, 0.5)

    def test_invalid_window(self):
        """
        Test nonpositive window is rejected
        """
        with self.assertRaises(ValueError):
            positive_roots(-1, 2, 0)

    def test_root_count_table(self):
        """
        Test root count equals ceil(-a) with window escalation
        """
        for a in (-0.5, -1.5, -2.5, -3.5):
            for n in range(3, 9):
                with self.subTest(a=a, n=n):
                    roots = positive_roots_escalating(a, n / 2, xi_start=1.0)
                    self.assertEqual(roots.count, math.ceil(-a))
                    self.assertTrue(all(x > 0 for x in roots))
