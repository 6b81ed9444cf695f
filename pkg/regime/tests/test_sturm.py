from unittest.mock import patch
import numpy as np
from django.test import SimpleTestCase
from fields.params import ProblemParams
from kummer.functions import KummerArgs
from regime.exceptions import DomainError, NoKappa, OmegaVanishes
from regime.sturm import (
    picone_residual,
    sturm_markers,
    u2_prime,
    u2_prime_integral,
    u_args,
    u_system_residuals,
)


class SturmMarkersTestCase(SimpleTestCase):
    """
    Sturm Markers Test Case
    """

    def test_ordering(self):
        """
        Test 0 < root_u3 < iota < kappa and Pi(iota) < 0
        """
        for n, lam in ((3, 2.5), (5, 2.5), (4, 3.5)):
            with self.subTest(n=n, lam=lam):
                markers = sturm_markers(ProblemParams.critical(n, lam))
                self.assertTrue(markers.ordering_holds)
                self.assertLess(markers.pi_at_iota, 0)

    def test_ordering_is_quiet(self):
        """
        Test no warning when the ordering holds
        """
        with self.assertNoLogs(level="WARNING"):
            sturm_markers(ProblemParams.critical(3, 2.5))

    def test_positive_pi_warns(self):
        """
        Test a warning when Pi(iota) is not negative
        """
        with patch("regime.sturm.pi_profile") as mock:
            mock.return_value = 0.5
            with self.assertLogs(level="WARNING") as logs:
                markers = sturm_markers(ProblemParams.critical(3, 2.5))
        self.assertEqual(markers.pi_at_iota, 0.5)
        self.assertIn("Pi(iota) < 0", logs.output[0])

    def test_broken_ordering_warns(self):
        """
        Test a warning when the root of u3 does not precede iota
        """
        with patch("regime.sturm.radial_roots") as mock:
            mock.side_effect = [[2.0, 5.0], [3.0], [4.0]]
            with self.assertLogs(level="WARNING"):
                markers = sturm_markers(ProblemParams.critical(3, 2.5))
        self.assertFalse(markers.ordering_holds)

    def test_second_iota(self):
        """
        Test a root of u2 between the first two roots of u1 with Pi > 0 there
        """
        markers = sturm_markers(ProblemParams.critical(4, 3.5))
        self.assertIsNotNone(markers.kappa2)
        self.assertIsNotNone(markers.iota2)
        self.assertLess(markers.kappa, markers.iota2)
        self.assertLess(markers.iota2, markers.kappa2)
        self.assertGreater(markers.pi_at_iota2, 0)

    def test_no_second_iota_below_three(self):
        """
        Test iota2 is only sought for lambda > 3
        """
        self.assertIsNone(sturm_markers(ProblemParams.critical(3, 2.5)).iota2)

    def test_no_kappa(self):
        """
        Test u1 without positive roots
        """
        with self.assertRaises(NoKappa):
            sturm_markers(ProblemParams.critical(3, 1.5))
        with self.assertRaises(DomainError):
            sturm_markers(ProblemParams.critical(3, 1.0))


class PiconeTestCase(SimpleTestCase):
    """
    Picone Test Case
    """

    def setUp(self):
        self.params = ProblemParams.critical(3, 2.5)
        (self.u1, self.k1), (self.u2, self.k2), (self.u3, self.k3) = u_args(self.params)
        self.markers = sturm_markers(self.params)

    def test_identical_functions(self):
        """
        Test the identity collapses for v = omega
        """
        residual = picone_residual(self.u2, self.u2, self.k2, (0.1, self.markers.iota - 0.05))
        self.assertLessEqual(residual, 1e-9)

    def test_first_pair(self):
        """
        Test (u1, u2) with K = r^(n+3) rho
        """
        residual = picone_residual(self.u1, self.u2, self.k2, (0.1, self.markers.iota - 0.05))
        self.assertLessEqual(residual, 1e-6)

    def test_second_pair(self):
        """
        Test (u2, u3) with K = r^(n+1) rho up to the first root of u3
        """
        residual = picone_residual(self.u2, self.u3, self.k3, (0.1, self.markers.root_u3 - 0.05))
        self.assertLessEqual(residual, 1e-6)

    def test_omega_vanishes(self):
        """
        Test omega crossing zero inside the range
        """
        with self.assertRaises(OmegaVanishes):
            picone_residual(self.u1, self.u2, self.k2, (0.1, self.markers.iota + 1.0))

    def test_invalid_range(self):
        """
        Test reversed or non-positive ranges
        """
        with self.assertRaises(ValueError):
            picone_residual(self.u1, self.u2, self.k2, (0.0, 1.0))
        with self.assertRaises(ValueError):
            picone_residual(KummerArgs(1, 2), KummerArgs(1, 2), 4, (2.0, 1.0))


class USystemTestCase(SimpleTestCase):
    """
    U System Test Case
    """

    def test_residuals(self):
        """
        Test each u solves its weighted Sturm-Liouville equation
        """
        for n, lam in ((3, 2.5), (4, 3.5), (6, 1.5)):
            params = ProblemParams.critical(n, lam)
            for r in np.linspace(0.2, 12, 30):
                with self.subTest(n=n, lam=lam, r=r):
                    for residual in u_system_residuals(params, r):
                        self.assertLessEqual(residual, 1e-7)

    def test_u2_decreasing_before_iota(self):
        """
        Test u2' < 0 on (0, iota] through the integral representation
        """
        params = ProblemParams.critical(3, 2.5)
        iota = sturm_markers(params).iota
        for r in np.linspace(iota / 20, iota, 20):
            with self.subTest(r=r):
                value = u2_prime_integral(params, r)
                self.assertLess(value, 0)
                self.assertAlmostEqual(value / u2_prime(params, r), 1.0, places=6)
