import math
import numpy as np
from django.test import SimpleTestCase
from numerics.exceptions import StepUnderflow
from numerics.ode import OdeOutcome, rk_adaptive, taylor_seed
from numerics.tests.factories import OdeSpecFactory


def hermite_rhs(a, b):
    def rhs(r, y):
        return np.array([y[1], a * y[0] - ((2 * b - 1) / r - r / 2) * y[1]])

    return rhs


class RkAdaptiveTestCase(SimpleTestCase):
    """
    Rk Adaptive Test Case
    """

    def test_exponential(self):
        """
        Test y' = y reaches e
        """
        trajectory = rk_adaptive(lambda r, y: y, 0.0, [1.0], 1.0)
        self.assertEqual(trajectory.outcome, OdeOutcome.COMPLETED)
        self.assertEqual(trajectory.final_r, 1.0)
        self.assertAlmostEqual(trajectory.final_state[0], math.e, delta=1e-8)

    def test_constant(self):
        """
        Test zero right-hand side keeps the state
        """
        trajectory = rk_adaptive(lambda r, y: np.zeros_like(y), 0.0, [3.0, -1.0], 2.0)
        self.assertTrue(np.all(trajectory.states[:, 0] == 3.0))
        self.assertTrue(np.all(trajectory.states[:, 1] == -1.0))

    def test_hermite_polynomial_solution(self):
        """
        Test seeded Hermite equation follows 1 - r^2/(2n)
        """
        n = 3
        h = 1e-4
        a, b = -1.0, n / 2
        seed = taylor_seed(1.0, a / (2 * b), h)
        trajectory = rk_adaptive(hermite_rhs(a, b), h, seed, 5.0)
        expected = 1 - trajectory.r**2 / (2 * n)
        np.testing.assert_allclose(trajectory.states[:, 0], expected, atol=1e-8)

    def test_blow_up_threshold(self):
        """
        Test blow-up stops integration
        """
        spec = OdeSpecFactory(blowup_threshold=1e3)
        trajectory = rk_adaptive(lambda r, y: y * y, 0.0, [1.0], 0.9999, spec=spec)
        self.assertEqual(trajectory.outcome, OdeOutcome.BLOW_UP)
        self.assertTrue(trajectory.blew_up)
        self.assertLess(trajectory.final_r, 0.9999)

    def test_escape_predicate(self):
        """
        Test escape predicate ends integration apart from blow-up
        """
        trajectory = rk_adaptive(
            lambda r, y: np.ones_like(y), 0.0, [0.0], 10.0, escape=lambda r, y: y[0] > 2
        )
        self.assertEqual(trajectory.outcome, OdeOutcome.ESCAPED)
        self.assertTrue(trajectory.escaped)
        self.assertFalse(trajectory.blew_up)
        self.assertGreater(trajectory.final_state[0], 2)

    def test_step_underflow(self):
        """
        Test step underflow when the right-hand side stops being finite
        """
        spec = OdeSpecFactory(min_step=1e-6, initial_step=1e-3)

        def rhs(r, y):
            return np.full_like(y, np.nan) if r > 0.5 else np.ones_like(y)

        with self.assertRaises(StepUnderflow):
            rk_adaptive(rhs, 0.0, [0.0], 2.0, spec=spec)

    def test_nodes_increase(self):
        """
        Test accepted nodes are strictly increasing
        """
        trajectory = rk_adaptive(lambda r, y: -y, 0.0, [1.0], 3.0)
        self.assertTrue(np.all(np.diff(trajectory.r) > 0))

    def test_reversed_range_rejected(self):
        """
        Test r_end before r0 is rejected
        """
        with self.assertRaises(ValueError):
            rk_adaptive(lambda r, y: y, 1.0, [1.0], 0.0)

    def test_spec_validation(self):
        """
        Test min_step cannot exceed initial_step
        """
        with self.assertRaises(ValueError):
            OdeSpecFactory(min_step=1e-2, initial_step=1e-3)
