import json
import tempfile
from pathlib import Path
import numpy as np
from django.test import SimpleTestCase
from rest_framework.renderers import JSONRenderer
from fields.params import ProblemParams
from shooting.nonlinearity import constant_solutions, nonlinearity
from shooting.profiles import (
    PROFILE_COLUMNS,
    ShootOutcome,
    classify_outcome,
    constant_profile,
    integrate_profile,
)
from shooting.serializers import ShootResultSerializer
from shooting.storage import read_profile, write_profile
from shooting.tests.factories import OdeSpecFactory, ShootingParamsFactory


class IntegrateProfileTestCase(SimpleTestCase):
    """
    Integrate Profile Test Case
    """

    def setUp(self):
        self.params = ShootingParamsFactory()

    def test_null_solution(self):
        """
        Test alpha = 0 stays at zero
        """
        result = integrate_profile(self.params, 0.0)
        self.assertEqual(result.outcome, ShootOutcome.CONVERGED_TO_CONSTANT)
        self.assertEqual(result.sup_norm, 0.0)

    def test_constant_solution(self):
        """
        Test alpha at the positive constant reproduces it
        """
        kappa = constant_solutions(1.0, 3.0)[-1]
        result = integrate_profile(self.params, kappa)
        self.assertEqual(result.outcome, ShootOutcome.CONVERGED_TO_CONSTANT)
        self.assertLessEqual(np.max(np.abs(result.w - kappa)), 1e-8)
        self.assertEqual(result.r_end, 15.0)

    def test_regular_center(self):
        """
        Test w(0) = alpha and w'(0) = 0
        """
        result = integrate_profile(self.params, 0.3, r_end=2.0)
        self.assertEqual(result.grid[0], 0.0)
        self.assertEqual(result.w[0], 0.3)
        self.assertEqual(result.w_prime[0], 0.0)
        self.assertAlmostEqual(result.w_second[0], -nonlinearity(1.0, 3.0, 0.3) / 3, places=15)

    def test_odd_symmetry(self):
        """
        Test the profile from -alpha is the mirror image and escapes the same way
        """
        up = integrate_profile(self.params, 0.3)
        down = integrate_profile(self.params, -0.3)
        np.testing.assert_array_equal(up.grid, down.grid)
        np.testing.assert_allclose(down.w, -up.w, rtol=0, atol=1e-10)
        self.assertEqual(up.fate, down.fate)

    def test_refinement(self):
        """
        Test halving the error tolerance barely moves the sup norm
        """
        coarse = integrate_profile(self.params, 0.3, r_end=2.0, ode=OdeSpecFactory())
        fine = integrate_profile(self.params, 0.3, r_end=2.0, ode=OdeSpecFactory(error_tol=5e-11))
        self.assertNotEqual(coarse.outcome, ShootOutcome.BLOW_UP)
        self.assertLess(abs(fine.sup_norm / coarse.sup_norm - 1), 1e-6)

    def test_interpolant(self):
        """
        Test the Hermite interpolant reproduces the nodes
        """
        result = integrate_profile(self.params, 0.3, r_end=2.0)
        curve = result.interpolant()
        np.testing.assert_allclose(curve(result.grid), result.w, rtol=0, atol=1e-13)
        np.testing.assert_allclose(curve.derivative()(result.grid), result.w_prime, atol=1e-12)

    def test_escape_without_constants(self):
        """
        Test negative lambda escapes once past the monotone radius
        """
        params = ProblemParams(n=3, p=3.0, lam=-0.5)
        escaped = integrate_profile(params, 0.05, r_end=4.0)
        self.assertNotEqual(escaped.outcome, ShootOutcome.BLOW_UP)
        self.assertGreater(escaped.escape_radius, 2.0)
        self.assertEqual(escaped.fate, -1)

        full = integrate_profile(params, 0.05, r_end=4.0, stop_on_escape=False)
        self.assertNotEqual(full.outcome, ShootOutcome.BLOW_UP)
        self.assertEqual(full.r_end, 4.0)
        self.assertIsNone(full.escape_radius)

    def test_escape_is_not_blow_up(self):
        """
        Test an escaped shot with small |w| keeps the escape apart from its outcome
        """
        result = integrate_profile(self.params, 0.3)
        self.assertNotEqual(result.outcome, ShootOutcome.BLOW_UP)
        self.assertLess(result.sup_norm, 1.0)
        self.assertGreater(result.escape_radius, 2.0)
        self.assertEqual(result.r_end, result.escape_radius)
        self.assertEqual(result.fate, 1)

    def test_blow_up_threshold(self):
        """
        Test BlowUp only once |w| or |w'| crosses the threshold
        """
        spec = OdeSpecFactory(blowup_threshold=10.0)
        result = integrate_profile(self.params, 0.3, ode=spec, stop_on_escape=False)
        self.assertEqual(result.outcome, ShootOutcome.BLOW_UP)
        self.assertIsNone(result.escape_radius)
        self.assertGreater(max(abs(result.w[-1]), abs(result.w_prime[-1])), 10.0)
        self.assertLess(result.r_end, 15.0)

    def test_supercritical_fates_differ(self):
        """
        Test escape direction flips somewhere in the amplitude range for p = 7
        """
        params = ProblemParams(n=3, p=7.0, lam=1.0)
        fates = {integrate_profile(params, alpha).fate for alpha in np.arange(0.05, 4.0001, 0.05)}
        self.assertEqual(fates, {-1, 1})

    def test_preconditions(self):
        """
        Test amplitude and range validation
        """
        for r_end in (0.0, 41.0):
            with self.assertRaises(ValueError):
                integrate_profile(self.params, 0.3, r_end=r_end)
        with self.assertRaises(ValueError):
            integrate_profile(self.params, float("nan"))


class ClassifyOutcomeTestCase(SimpleTestCase):
    """
    Classify Outcome Test Case
    """

    def setUp(self):
        self.params = ProblemParams(n=3, p=3.0, lam=1.0)

    def test_decay_without_crossing(self):
        """
        Test a positive decaying profile stays a bounded candidate
        """
        outcome = classify_outcome(self.params, 0.5, [0.5, 0.4, 0.3], [0.0, -0.1, -0.2], False)
        self.assertEqual(outcome, ShootOutcome.BOUNDED_CANDIDATE)

    def test_crossed_and_decayed(self):
        """
        Test a sign change followed by decay
        """
        outcome = classify_outcome(self.params, 0.5, [0.5, -0.2, 0.01], [0.0, -0.1, 0.02], False)
        self.assertEqual(outcome, ShootOutcome.CROSSED_ZERO_AND_DECAYED)

    def test_constant_and_blow_up(self):
        """
        Test constants are recognised and blow-up takes precedence
        """
        kappa = constant_solutions(1.0, 3.0)[-1]
        outcome = classify_outcome(self.params, 0.9, [0.9, kappa], [0.0, 0.0], False)
        self.assertEqual(outcome, ShootOutcome.CONVERGED_TO_CONSTANT)
        outcome = classify_outcome(self.params, 0.9, [0.9, kappa], [0.0, 0.0], True)
        self.assertEqual(outcome, ShootOutcome.BLOW_UP)


class ConstantProfileTestCase(SimpleTestCase):
    """
    Constant Profile Test Case
    """

    def test_profile(self):
        """
        Test the exact constant profile
        """
        params = ShootingParamsFactory()
        kappa = constant_solutions(1.0, 3.0)[-1]
        result = constant_profile(params, kappa, r_end=12.0, points=121)
        self.assertEqual(len(result.grid), 121)
        self.assertTrue(np.all(result.w == kappa))
        self.assertTrue(np.all(result.w_prime == 0))
        self.assertEqual(result.fate, 0)

    def test_rejects_non_constant(self):
        """
        Test a value that is not a zero of f
        """
        with self.assertRaises(ValueError):
            constant_profile(ShootingParamsFactory(), 0.5)


class ShootArtifactsTestCase(SimpleTestCase):
    """
    Shoot Artifacts Test Case
    """

    def test_summary_json(self):
        """
        Test the summary is strict JSON
        """
        result = integrate_profile(ShootingParamsFactory(), 0.3)
        payload = json.loads(JSONRenderer().render(ShootResultSerializer(result).data))
        self.assertNotEqual(payload["outcome"], "BlowUp")
        self.assertEqual(payload["alpha"], 0.3)
        self.assertEqual(payload["fate"], 1)
        self.assertGreater(payload["escape_radius"], 2.0)
        self.assertIsNone(payload["faithful_radius"])
        self.assertFalse(payload["evidence_only"])

    def test_written_pair_reads_back(self):
        """
        Test PREFIX.csv and PREFIX.json restore the profile
        """
        result = integrate_profile(ShootingParamsFactory(), 0.3, r_end=2.0)
        with tempfile.TemporaryDirectory() as directory:
            prefix = Path(directory) / "shot"
            csv_path, _ = write_profile(result, prefix)
            header = csv_path.read_text().splitlines()[0]
            restored = read_profile(prefix)
        self.assertEqual(header.split(","), PROFILE_COLUMNS)
        np.testing.assert_array_equal(restored.w, result.w)
        np.testing.assert_array_equal(restored.grid, result.grid)
        self.assertEqual(restored.params, result.params.with_mu(1.0))
        self.assertEqual(restored.outcome, result.outcome)
        self.assertEqual(restored.fate, result.fate)

    def test_missing_artifacts(self):
        """
        Test reading a prefix with no files
        """
        with tempfile.TemporaryDirectory() as directory:
            with self.assertRaises(FileNotFoundError):
                read_profile(Path(directory) / "missing")
