import json
import numpy as np
from django.test import SimpleTestCase
from rest_framework.renderers import JSONRenderer
from fields.params import ProblemParams
from fields.profile import PROFILE_COLUMNS, build_profile
from fields.serializers import FieldProfileSerializer, ProblemParamsSerializer
from fields.tests.factories import ProblemParamsFactory


class BuildProfileTestCase(SimpleTestCase):
    """
    Build Profile Test Case
    """

    def setUp(self):
        self.params = ProblemParamsFactory(n=4, p=2.5, lam=0.5)
        self.profile = build_profile(self.params, grid=np.linspace(0, 8, 33))

    def test_origin_normalisation(self):
        """
        Test sigma(0) = 1 and q(0) = n
        """
        self.assertEqual(self.profile.sigma[0], 1.0)
        self.assertEqual(self.profile.q[0], 4.0)

    def test_pi_is_sum(self):
        """
        Test pi = I + J pointwise
        """
        np.testing.assert_array_equal(self.profile.pi, self.profile.i_coef + self.profile.j_coef)

    def test_dataframe(self):
        """
        Test dataframe columns
        """
        frame = self.profile.to_dataframe()
        self.assertEqual(list(frame.columns), PROFILE_COLUMNS)
        self.assertEqual(len(frame), 33)

    def test_rejects_unsorted_grid(self):
        """
        Test grid validation
        """
        with self.assertRaises(ValueError):
            build_profile(self.params, grid=[0.0, 2.0, 1.0])

    def test_serializer(self):
        """
        Test JSON rendering of the profile
        """
        data = json.loads(JSONRenderer().render(FieldProfileSerializer(self.profile).data))
        self.assertEqual(set(data), set(PROFILE_COLUMNS))
        self.assertEqual(data["q"][0], 4.0)


class ProblemParamsSerializerTestCase(SimpleTestCase):
    """
    Problem Params Serializer Test Case
    """

    def test_infinite_sobolev_exponent(self):
        """
        Test infinite p_S is rendered as null
        """
        data = ProblemParamsSerializer(ProblemParamsFactory(n=2, lam=-1.0)).data
        self.assertIsNone(data["p_s"])
        self.assertEqual(data["lambda"], -1.0)
        self.assertEqual(data["mu"], 0.0)

    def test_critical_flag(self):
        """
        Test critical flag
        """
        data = ProblemParamsSerializer(ProblemParams.critical(3, 1.0)).data
        self.assertTrue(data["critical"])
        self.assertEqual(data["p_s"], 5.0)
