from rest_framework import serializers
from fields.serializers import ProblemParamsSerializer


class SignChangeSerializer(serializers.Serializer):
    """
    Sign Change serializer
    """

    quantity = serializers.CharField()
    r = serializers.FloatField()
    sign = serializers.IntegerField()


class SturmMarkersSerializer(serializers.Serializer):
    """
    Sturm Markers serializer
    """

    root_u3 = serializers.FloatField()
    iota = serializers.FloatField()
    kappa = serializers.FloatField()
    kappa2 = serializers.FloatField(allow_null=True)
    iota2 = serializers.FloatField(allow_null=True)
    pi_at_iota = serializers.FloatField()
    pi_at_iota2 = serializers.FloatField(allow_null=True)
    ordering_holds = serializers.BooleanField()


class RegimeReportSerializer(serializers.Serializer):
    """
    Regime Report serializer
    """

    params = ProblemParamsSerializer()
    mu = serializers.FloatField()
    classification = serializers.CharField()
    analytic_prediction = serializers.CharField()
    evidence = SignChangeSerializer(many=True)
    origin_limit = serializers.FloatField()
    first_sign_change_r = serializers.FloatField(allow_null=True)
    markers = SturmMarkersSerializer(allow_null=True)
