import math

from rest_framework import serializers


class ProblemParamsSerializer(serializers.Serializer):
    """
    Problem Params serializer
    """

    n = serializers.IntegerField()
    p = serializers.FloatField()
    mu = serializers.FloatField(source="field_mu")
    p_s = serializers.SerializerMethodField()
    critical = serializers.BooleanField(source="is_critical")

    def get_fields(self):
        fields = super().get_fields()
        fields["lambda"] = serializers.FloatField(source="lam")
        return fields

    def get_p_s(self, obj):
        # JSON has no infinity
        return obj.p_s if math.isfinite(obj.p_s) else None


class FieldProfileSerializer(serializers.Serializer):
    """
    Field Profile serializer
    """

    r = serializers.ListField(child=serializers.FloatField(), source="grid")
    sigma = serializers.ListField(child=serializers.FloatField())
    q = serializers.ListField(child=serializers.FloatField())
    I = serializers.ListField(child=serializers.FloatField(), source="i_coef")  # noqa: E741
    J = serializers.ListField(child=serializers.FloatField(), source="j_coef")
    pi = serializers.ListField(child=serializers.FloatField())
