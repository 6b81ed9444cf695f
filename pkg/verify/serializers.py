from rest_framework import serializers


class IdentityResidualSerializer(serializers.Serializer):
    """
    Identity Residual serializer
    """

    lhs = serializers.FloatField()
    rhs_volume = serializers.FloatField()
    rhs_boundary = serializers.FloatField()
    residual = serializers.FloatField()
    scale = serializers.FloatField()
    error_estimate = serializers.FloatField()


class MultiplierResidualsSerializer(serializers.Serializer):
    """
    Multiplier identity residuals serializer
    """

    radius = serializers.FloatField()
    first = serializers.FloatField()
    second = serializers.FloatField()
    third = serializers.FloatField()
    combined = serializers.FloatField()
    combined_boundary = serializers.FloatField()
