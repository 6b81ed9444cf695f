from rest_framework import serializers
from fields.serializers import ProblemParamsSerializer
from shooting.profiles import ShootOutcome
from shooting.search import distance_from_constants


class ShootResultSerializer(serializers.Serializer):
    """
    Shoot Result summary serializer
    """

    params = ProblemParamsSerializer()
    alpha = serializers.FloatField()
    outcome = serializers.CharField()
    r_end = serializers.FloatField()
    sup_norm = serializers.FloatField()
    escape_radius = serializers.FloatField(allow_null=True)
    fate = serializers.IntegerField()
    faithful_radius = serializers.FloatField(allow_null=True)
    distance_from_constants = serializers.SerializerMethodField()
    evidence_only = serializers.SerializerMethodField()

    def get_distance_from_constants(self, obj):
        return distance_from_constants(obj)

    def get_evidence_only(self, obj):
        # shooting shows candidates, it proves nothing
        return obj.outcome == ShootOutcome.BOUNDED_CANDIDATE and obj.escape_radius is None
