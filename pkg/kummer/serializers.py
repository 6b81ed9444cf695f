from rest_framework import serializers


class RootListSerializer(serializers.Serializer):
    """
    Root List serializer
    """

    roots = serializers.ListField(child=serializers.FloatField())
    count = serializers.IntegerField()
