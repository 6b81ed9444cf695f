"""
Validated run configuration for the management commands
"""
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from django.db import models
from rest_framework import serializers

from fields.params import ProblemParams
from numerics.specs import OdeSpec
from regime.sweep import build_points, parse_range, resolve_p
from shooting.profiles import DEFAULT_R_END, MAX_R_END


class RunCommand(models.TextChoices):
    EVAL = "eval"
    ROOTS = "roots"
    REGIME = "regime"
    SWEEP = "sweep"
    SHOOT = "shoot"
    VERIFY = "verify"
    FIELDS = "fields"


class OutputFormat(models.TextChoices):
    CSV = "csv"
    JSON = "json"


PARAMS_COMMANDS = (RunCommand.REGIME, RunCommand.SHOOT, RunCommand.FIELDS)

# format, r_max, grid points
COMMAND_DEFAULTS = {
    RunCommand.EVAL: (OutputFormat.JSON, 30.0, 600),
    RunCommand.ROOTS: (OutputFormat.JSON, 30.0, 600),
    RunCommand.REGIME: (OutputFormat.JSON, 30.0, 600),
    RunCommand.SWEEP: (OutputFormat.CSV, 30.0, 600),
    RunCommand.SHOOT: (OutputFormat.JSON, 30.0, 600),
    RunCommand.VERIFY: (OutputFormat.JSON, 30.0, 600),
    RunCommand.FIELDS: (OutputFormat.CSV, 10.0, 201),
}


@dataclass
class RunConfig:
    """
    Run Config
    """

    command: str
    params: Optional[ProblemParams] = None
    output_path: Optional[Path] = None
    format: str = OutputFormat.JSON
    a: Optional[float] = None
    b: Optional[float] = None
    xi: Optional[float] = None
    xi_max: Optional[float] = None
    alpha: Optional[float] = None
    bracket: Optional[tuple] = None
    points: list = field(default_factory=list)
    profile: Optional[Path] = None
    mu: Optional[float] = None
    radius: Optional[float] = None
    r_max: float = 30.0
    grid_points: int = 600
    r_end: float = DEFAULT_R_END
    jobs: Optional[int] = None
    markers: bool = False
    multipliers: bool = False
    ode: OdeSpec = field(default_factory=OdeSpec)


class RunConfigSerializer(serializers.Serializer):
    """
    Run Config serializer
    """

    command = serializers.ChoiceField(choices=RunCommand.choices)
    n = serializers.IntegerField(required=False, min_value=1)
    p = serializers.CharField(required=False)
    lam = serializers.FloatField(required=False)
    mu = serializers.FloatField(required=False, allow_null=True)
    output = serializers.CharField(required=False, allow_null=True, allow_blank=False)
    format = serializers.ChoiceField(choices=OutputFormat.choices, required=False)
    a = serializers.FloatField(required=False)
    b = serializers.FloatField(required=False)
    xi = serializers.FloatField(required=False)
    xi_max = serializers.FloatField(required=False, allow_null=True)
    alpha = serializers.FloatField(required=False, allow_null=True)
    bracket = serializers.ListField(
        child=serializers.FloatField(), min_length=2, max_length=2, required=False, allow_null=True
    )
    n_range = serializers.CharField(required=False, allow_null=True)
    lambda_range = serializers.CharField(required=False, allow_null=True)
    profile = serializers.CharField(required=False, allow_null=True)
    radius = serializers.FloatField(required=False, allow_null=True)
    r_max = serializers.FloatField(required=False, allow_null=True)
    grid_points = serializers.IntegerField(required=False, allow_null=True, min_value=2)
    r_end = serializers.FloatField(default=DEFAULT_R_END)
    jobs = serializers.IntegerField(required=False, allow_null=True, min_value=1)
    markers = serializers.BooleanField(default=False)
    multipliers = serializers.BooleanField(default=False)

    def _require(self, attrs, *names):
        missing = [name for name in names if attrs.get(name) is None]
        if missing:
            raise serializers.ValidationError(
                {name: f"Required by the {attrs['command']} command." for name in missing}
            )

    def _params(self, attrs):
        self._require(attrs, "n", "p", "lam")
        try:
            p = resolve_p(attrs["p"], attrs["n"])
            return ProblemParams(n=attrs["n"], p=p, lam=attrs["lam"], mu=attrs.get("mu"))
        except ValueError as exc:
            raise serializers.ValidationError({"params": str(exc)})

    def _sweep_points(self, attrs):
        self._require(attrs, "n_range", "lambda_range", "p")
        try:
            n_values = parse_range(attrs["n_range"])
            lambda_values = parse_range(attrs["lambda_range"])
            if any(n != int(n) or n < 1 for n in n_values):
                raise ValueError(f"n values must be positive integers, got {n_values}")
            return build_points(
                [int(n) for n in n_values],
                lambda_values,
                attrs["p"],
                attrs["r_max"],
                attrs["grid_points"],
            )
        except ValueError as exc:
            raise serializers.ValidationError({"sweep": str(exc)})

    def validate(self, attrs):
        command = attrs["command"]
        default_format, default_r_max, default_grid_points = COMMAND_DEFAULTS[command]
        if attrs.get("format") is None:
            attrs["format"] = default_format
        if attrs.get("r_max") is None:
            attrs["r_max"] = default_r_max
        if attrs.get("grid_points") is None:
            attrs["grid_points"] = default_grid_points
        for name in ("lam", "mu", "a", "b", "xi", "xi_max", "alpha", "radius", "r_max", "r_end"):
            value = attrs.get(name)
            if value is not None and not math.isfinite(value):
                raise serializers.ValidationError({name: "Must be finite."})
        if not attrs["r_max"] > 0:
            raise serializers.ValidationError({"r_max": "Must be positive."})

        if command == RunCommand.EVAL:
            self._require(attrs, "a", "b", "xi")
        elif command == RunCommand.ROOTS:
            self._require(attrs, "a", "b")
            if attrs.get("xi_max") is not None and attrs["xi_max"] <= 0:
                raise serializers.ValidationError({"xi_max": "Must be positive."})
        elif command == RunCommand.SWEEP:
            attrs["points"] = self._sweep_points(attrs)
        elif command == RunCommand.VERIFY:
            self._require(attrs, "profile")
        if command in PARAMS_COMMANDS:
            attrs["params"] = self._params(attrs)

        if command == RunCommand.SHOOT:
            if (attrs.get("alpha") is None) == (attrs.get("bracket") is None):
                raise serializers.ValidationError("Give exactly one of --alpha and --bracket.")
            if not 0 < attrs["r_end"] <= MAX_R_END:
                raise serializers.ValidationError({"r_end": f"Must lie in (0, {MAX_R_END}]."})
        return attrs

    def create(self, validated_data):
        output = validated_data.get("output")
        profile = validated_data.get("profile")
        bracket = validated_data.get("bracket")
        return RunConfig(
            command=validated_data["command"],
            params=validated_data.get("params"),
            output_path=Path(output) if output else None,
            format=validated_data["format"],
            a=validated_data.get("a"),
            b=validated_data.get("b"),
            xi=validated_data.get("xi"),
            xi_max=validated_data.get("xi_max"),
            alpha=validated_data.get("alpha"),
            bracket=tuple(bracket) if bracket else None,
            points=validated_data.get("points", []),
            profile=Path(profile) if profile else None,
            mu=validated_data.get("mu"),
            radius=validated_data.get("radius"),
            r_max=validated_data["r_max"],
            grid_points=validated_data["grid_points"],
            r_end=validated_data["r_end"],
            jobs=validated_data.get("jobs"),
            markers=validated_data["markers"],
            multipliers=validated_data["multipliers"],
        )
