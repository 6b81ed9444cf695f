"""
PREFIX.csv / PREFIX.json artifact pair for shot profiles
"""
import json
import logging
from pathlib import Path

import pandas as pd
from rest_framework.renderers import JSONRenderer

from fields.params import ProblemParams
from shooting.profiles import ShootOutcome, ShootResult
from shooting.serializers import ShootResultSerializer

CSV_OPTIONS = {"index": False, "float_format": "%.17g", "lineterminator": "\n"}


def artifact_paths(prefix):
    prefix = Path(prefix)
    return prefix.with_name(prefix.name + ".csv"), prefix.with_name(prefix.name + ".json")


def write_profile(result, prefix):
    csv_path, json_path = artifact_paths(prefix)
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    result.to_dataframe().to_csv(csv_path, **CSV_OPTIONS)
    json_path.write_bytes(JSONRenderer().render(ShootResultSerializer(result).data))
    logging.info("Wrote profile artifacts %s and %s", csv_path, json_path)
    return csv_path, json_path


def read_profile(prefix):
    csv_path, json_path = artifact_paths(prefix)
    if not csv_path.exists() or not json_path.exists():
        raise FileNotFoundError(f"Profile artifacts {csv_path} and {json_path} are required")
    summary = json.loads(json_path.read_text(encoding="utf-8"))
    frame = pd.read_csv(csv_path, float_precision="round_trip")
    raw = summary["params"]
    params = ProblemParams(n=raw["n"], p=raw["p"], lam=raw["lambda"], mu=raw["mu"])
    return ShootResult(
        params=params,
        alpha=summary["alpha"],
        grid=frame["r"].to_numpy(dtype=float),
        w=frame["w"].to_numpy(dtype=float),
        w_prime=frame["w_prime"].to_numpy(dtype=float),
        outcome=ShootOutcome(summary["outcome"]),
        escape_radius=summary.get("escape_radius"),
        fate=summary.get("fate", 0),
        faithful_radius=summary.get("faithful_radius"),
    )
