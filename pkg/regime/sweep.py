"""
Regime map over a grid of (n, lambda) at a fixed p.
Kept free of settings and serializers so worker processes can import it.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import pandas as pd

from fields.params import ProblemParams, sobolev_exponent
from regime.analysis import classify

SWEEP_COLUMNS = ["n", "p", "lambda", "classification", "first_sign_change_r"]
RANGE_TOL = 1e-12


@dataclass(frozen=True)
class SweepPoint:
    """
    Sweep Point
    """

    n: int
    p: float
    lam: float
    r_max: float = 30.0
    grid_points: int = 600


def parse_range(text):
    """
    Parse "start:stop:step" (inclusive), "a,b,c" or a single value.
    """
    text = str(text).strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"Range must look like start:stop:step, got {text!r}")
        start, stop, step = (float(part) for part in parts)
        if step <= 0 or stop < start:
            raise ValueError(f"Range {text!r} needs step > 0 and start <= stop")
        count = int(math.floor((stop - start) / step + RANGE_TOL)) + 1
        values = [start + k * step for k in range(count)]
        if stop - values[-1] > RANGE_TOL and abs(values[-1] + step - stop) <= RANGE_TOL:
            values.append(stop)
        return values
    if "," in text:
        return [float(part) for part in text.split(",") if part.strip()]
    return [float(text)]


def resolve_p(p_spec, n):
    if str(p_spec).strip().lower() == "ps":
        p = sobolev_exponent(n)
        if math.isinf(p):
            raise ValueError(f"The Sobolev exponent is infinite for n = {n}")
        return p
    return float(p_spec)


def build_points(n_values, lambda_values, p_spec, r_max=30.0, grid_points=600):
    return [
        SweepPoint(int(n), resolve_p(p_spec, int(n)), float(lam), r_max, grid_points)
        for n in n_values
        for lam in lambda_values
    ]


def sweep_point(point):
    params = ProblemParams(n=point.n, p=point.p, lam=point.lam)
    report = classify(params, r_max=point.r_max, grid_points=point.grid_points)
    return {
        "n": point.n,
        "p": point.p,
        "lambda": point.lam,
        "classification": str(report.classification),
        "first_sign_change_r": report.first_sign_change_r,
    }


def run_sweep(points, jobs=1):
    """
    Classify every point, in input order, on up to `jobs` worker processes.
    """
    points = list(points)
    logging.info("Sweeping %s points with %s jobs", len(points), jobs)
    if jobs <= 1 or len(points) <= 1:
        rows = [sweep_point(point) for point in points]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(sweep_point, points))
    return rows_to_dataframe(rows)


def rows_to_dataframe(rows):
    return pd.DataFrame(list(rows), columns=SWEEP_COLUMNS)
