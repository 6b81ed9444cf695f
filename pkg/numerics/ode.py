"""
Embedded Cash-Karp 5(4) Runge-Kutta integrator with adaptive steps
"""
import logging
from dataclasses import dataclass

import numpy as np
from django.db import models

from numerics.exceptions import StepUnderflow
from numerics.specs import OdeSpec

EVAL_STAGES = [0.0, 1 / 5, 3 / 10, 3 / 5, 1, 7 / 8]

BT = {
    0: [1 / 5],
    1: [3 / 40, 9 / 40],
    2: [3 / 10, -9 / 10, 6 / 5],
    3: [-11 / 54, 5 / 2, -70 / 27, 35 / 27],
    4: [1631 / 55296, 175 / 512, 575 / 13824, 44275 / 110592, 253 / 4096],
    5: [37 / 378, 0, 250 / 621, 125 / 594, 0, 512 / 1771],
}

# fifth minus fourth order weights
TR = [-277 / 64512, 0, 6925 / 370944, -6925 / 202752, -277 / 14336, 277 / 7084]

SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 5.0


class OdeOutcome(models.TextChoices):
    COMPLETED = "Completed"
    BLOW_UP = "BlowUp"
    ESCAPED = "Escaped"


@dataclass
class Trajectory:
    """
    Accepted nodes of an integration run
    """

    r: np.ndarray
    states: np.ndarray
    outcome: str

    @property
    def final_r(self):
        return float(self.r[-1])

    @property
    def final_state(self):
        return self.states[-1]

    @property
    def blew_up(self):
        return self.outcome == OdeOutcome.BLOW_UP

    @property
    def escaped(self):
        return self.outcome == OdeOutcome.ESCAPED


def taylor_seed(value, second_derivative, h):
    """
    State at r = h of a regular solution with zero slope at the origin.
    """
    return np.array([value + 0.5 * h * h * second_derivative, h * second_derivative])


def cash_karp_step(rhs, r, y, h, k1):
    stages = [k1]
    for i in range(5):
        increment = sum(coef * k for coef, k in zip(BT[i], stages) if coef)
        stages.append(np.asarray(rhs(r + EVAL_STAGES[i + 1] * h, y + h * increment), dtype=float))
    y_new = y + h * sum(coef * k for coef, k in zip(BT[5], stages) if coef)
    error = h * sum(coef * k for coef, k in zip(TR, stages) if coef)
    return y_new, error


def rk_adaptive(rhs, r0, state0, r_end, spec=None, escape=None):
    """
    Integrate y' = rhs(r, y) from r0 to r_end.
    Stops early with outcome BlowUp when a component exceeds the blow-up
    threshold, or with outcome Escaped when escape(r, y) returns True.
    """
    spec = spec or OdeSpec()
    if r_end < r0:
        raise ValueError(f"r_end {r_end} lies before r0 {r0}")
    y = np.atleast_1d(np.asarray(state0, dtype=float)).copy()
    k1 = np.asarray(rhs(r0, y), dtype=float)
    if not (np.all(np.isfinite(y)) and np.all(np.isfinite(k1))):
        raise ValueError(f"Right-hand side is not finite at r = {r0}")

    r = float(r0)
    nodes = [r]
    states = [y.copy()]
    outcome = OdeOutcome.COMPLETED
    if np.max(np.abs(y)) > spec.blowup_threshold:
        return Trajectory(np.array(nodes), np.array(states), OdeOutcome.BLOW_UP)

    h = spec.initial_step
    while r < r_end:
        step = min(h, r_end - r)
        y_new, error = cash_karp_step(rhs, r, y, step, k1)
        if np.all(np.isfinite(y_new)) and np.all(np.isfinite(error)):
            scale = spec.error_tol * (1.0 + np.maximum(np.abs(y), np.abs(y_new)))
            norm = float(np.max(np.abs(error) / scale))
        else:
            norm = np.inf

        if norm <= 1.0:
            r = r_end if step >= r_end - r else r + step
            y = y_new
            nodes.append(r)
            states.append(y.copy())
            if np.max(np.abs(y)) > spec.blowup_threshold:
                outcome = OdeOutcome.BLOW_UP
                break
            if escape is not None and escape(r, y):
                outcome = OdeOutcome.ESCAPED
                break
            k1 = np.asarray(rhs(r, y), dtype=float)
            factor = MAX_FACTOR if norm == 0 else min(MAX_FACTOR, SAFETY * norm**-0.2)
            h = min(step * factor, spec.max_step)
        else:
            factor = MIN_FACTOR if not np.isfinite(norm) else max(MIN_FACTOR, SAFETY * norm**-0.2)
            h = step * factor
            if h < spec.min_step:
                logging.error("Step underflow at r = %s (h = %s)", r, h)
                raise StepUnderflow(f"Step {h} fell below min_step {spec.min_step} at r = {r}")

    logging.debug(
        "Integration finished at r = %s after %s steps with outcome %s", r, len(nodes) - 1, outcome
    )
    return Trajectory(np.array(nodes), np.array(states), outcome)
