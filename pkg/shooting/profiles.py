"""
Radial shooting for w'' + ((n-1)/r - r/2) w' + f_lambda(w) = 0,
w(0) = alpha, w'(0) = 0.
"""
import logging
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
import pandas as pd
from django.db import models
from scipy.interpolate import BPoly

from numerics.ode import rk_adaptive, taylor_seed
from numerics.specs import OdeSpec
from shooting.nonlinearity import (
    constant_solutions,
    energy,
    monotone_radius,
    nonlinearity,
)

SEED_STEP = 1e-4
DEFAULT_R_END = 15.0
MAX_R_END = 40.0
ESCAPE_ENERGY = 1e-9
CONSTANT_TOL = 1e-6
DECAY_FRACTION = 0.1
STATIONARY_TOL = 1e-14

PROFILE_COLUMNS = ["r", "w", "w_prime"]


class ShootOutcome(models.TextChoices):
    BLOW_UP = "BlowUp"
    CROSSED_ZERO_AND_DECAYED = "CrossedZeroAndDecayed"
    BOUNDED_CANDIDATE = "BoundedCandidate"
    CONVERGED_TO_CONSTANT = "ConvergedToConstant"


def second_derivatives(params, grid, w, w_prime):
    """
    w'' from the equation itself, with w''(0) = -f(w(0))/n at the origin.
    """
    grid = np.asarray(grid, dtype=float)
    w = np.asarray(w, dtype=float)
    w_prime = np.asarray(w_prime, dtype=float)
    forcing = nonlinearity(params.lam, params.p, w)
    safe_r = np.where(grid > 0, grid, 1.0)
    drift = ((params.n - 1) / safe_r - safe_r / 2) * w_prime
    return np.where(grid > 0, -drift - forcing, -forcing / params.n)


@dataclass
class ShootResult:
    """
    Shoot Result
    """

    params: object
    alpha: float
    grid: np.ndarray
    w: np.ndarray
    w_prime: np.ndarray
    outcome: str
    escape_radius: Optional[float] = None
    faithful_radius: Optional[float] = None
    # +1 escaped away from zero, -1 escaped back through it, 0 never escaped
    fate: int = 0

    @property
    def r_end(self):
        return float(self.grid[-1])

    @property
    def w_second(self):
        return second_derivatives(self.params, self.grid, self.w, self.w_prime)

    def faithful_mask(self):
        if self.faithful_radius is None:
            return np.ones_like(self.grid, dtype=bool)
        return self.grid <= self.faithful_radius

    @property
    def sup_norm(self):
        return float(np.max(np.abs(self.w[self.faithful_mask()])))

    def covers(self, radius):
        limit = self.r_end if self.faithful_radius is None else self.faithful_radius
        return radius <= limit * (1 + 1e-12)

    def interpolant(self):
        """
        Quintic Hermite interpolant through w, w' and w'' at the nodes.
        """
        nodes = np.column_stack([self.w, self.w_prime, self.w_second])
        return BPoly.from_derivatives(self.grid, nodes)

    def energy(self):
        return energy(self.params, self.w, self.w_prime)

    def truncated(self, radius):
        mask = self.grid <= radius
        return replace(
            self,
            grid=self.grid[mask],
            w=self.w[mask],
            w_prime=self.w_prime[mask],
            faithful_radius=float(radius),
        )

    def to_dataframe(self):
        return pd.DataFrame(
            {"r": self.grid, "w": self.w, "w_prime": self.w_prime}, columns=PROFILE_COLUMNS
        )


def is_stationary(params, alpha):
    scale = max(1.0, abs(alpha) ** params.p)
    return abs(nonlinearity(params.lam, params.p, alpha)) <= STATIONARY_TOL * scale


def constant_profile(params, c, r_end=DEFAULT_R_END, points=301):
    """
    The exact profile w = c for a zero c of f_lambda.
    """
    if not is_stationary(params, c):
        raise ValueError(f"{c} is not a constant solution for lambda={params.lam}, p={params.p}")
    if points < 2 or not r_end > 0:
        raise ValueError("A constant profile needs r_end > 0 and at least 2 points.")
    grid = np.linspace(0.0, r_end, int(points))
    return ShootResult(
        params=params,
        alpha=float(c),
        grid=grid,
        w=np.full_like(grid, float(c)),
        w_prime=np.zeros_like(grid),
        outcome=ShootOutcome.CONVERGED_TO_CONSTANT,
    )


def classify_outcome(params, alpha, w, w_prime, blew_up):
    if blew_up:
        return ShootOutcome.BLOW_UP
    w_end, w_prime_end = float(w[-1]), float(w_prime[-1])
    constants = constant_solutions(params.lam, params.p)
    if abs(w_prime_end) < CONSTANT_TOL and any(abs(w_end - c) < CONSTANT_TOL for c in constants):
        return ShootOutcome.CONVERGED_TO_CONSTANT
    crossed = bool(np.any(np.asarray(w) * alpha < 0))
    if crossed and abs(w_end) < DECAY_FRACTION * abs(alpha):
        return ShootOutcome.CROSSED_ZERO_AND_DECAYED
    return ShootOutcome.BOUNDED_CANDIDATE


def radial_rhs(params):
    n, lam, p = params.n, params.lam, params.p

    def rhs(r, y):
        w, w_prime = y
        return np.array([w_prime, -((n - 1) / r - r / 2) * w_prime - nonlinearity(lam, p, w)])

    return rhs


def _escape_criterion(params):
    radius = monotone_radius(params.n)

    def escaped(r, y):
        return r > radius and energy(params, y[0], y[1]) > ESCAPE_ENERGY

    return escaped


def integrate_profile(params, alpha, r_end=DEFAULT_R_END, ode=None, stop_on_escape=True):
    """
    Shoot from w(0) = alpha. Once the energy is positive beyond the radius
    where it turns monotone the profile cannot settle on a constant, so the
    run stops there and records where and in which direction it escaped.
    The outcome only reads BlowUp when |w| crossed the blow-up threshold.
    """
    if not math.isfinite(alpha):
        raise ValueError(f"alpha must be finite, got {alpha}")
    if not 0 < r_end <= MAX_R_END:
        raise ValueError(f"r_end must lie in (0, {MAX_R_END}], got {r_end}")
    if is_stationary(params, alpha):
        logging.debug("alpha = %s is a constant solution", alpha)
        return constant_profile(params, alpha, r_end)

    ode = ode or OdeSpec()
    h = min(SEED_STEP, r_end / 2)
    seed = taylor_seed(alpha, -nonlinearity(params.lam, params.p, alpha) / params.n, h)
    escape = _escape_criterion(params) if stop_on_escape else None
    trajectory = rk_adaptive(radial_rhs(params), h, seed, r_end, spec=ode, escape=escape)

    grid = np.concatenate([[0.0], trajectory.r])
    w = np.concatenate([[float(alpha)], trajectory.states[:, 0]])
    w_prime = np.concatenate([[0.0], trajectory.states[:, 1]])
    outcome = classify_outcome(params, alpha, w, w_prime, trajectory.blew_up)
    departed = trajectory.escaped or trajectory.blew_up
    result = ShootResult(
        params=params,
        alpha=float(alpha),
        grid=grid,
        w=w,
        w_prime=w_prime,
        outcome=outcome,
        escape_radius=trajectory.final_r if trajectory.escaped else None,
        fate=int(np.sign(w[-1] * w_prime[-1])) if departed else 0,
    )
    logging.debug(
        "Shot alpha = %s ended at r = %s with %s, fate %s",
        alpha,
        result.r_end,
        outcome,
        result.fate,
    )
    return result
