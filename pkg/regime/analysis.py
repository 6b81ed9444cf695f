"""
Definiteness of the matrix field A over (n, p, lambda)
"""
import logging
import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
from django.db import models

from fields.functions import ij_coeffs, pi_origin_limit, pi_profile, xi_of
from kummer.functions import kummer_m, polynomial_degree
from kummer.gamma import gamma, reciprocal_gamma
from numerics.roots import bisect
from regime.exceptions import DomainError
from regime.sturm import sturm_markers

SCAN_START = 1e-3
ZERO_REL_TOL = 1e-13
BOUNDARY_TOL = 1e-12


class Classification(models.TextChoices):
    POSITIVE_DEFINITE = "PositiveDefinite"
    NEGATIVE_DEFINITE_RADIAL = "NegativeDefiniteRadial"
    INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class SignChange:
    """
    Sign Change
    """

    quantity: str
    r: float
    sign: int


@dataclass
class RegimeReport:
    """
    Regime Report
    """

    params: object
    mu: float
    classification: str
    analytic_prediction: str
    evidence: list = field(default_factory=list)
    origin_limit: float = 0.0
    markers: Optional[object] = None

    @property
    def first_sign_change_r(self):
        if not self.evidence:
            return None
        return min(change.r for change in self.evidence)

    @property
    def agrees(self):
        return self.classification == self.analytic_prediction


def analytic_prediction(params, mu=None):
    """
    Closed-form regime: positive definite for mu in [-n/2, 1] and p <= p_S,
    negative definite in the radial direction for p = p_S, n >= 4 and
    lambda in [lambda_star, 2], indefinite otherwise.
    """
    mu = params.field_mu if mu is None else mu
    n = params.n
    below_sobolev = params.is_critical or params.p < params.p_s
    if -n / 2 - BOUNDARY_TOL <= mu <= 1 + BOUNDARY_TOL and below_sobolev:
        return Classification.POSITIVE_DEFINITE
    if (
        params.is_critical
        and n >= 4
        and math.isclose(mu, params.lam, abs_tol=BOUNDARY_TOL)
        and params.lambda_star - BOUNDARY_TOL <= params.lam <= 2 + BOUNDARY_TOL
    ):
        return Classification.NEGATIVE_DEFINITE_RADIAL
    return Classification.INDEFINITE


def _signs(values, tol):
    signs = np.sign(values)
    signs[np.abs(values) <= tol] = 0
    return signs


def _sign_changes(quantity, grid, values, tol, evaluate):
    changes = []
    signs = _signs(values, tol)
    last_index = None
    for index, sign in enumerate(signs):
        if sign == 0:
            continue
        if last_index is not None and sign != signs[last_index]:
            lo, hi = grid[last_index], grid[index]
            if index == last_index + 1:
                r = bisect(evaluate, lo, hi, f_lo=values[last_index], f_hi=values[index])
            else:
                r = 0.5 * (lo + hi)
            changes.append(SignChange(quantity, float(r), int(sign)))
        last_index = index
    return changes


def classify(params, r_max=30.0, grid_points=600, mu=None, with_markers=False):
    """
    Scan I, J and their sum for sign changes on (0, r_max] and classify A.
    """
    if r_max < 30 or grid_points < 500:
        raise ValueError("classify needs r_max >= 30 and grid_points >= 500.")
    mu = params.field_mu if mu is None else mu
    grid = np.linspace(SCAN_START, r_max, int(grid_points))
    coefficients = np.array([ij_coeffs(params, mu, r) for r in grid])
    i_values = coefficients[:, 0]
    j_values = coefficients[:, 1]
    pi_values = i_values + j_values

    tolerances = {
        name: ZERO_REL_TOL * np.max(np.abs(values))
        for name, values in (("I", i_values), ("J", j_values), ("pi", pi_values))
    }
    evaluators = {
        "I": lambda r: ij_coeffs(params, mu, r)[0],
        "J": lambda r: ij_coeffs(params, mu, r)[1],
        "pi": lambda r: sum(ij_coeffs(params, mu, r)),
    }
    evidence = []
    for name, values in (("I", i_values), ("J", j_values), ("pi", pi_values)):
        evidence.extend(_sign_changes(name, grid, values, tolerances[name], evaluators[name]))
    evidence.sort(key=lambda change: change.r)

    # n = 1 has no tangential directions
    tangential_ok = params.n == 1 or np.all(i_values >= -tolerances["I"])
    radial_nonnegative = np.all(pi_values >= -tolerances["pi"])
    radial_negative = np.all(pi_values <= tolerances["pi"]) and np.any(pi_values < -tolerances["pi"])
    if tangential_ok and radial_nonnegative:
        classification = Classification.POSITIVE_DEFINITE
    elif radial_negative:
        classification = Classification.NEGATIVE_DEFINITE_RADIAL
    else:
        classification = Classification.INDEFINITE

    markers = None
    if with_markers and params.lam > 2:
        markers = sturm_markers(params)

    report = RegimeReport(
        params=params,
        mu=mu,
        classification=classification,
        analytic_prediction=analytic_prediction(params, mu),
        evidence=evidence,
        origin_limit=pi_origin_limit(replace(params, lam=mu)),
        markers=markers,
    )
    logging.info(
        "Classified n=%s p=%s lambda=%s mu=%s as %s (analytic %s, %s sign changes)",
        params.n,
        params.p,
        params.lam,
        mu,
        report.classification,
        report.analytic_prediction,
        len(evidence),
    )
    return report


def asymptotic_sign(lam):
    """
    Sign of Pi_lambda for large r, lambda > 1.
    """
    if lam <= 1:
        raise DomainError(f"The asymptotic sign is defined for lambda > 1, got {lam}")
    m = round(lam)
    if abs(lam - m) < BOUNDARY_TOL:
        return 1 if (m - 1) % 2 == 0 else -1
    return 1 if (1 - lam) * reciprocal_gamma(2 - lam) > 0 else -1


def pi_scaled(params, r):
    """
    (r^2/4)^(n/2 + lambda - 1) Pi_lambda(r)
    """
    return pi_profile(params, r) * xi_of(r) ** (params.half_n + params.lam - 1)


def pi_scaled_limit(params):
    """
    Large-r limit of pi_scaled at the Sobolev exponent for non-integer lambda > 1.
    """
    lam = params.lam
    if lam <= 1 or polynomial_degree(2 - lam) is not None or not params.is_critical:
        raise DomainError("The scaled limit needs p = p_S, n >= 3 and non-integer lambda > 1.")
    half_n = params.half_n
    return 2 * (1 - lam) / (half_n + 1) * gamma(half_n + 2) * reciprocal_gamma(2 - lam)


def pi_at_u2_root(params, r):
    """
    Pi_lambda / rho at a root r of u2, where only the u1 and u3 terms survive.
    """
    lam = params.lam
    half_n = params.half_n
    xi = xi_of(r)
    u1 = kummer_m(2 - lam, half_n + 2, xi)
    u3 = kummer_m(1 - lam, half_n + 1, xi)
    return params.pohozaev_coefficient * u3 - (lam - 1) / (params.n + 2) * u1 * r * r
