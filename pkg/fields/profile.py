"""
Sampled radial field profiles
"""
import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from fields.functions import ij_coeffs, neg_r_sigma_prime, q_field, sigma, sigma_prime_plus

PROFILE_COLUMNS = ["r", "sigma", "q", "I", "J", "pi"]


@dataclass
class FieldProfile:
    """
    Field Profile
    """

    grid: np.ndarray
    sigma: np.ndarray
    q: np.ndarray
    neg_r_sigma_prime: np.ndarray
    sigma_prime_plus: np.ndarray
    i_coef: np.ndarray
    j_coef: np.ndarray
    pi: np.ndarray

    def to_dataframe(self):
        return pd.DataFrame(
            {
                "r": self.grid,
                "sigma": self.sigma,
                "q": self.q,
                "I": self.i_coef,
                "J": self.j_coef,
                "pi": self.pi,
            },
            columns=PROFILE_COLUMNS,
        )


def default_grid(r_max=10.0, points=201):
    return np.linspace(0.0, r_max, points)


def build_profile(params, mu=None, grid=None):
    """
    Sample sigma_mu, Q_mu, I_mu, J_mu and their sum on a radial grid.
    """
    mu = params.field_mu if mu is None else mu
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    if grid.ndim != 1 or np.any(grid < 0) or np.any(np.diff(grid) <= 0):
        raise ValueError("Grid must be a strictly increasing array of nonnegative radii.")

    logging.debug("Building field profile for %s, mu=%s on %s points", params, mu, grid.size)
    coefficients = np.array([ij_coeffs(params, mu, r) for r in grid]).reshape(-1, 2)
    i_coef = coefficients[:, 0]
    j_coef = coefficients[:, 1]
    return FieldProfile(
        grid=grid,
        sigma=np.array([sigma(params, mu, r) for r in grid]),
        q=np.array([q_field(params, mu, r) for r in grid]),
        neg_r_sigma_prime=np.array([neg_r_sigma_prime(params, mu, r) for r in grid]),
        sigma_prime_plus=np.array([sigma_prime_plus(params, mu, r) for r in grid]),
        i_coef=i_coef,
        j_coef=j_coef,
        pi=i_coef + j_coef,
    )
