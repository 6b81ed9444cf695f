"""
Nonlinearity f_lambda(s) = -lambda/(p-1) s + |s|^(p-1) s, its primitive
and the radial energy built from them.
"""
import math

import numpy as np


def _check_exponent(p):
    if not p > 1:
        raise ValueError(f"p must be greater than 1, got {p}")


def nonlinearity(lam, p, s):
    return -lam / (p - 1) * s + np.abs(s) ** (p - 1) * s


def primitive(lam, p, s):
    return -lam / (2 * (p - 1)) * s * s + np.abs(s) ** (p + 1) / (p + 1)


def constant_solutions(lam, p):
    """
    Zeros of f_lambda, in increasing order.
    """
    _check_exponent(p)
    if lam <= 0:
        return [0.0]
    kappa = (lam / (p - 1)) ** (1 / (p - 1))
    return [-kappa, 0.0, kappa]


def energy(params, w, w_prime):
    """
    E = w'^2/2 + F(w), nondecreasing in r beyond sqrt(2(n-1))
    """
    return 0.5 * w_prime * w_prime + primitive(params.lam, params.p, w)


def monotone_radius(n):
    return math.sqrt(2 * (n - 1))
