"""
Radial test-field quantities built from Kummer functions.

Every rho-weighted quantity is evaluated through the scaled series
e^-xi M(a, b, xi) with xi = r^2/4, so none of them underflows before
the scaled series gives out.
"""
import math

from fields.exceptions import MuZero
from kummer.functions import kummer_m, kummer_m_scaled


def xi_of(r):
    return r * r / 4


def _check_radius(r):
    if r < 0:
        raise ValueError(f"Radius must be nonnegative, got {r}")


def weight_rho(r):
    _check_radius(r)
    return math.exp(-r * r / 4)


def sigma(params, mu, r):
    """
    sigma_mu = M(1 - mu, n/2 + 1, r^2/4) rho
    """
    _check_radius(r)
    return kummer_m_scaled(1 - mu, params.half_n + 1, xi_of(r))


def q_field(params, mu, r):
    """
    Q_mu = n M(-mu, n/2, r^2/4), normalised to Q_mu(0) = n
    """
    _check_radius(r)
    return params.n * kummer_m(-mu, params.half_n, xi_of(r))


def psi(params, mu, r):
    _check_radius(r)
    if mu == 0:
        raise MuZero("psi_mu is undefined for mu = 0")
    return params.n / mu * (1 - kummer_m(-mu, params.half_n, xi_of(r)))


def div_phi(params, mu, r):
    """
    Divergence of Phi_mu = Q_mu rho
    """
    _check_radius(r)
    return params.n * kummer_m_scaled(-mu, params.half_n, xi_of(r))


def neg_r_sigma_prime(params, mu, r):
    _check_radius(r)
    half_n = params.half_n
    factor = (half_n + mu) / (half_n + 1)
    return factor * kummer_m_scaled(1 - mu, half_n + 2, xi_of(r)) * r * r / 2


def sigma_prime_plus(params, mu, r):
    """
    sigma_mu' + (r/2) sigma_mu
    """
    _check_radius(r)
    if mu == 1:
        return 0.0
    half_n = params.half_n
    return r / 2 * (1 - mu) / (half_n + 1) * kummer_m_scaled(2 - mu, half_n + 2, xi_of(r))


def ij_coeffs(params, mu, r):
    """
    Coefficients of <alpha, A alpha> = |alpha|^2 I + <alpha, nu>^2 J.
    """
    i_coef = params.pohozaev_coefficient * sigma(params, mu, r) + params.drift_coefficient * (
        neg_r_sigma_prime(params, mu, r)
    )
    j_coef = r * sigma_prime_plus(params, mu, r)
    return i_coef, j_coef


def pi_profile(params, r):
    """
    Pi_lambda = I + J with mu = lambda
    """
    i_coef, j_coef = ij_coeffs(params, params.lam, r)
    return i_coef + j_coef


def pi_simplified(params, r):
    """
    Closed form of Pi_lambda at the Sobolev exponent, n >= 3.
    """
    if not params.is_critical:
        raise ValueError("The simplified form of Pi holds only for p = p_S and n >= 3.")
    _check_radius(r)
    lam = params.lam
    half_n = params.half_n
    xi = xi_of(r)
    u1 = kummer_m_scaled(2 - lam, half_n + 2, xi)
    u2 = kummer_m_scaled(1 - lam, half_n + 2, xi)
    bracket = (1 - lam) * u1 + (half_n + lam) * u2 / params.n
    return bracket / (half_n + 1) * r * r / 2


def pi_origin_limit(params):
    """
    Limit of Pi_lambda / r^2 at the origin in the critical case n >= 3.
    Otherwise the value Pi_lambda(0) = n/(p+1) - (n-2)/2.
    """
    if params.is_critical:
        lam = params.lam
        n = params.n
        return ((1 - lam) + (n / 2 + lam) / n) / (n + 2)
    return params.pohozaev_coefficient


def q_prime_weighted(params, mu, r):
    """
    rho Q_mu' = -mu r sigma_mu
    """
    return -mu * r * sigma(params, mu, r)


def a_normal(params, mu, r):
    """
    Normal component <a, nu> = (rho Q_mu' + lambda r sigma_mu) / (2(p+1))
    """
    return (q_prime_weighted(params, mu, r) + params.lam * r * sigma(params, mu, r)) / (
        2 * (params.p + 1)
    )


def div_a(params, mu, r):
    """
    Divergence of the vector field a, (lambda - mu)/(2(p+1)) div Phi_mu
    """
    if mu == params.lam:
        return 0.0
    return (params.lam - mu) / (2 * (params.p + 1)) * div_phi(params, mu, r)


def pi_bracket(params, r):
    """
    (1 - lambda)/(n/2 + lambda) u1 + u2/n
    """
    lam = params.lam
    half_n = params.half_n
    xi = xi_of(r)
    u1 = kummer_m(2 - lam, half_n + 2, xi)
    u2 = kummer_m(1 - lam, half_n + 2, xi)
    return (1 - lam) / (half_n + lam) * u1 + u2 / params.n


def pi_bracket_prime(params, r):
    lam = params.lam
    half_n = params.half_n
    xi = xi_of(r)
    inner = (2 - lam) / (half_n + lam) * kummer_m(3 - lam, half_n + 3, xi) + kummer_m(
        2 - lam, half_n + 3, xi
    ) / params.n
    return -(lam - 1) / (half_n + 2) * inner * r / 2
